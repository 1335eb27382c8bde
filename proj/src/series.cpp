#include "bhz/series.hpp"

#include <algorithm>
#include <sstream>

namespace bhz {

int var_weight(VarId v) {
    Fam f = var_fam(v);
    if (f == Fam::Ptil || f == Fam::X) return var_index(v);
    return 0;
}

std::string var_name(VarId v) {
    switch (var_fam(v)) {
        case Fam::T: return "t";
        case Fam::H: return "hbar";
        case Fam::Lam: return "Lambda";
        case Fam::Ptil: return "p" + std::to_string(var_index(v));
        case Fam::X:
            return "x" + std::to_string(var_color(v)) + "_" + std::to_string(var_index(v));
        case Fam::P: return "P" + std::to_string(var_index(v));
        case Fam::Q: return "Q" + std::to_string(var_index(v));
        case Fam::U: return "u" + std::to_string(var_index(v));
        case Fam::W: return "w" + std::to_string(var_index(v));
    }
    return "?";
}

Monomial Monomial::var(VarId v, int exp) {
    Monomial m;
    if (exp != 0) m.e_.push_back({v, exp});
    return m;
}

int Monomial::exponent(VarId v) const {
    auto it = std::lower_bound(e_.begin(), e_.end(), v,
                               [](const auto& a, VarId b) { return a.first < b; });
    return (it != e_.end() && it->first == v) ? it->second : 0;
}

int Monomial::state_degree() const {
    int d = 0;
    for (const auto& [v, e] : e_) d += var_weight(v) * e;
    return d;
}

Monomial Monomial::times(const Monomial& o) const {
    Monomial r;
    r.e_.reserve(e_.size() + o.e_.size());
    size_t i = 0, j = 0;
    while (i < e_.size() || j < o.e_.size()) {
        if (j >= o.e_.size() || (i < e_.size() && e_[i].first < o.e_[j].first)) {
            r.e_.push_back(e_[i++]);
        } else if (i >= e_.size() || o.e_[j].first < e_[i].first) {
            r.e_.push_back(o.e_[j++]);
        } else {
            int exp = e_[i].second + o.e_[j].second;
            if (exp != 0) r.e_.push_back({e_[i].first, exp});
            ++i;
            ++j;
        }
    }
    return r;
}

Monomial Monomial::times_var(VarId v, int exp) const {
    return times(Monomial::var(v, exp));
}

bool Monomial::within(const TruncSpec& ts) const {
    int t = 0, h = 0, lam = 0, deg = 0;
    for (const auto& [v, e] : e_) {
        switch (var_fam(v)) {
            case Fam::T: t = e; break;
            case Fam::H: h = e; break;
            case Fam::Lam: lam = e; break;
            default: deg += var_weight(v) * e; break;
        }
    }
    return t <= ts.t_max && h >= ts.h_min && h <= ts.h_max && deg <= ts.state_deg_max &&
           lam >= ts.lam_min && lam <= ts.lam_max;
}

int Monomial::cmp(const Monomial& a, const Monomial& b) {
    int at = a.t_exp(), bt = b.t_exp();
    if (at != bt) return at < bt ? -1 : 1;
    int ah = a.h_exp(), bh = b.h_exp();
    if (ah != bh) return ah < bh ? -1 : 1;
    int ad = a.state_degree(), bd = b.state_degree();
    if (ad != bd) return ad < bd ? -1 : 1;
    // remaining: lexicographic on the sorted entry lists
    size_t n = std::min(a.e_.size(), b.e_.size());
    for (size_t i = 0; i < n; ++i) {
        if (a.e_[i].first != b.e_[i].first) return a.e_[i].first < b.e_[i].first ? -1 : 1;
        if (a.e_[i].second != b.e_[i].second) return a.e_[i].second < b.e_[i].second ? -1 : 1;
    }
    if (a.e_.size() != b.e_.size()) return a.e_.size() < b.e_.size() ? -1 : 1;
    return 0;
}

std::string Monomial::str() const {
    if (e_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, e] : e_) {
        if (!first) os << "*";
        os << var_name(v);
        if (e != 1) os << "^" << e;
        first = false;
    }
    return os.str();
}

SeriesElem SeriesElem::constant(ParamScalar c, TruncSpec ts) {
    SeriesElem r(ts);
    r.add_term(Monomial(), c);
    return r;
}

SeriesElem SeriesElem::variable(VarId v, TruncSpec ts) {
    SeriesElem r(ts);
    r.add_term(Monomial::var(v), ParamScalar::one());
    return r;
}

void SeriesElem::add_term(const Monomial& m, const ParamScalar& c) {
    if (c.is_zero() || !m.within(ts_)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ParamScalar SeriesElem::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? ParamScalar::zero() : it->second;
}

void SeriesElem::check_compatible(const SeriesElem& o) const {
    if (!(ts_ == o.ts_)) throw config_error("SeriesElem: incompatible TruncSpec");
}

SeriesElem SeriesElem::operator-() const {
    SeriesElem r(ts_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

SeriesElem& SeriesElem::operator+=(const SeriesElem& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

SeriesElem& SeriesElem::operator-=(const SeriesElem& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

SeriesElem SeriesElem::operator+(const SeriesElem& o) const {
    SeriesElem r = *this;
    r += o;
    return r;
}

SeriesElem SeriesElem::operator-(const SeriesElem& o) const {
    SeriesElem r = *this;
    r -= o;
    return r;
}

SeriesElem SeriesElem::operator*(const SeriesElem& o) const {
    check_compatible(o);
    SeriesElem r(ts_);
    const SeriesElem& small = terms_.size() <= o.terms_.size() ? *this : o;
    const SeriesElem& big = terms_.size() <= o.terms_.size() ? o : *this;
    for (const auto& [ma, ca] : small.terms_) {
        for (const auto& [mb, cb] : big.terms_) {
            Monomial m = ma.times(mb);
            if (!m.within(ts_)) continue;
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

bool SeriesElem::operator==(const SeriesElem& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (const auto& [m, c] : terms_) {
        auto it = o.terms_.find(m);
        if (it == o.terms_.end() || !(it->second == c)) return false;
    }
    return true;
}

SeriesElem SeriesElem::scaled(const ParamScalar& c) const {
    SeriesElem r(ts_);
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.add_term(m, v * c);
    return r;
}

SeriesElem SeriesElem::times_var(VarId v, int exp) const {
    SeriesElem r(ts_);
    for (const auto& [m, c] : terms_) r.add_term(m.times_var(v, exp), c);
    return r;
}

SeriesElem SeriesElem::d_var(VarId v) const {
    SeriesElem r(ts_);
    for (const auto& [m, c] : terms_) {
        int e = m.exponent(v);
        if (e == 0) continue;
        r.add_term(m.times_var(v, -1), c.scaled(Rat(e)));
    }
    return r;
}

SeriesElem SeriesElem::exp_t() const {
    for (const auto& [m, c] : terms_)
        if (m.t_exp() < 1)
            throw std::domain_error("SeriesElem::exp_t: nonzero constant term in t");
    SeriesElem result = SeriesElem::one(ts_);
    SeriesElem power = SeriesElem::one(ts_);
    for (int m = 1; m <= ts_.t_max; ++m) {
        power = power * *this;
        if (power.is_zero()) break;
        result += power.scaled(ParamScalar(Rat(1) / Rat(m)));
        // power now holds this^m / (m-1)!; rescale to keep this^m / m!.
        power = power.scaled(ParamScalar(Rat(1) / Rat(m)));
    }
    return result;
}

SeriesElem SeriesElem::log_t() const {
    SeriesElem u = *this;
    u.add_term(Monomial(), ParamScalar(Rat(-1)));
    for (const auto& [m, c] : u.terms_)
        if (m.t_exp() < 1)
            throw std::domain_error("SeriesElem::log_t: t-constant part is not 1");
    SeriesElem result(ts_);
    SeriesElem power = SeriesElem::one(ts_);
    for (int m = 1; m <= ts_.t_max; ++m) {
        power = power * u;
        if (power.is_zero()) break;
        Rat sign = (m % 2 == 1) ? Rat(1) : Rat(-1);
        result += power.scaled(ParamScalar(sign / Rat(m)));
    }
    return result;
}

SeriesElem SeriesElem::specialize(const std::map<VarId, Rat>& values) const {
    SeriesElem r(ts_);
    for (const auto& [m, c] : terms_) {
        Monomial keep;
        Rat factor(1);
        bool dead = false;
        for (const auto& [v, e] : m.entries()) {
            auto it = values.find(v);
            if (it == values.end()) {
                keep = keep.times_var(v, e);
                continue;
            }
            const Rat& val = it->second;
            if (val == 0) {
                if (e > 0) {
                    dead = true;
                    break;
                }
                throw std::domain_error("SeriesElem::specialize: zero value with negative exponent");
            }
            Rat pw(1);
            for (int k = 0; k < std::abs(e); ++k) pw *= val;
            factor *= (e > 0) ? pw : Rat(1) / pw;
        }
        if (!dead) r.add_term(keep, c.scaled(factor));
    }
    return r;
}

SeriesElem SeriesElem::specialize_s(const Rat& s_value) const {
    SeriesElem r(ts_);
    for (const auto& [m, c] : terms_) r.add_term(m, ParamScalar(c.eval_s(s_value)));
    return r;
}

SeriesElem SeriesElem::rescale_t(const Rat& c) const {
    SeriesElem r(ts_);
    for (const auto& [m, v] : terms_) {
        int n = m.t_exp();
        Rat pw(1);
        for (int k = 0; k < n; ++k) pw *= c;
        r.add_term(m, v.scaled(pw));
    }
    return r;
}

SeriesElem SeriesElem::with_trunc(const TruncSpec& ts) const {
    SeriesElem r(ts);
    for (const auto& [m, c] : terms_) r.add_term(m, c);
    return r;
}

SeriesElem SeriesElem::filter(const std::function<bool(const Monomial&)>& keep) const {
    SeriesElem r(ts_);
    for (const auto& [m, c] : terms_)
        if (keep(m)) r.add_term(m, c);
    return r;
}

void SeriesElem::for_each(const std::function<void(const Monomial&, const ParamScalar&)>& f) const {
    for (const auto& [m, c] : terms_) f(m, c);
}

std::vector<std::pair<Monomial, ParamScalar>> SeriesElem::sorted_terms() const {
    std::vector<std::pair<Monomial, ParamScalar>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return Monomial::cmp(a.first, b.first) < 0; });
    return v;
}

std::string SeriesElem::str() const {
    if (terms_.empty()) return "0\n";
    std::ostringstream os;
    for (const auto& [m, c] : sorted_terms()) os << c.str() << " * " << m.str() << "\n";
    return os.str();
}

}  // namespace bhz
