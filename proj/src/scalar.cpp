#include "bhz/scalar.hpp"

#include <algorithm>
#include <sstream>

namespace bhz {

ParamScalar ParamScalar::s_power(Rat c, int k) {
    ParamScalar r;
    if (c == 0) return r;
    if (k >= 0) {
        r.num_ = Poly::monomial(std::move(c), k);
    } else {
        r.num_ = Poly(std::move(c));
        r.push_den_factor(Poly::monomial(Rat(1), 1), -k);
    }
    return r;
}

ParamScalar ParamScalar::linear_alpha(long a, long b) {
    return alpha_poly({Rat(b), Rat(a)});
}

ParamScalar ParamScalar::alpha_poly(const std::vector<Rat>& cs) {
    std::vector<Rat> s_coeffs(cs.size() * 2 - (cs.empty() ? 0 : 1), Rat(0));
    for (size_t i = 0; i < cs.size(); ++i) s_coeffs[2 * i] = cs[i];
    return ParamScalar(Poly::from_coeffs(std::move(s_coeffs)));
}

ParamScalar ParamScalar::frakb() {
    // 1/s - s = (1 - s^2)/s
    return from_fraction(Poly::from_coeffs({Rat(1), Rat(0), Rat(-1)}), Poly::monomial(Rat(1), 1));
}

ParamScalar ParamScalar::from_fraction(Poly num, Poly den) {
    if (den.is_zero()) throw std::domain_error("ParamScalar: zero denominator");
    ParamScalar r;
    r.num_ = std::move(num);
    Poly prim;
    Rat content = den.content_and_primitive(prim);
    r.num_ = r.num_.scaled(Rat(1) / content);
    if (!prim.is_one()) r.push_den_factor(prim, 1);
    r.tidy();
    return r;
}

void ParamScalar::push_den_factor(const Poly& f, int mult) {
    if (mult == 0) return;
    auto it = std::lower_bound(den_.begin(), den_.end(), f,
                               [](const auto& e, const Poly& g) { return Poly::cmp(e.first, g) < 0; });
    if (it != den_.end() && it->first == f)
        it->second += mult;
    else
        den_.insert(it, {f, mult});
}

void ParamScalar::tidy() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    for (auto it = den_.begin(); it != den_.end();) {
        Poly q;
        while (it->second > 0 && num_.exact_div(it->first, q)) {
            num_ = q;
            --it->second;
        }
        if (it->second == 0)
            it = den_.erase(it);
        else
            ++it;
    }
}

Poly ParamScalar::den_expanded() const {
    Poly d = Poly::one();
    for (const auto& [f, e] : den_) d *= f.pow(static_cast<unsigned>(e));
    return d;
}

bool ParamScalar::is_rational(Rat& out) const {
    if (!num_.is_constant()) return false;
    if (!den_.empty()) {
        // A constant numerator over non-trivial factors can only be zero.
        if (!num_.is_zero()) return false;
    }
    out = num_.is_zero() ? Rat(0) : num_[0];
    return true;
}

ParamScalar ParamScalar::operator-() const {
    ParamScalar r = *this;
    r.num_ = -r.num_;
    return r;
}

ParamScalar ParamScalar::operator+(const ParamScalar& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    ParamScalar r;
    // lcm of the factored denominators
    Poly scale_a = Poly::one(), scale_b = Poly::one();
    size_t i = 0, j = 0;
    while (i < den_.size() || j < o.den_.size()) {
        int c;
        if (i >= den_.size())
            c = 1;
        else if (j >= o.den_.size())
            c = -1;
        else
            c = Poly::cmp(den_[i].first, o.den_[j].first);
        if (c < 0) {
            r.den_.push_back(den_[i]);
            scale_b *= den_[i].first.pow(static_cast<unsigned>(den_[i].second));
            ++i;
        } else if (c > 0) {
            r.den_.push_back(o.den_[j]);
            scale_a *= o.den_[j].first.pow(static_cast<unsigned>(o.den_[j].second));
            ++j;
        } else {
            int e = std::max(den_[i].second, o.den_[j].second);
            r.den_.push_back({den_[i].first, e});
            if (e > den_[i].second)
                scale_a *= den_[i].first.pow(static_cast<unsigned>(e - den_[i].second));
            if (e > o.den_[j].second)
                scale_b *= o.den_[j].first.pow(static_cast<unsigned>(e - o.den_[j].second));
            ++i;
            ++j;
        }
    }
    r.num_ = num_ * scale_a + o.num_ * scale_b;
    r.tidy();
    return r;
}

ParamScalar ParamScalar::operator-(const ParamScalar& o) const { return *this + (-o); }

ParamScalar ParamScalar::operator*(const ParamScalar& o) const {
    if (is_zero() || o.is_zero()) return ParamScalar();
    ParamScalar r;
    r.num_ = num_ * o.num_;
    r.den_ = den_;
    for (const auto& [f, e] : o.den_) r.push_den_factor(f, e);
    r.tidy();
    return r;
}

ParamScalar ParamScalar::inv() const {
    if (is_zero()) throw std::domain_error("ParamScalar: division by zero");
    ParamScalar r;
    r.num_ = den_expanded();
    Poly prim;
    Rat content = num_.content_and_primitive(prim);
    r.num_ = r.num_.scaled(Rat(1) / content);
    if (!prim.is_one()) {
        // Strip a pure s-power so that Laurent denominators stay recognizable.
        Poly q;
        int s_exp = 0;
        while (prim.coeff(0) == 0 && prim.exact_div(Poly::monomial(Rat(1), 1), q)) {
            prim = q;
            ++s_exp;
        }
        if (s_exp > 0) r.push_den_factor(Poly::monomial(Rat(1), 1), s_exp);
        if (!prim.is_one()) r.push_den_factor(prim, 1);
    }
    r.tidy();
    return r;
}

ParamScalar ParamScalar::operator/(const ParamScalar& o) const { return *this * o.inv(); }

bool ParamScalar::operator==(const ParamScalar& o) const {
    if (den_ == o.den_) return num_ == o.num_;
    return num_ * o.den_expanded() == o.num_ * den_expanded();
}

ParamScalar ParamScalar::scaled(const Rat& c) const {
    if (c == 0) return ParamScalar();
    ParamScalar r = *this;
    r.num_ = r.num_.scaled(c);
    return r;
}

ParamScalar ParamScalar::pow(unsigned e) const {
    ParamScalar r = one();
    ParamScalar b = *this;
    while (e) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

Rat ParamScalar::eval_s(const Rat& s) const {
    Rat d(1);
    for (const auto& [f, e] : den_) {
        Rat v = f.eval(s);
        if (v == 0) throw std::domain_error("ParamScalar: denominator vanishes at s-value");
        for (int k = 0; k < e; ++k) d *= v;
    }
    return num_.eval(s) / d;
}

std::pair<Poly, Poly> ParamScalar::canonical() const {
    Poly den = den_expanded();
    Poly g = Poly::gcd(num_, den);
    Poly n = num_, d = den;
    if (!g.is_constant()) {
        Poly q;
        num_.exact_div(g, q);
        n = q;
        den.exact_div(g, q);
        d = q;
    }
    if (d.is_zero()) throw std::domain_error("ParamScalar: zero denominator");
    Rat lead = d.lc();
    return {n.scaled(Rat(1) / lead), d.scaled(Rat(1) / lead)};
}

std::optional<std::pair<Poly, int>> ParamScalar::as_laurent() const {
    auto [n, d] = canonical();
    Rat c;
    int k;
    if (d.is_one()) return std::make_pair(n, 0);
    if (!d.is_monomial(c, k)) return std::nullopt;
    return std::make_pair(n.scaled(Rat(1) / c), k);
}

std::vector<Rat> ParamScalar::reexpress_in_frakb() const {
    if (is_zero()) return {};
    auto laurent = as_laurent();
    if (!laurent) throw not_b_polynomial(str());
    auto [poly, k] = *laurent;
    // Laurent coefficients c_e of s^e for e in [-k, deg-k].
    auto coeff = [&](int e) { return poly.coeff(e + k); };
    int span = std::max(k, poly.deg() - k);
    // Invariance under s -> -1/s means c_{-e} = (-1)^e c_e.
    // Peel b^d = (1/s - s)^d from the extremes downward.
    std::vector<Rat> laur(static_cast<size_t>(2 * span + 1), Rat(0));
    for (int e = -span; e <= span; ++e) laur[static_cast<size_t>(e + span)] = coeff(e);
    std::vector<Rat> out(static_cast<size_t>(span) + 1, Rat(0));
    for (int d = span; d >= 0; --d) {
        Rat c = laur[static_cast<size_t>(-d + span)];
        out[static_cast<size_t>(d)] = c;
        if (c == 0) continue;
        // subtract c * (1/s - s)^d
        for (int j = 0; j <= d; ++j) {
            mpz_class binom;
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(j));
            // (1/s)^(d-j) * (-s)^j -> exponent 2j - d, sign (-1)^j
            Rat term = c * Rat(binom) * ((j % 2) ? Rat(-1) : Rat(1));
            laur[static_cast<size_t>(2 * j - d + span)] -= term;
        }
    }
    for (const auto& rest : laur)
        if (rest != 0) {
            std::ostringstream os;
            bool first = true;
            for (int e = -span; e <= span; ++e) {
                const Rat& c = laur[static_cast<size_t>(e + span)];
                if (c == 0) continue;
                if (!first) os << " + ";
                os << "(" << c << ")*s^" << e;
                first = false;
            }
            throw not_b_polynomial(os.str());
        }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::string ParamScalar::str() const {
    auto [n, d] = canonical();
    if (d.is_one()) return n.str();
    return "(" + n.str() + ")/(" + d.str() + ")";
}

}  // namespace bhz
