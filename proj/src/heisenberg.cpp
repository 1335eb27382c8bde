#include "bhz/heisenberg.hpp"

#include <stdexcept>

namespace bhz {

SeriesElem RepOneColor::apply_gen(int color, int mode, const SeriesElem& state) const {
    if (color != 1) throw std::domain_error("RepOneColor: unknown color");
    if (mode == 0) return SeriesElem(ts_);
    if (mode > 0)
        return state.d_var(var_ptil(mode)).times_var(var_h(), 1).scaled(ParamScalar(Rat(mode)));
    return state.times_var(var_ptil(-mode), 1).times_var(var_h(), 1);
}

AffineScalar RepOneColor::zero_mode(int color) const {
    if (color != 1) throw std::domain_error("RepOneColor: unknown color");
    return AffineScalar::zero();
}

RepMultiColor::RepMultiColor(int r, std::vector<ParamVal> P, std::vector<ParamVal> Q, TruncSpec ts)
    : r_(r), P_(std::move(P)), Q_(std::move(Q)), ts_(ts) {
    if (r_ < 2) throw config_error("RepMultiColor: rank must be >= 2");
    if (static_cast<int>(P_.size()) != r_ || static_cast<int>(Q_.size()) != r_ - 2)
        throw config_error("RepMultiColor: need r P-values and r-2 Q-values");
    for (size_t i = 0; i < Q_.size(); ++i) {
        if (Q_[i].is_symbolic()) continue;
        if (*Q_[i].value == 0) throw config_error("RepMultiColor: Q values must be nonzero");
        for (size_t j = i + 1; j < Q_.size(); ++j)
            if (!Q_[j].is_symbolic() && *Q_[i].value == *Q_[j].value)
                throw config_error("RepMultiColor: non-generic Q (coincident values)");
    }
}

SeriesElem RepMultiColor::apply_gen(int color, int mode, const SeriesElem& state) const {
    if (color < 1 || color > r_) throw std::domain_error("RepMultiColor: unknown color");
    if (mode == 0) return SeriesElem(ts_);
    if (mode > 0) return state.d_var(var_x(color, mode)).times_var(var_h(), 1);
    SeriesElem r = state.times_var(var_x(color, -mode), 1)
                       .times_var(var_h(), 1)
                       .scaled(ParamScalar(Rat(-mode)));
    if (color == r_ && mode == -1) {
        Rat sign = (r_ % 2 == 0) ? Rat(1) : Rat(-1);
        r += state.times_var(var_lam(), -1).scaled(ParamScalar(sign));
    }
    return r;
}

AffineScalar RepMultiColor::zero_mode(int color) const {
    if (color < 1 || color > r_) throw std::domain_error("RepMultiColor: unknown color");
    if (color < r_) {
        // J^a_0 = Q_{a-1} - hbar frakb (a-1), with Q_0 = 0.
        AffineScalar a =
            (color == 1) ? AffineScalar::zero() : Q_[static_cast<size_t>(color - 2)].affine();
        return a.minus_hb(color - 1);
    }
    AffineScalar a;
    for (const auto& p : P_) a = a.plus(p.affine().negated());
    for (const auto& q : Q_) a = a.plus(q.affine().negated());
    return a.minus_hb(r_ - 1);
}

SeriesElem apply_affine(const AffineScalar& a, const SeriesElem& state) {
    SeriesElem r = state.scaled(a.c0);
    if (!a.c_h.is_zero()) r += state.times_var(var_h(), 1).scaled(a.c_h);
    for (const auto& [v, c] : a.lin)
        if (c != 0) r += state.times_var(v, 1).scaled(ParamScalar(c));
    return r;
}

namespace {

/// Rep adapter presenting a relaxed truncation, so that words which create
/// before they annihilate keep their transiently-high intermediate terms.
class RelaxedRep : public Rep {
public:
    RelaxedRep(const Rep& base, TruncSpec ts) : base_(base), ts_(ts) {}
    const TruncSpec& trunc() const override { return ts_; }
    SeriesElem apply_gen(int color, int mode, const SeriesElem& state) const override {
        return base_.apply_gen(color, mode, state).with_trunc(ts_);
    }
    AffineScalar zero_mode(int color) const override { return base_.zero_mode(color); }
    int rank() const override { return base_.rank(); }

private:
    const Rep& base_;
    TruncSpec ts_;
};

}  // namespace

SeriesElem apply(const ModeWord& w, const SeriesElem& state, const Rep& rep,
                 const ApplyOptions& opt) {
    const TruncSpec& ts = rep.trunc();
    // Positional caps: after applying factor j (right to left), the factors
    // at indices < j still shift the degree by exactly sum of their -mode and
    // hbar by at least the number of pending generators. A term outside the
    // cap cannot land inside the truncation, so it is dropped immediately.
    int n = static_cast<int>(w.factors.size());
    std::vector<int> future_deg(static_cast<size_t>(n), 0);
    std::vector<int> future_hmin(static_cast<size_t>(n), 0);
    int relax_deg = 0;
    for (int j = 0; j < n; ++j) {
        int d = 0, hmin = 0;
        for (int l = 0; l < j; ++l) {
            const Factor& f = w.factors[static_cast<size_t>(l)];
            d += f.degree_shift();
            if (f.kind == Factor::Kind::Gen && f.mode != 0) hmin += 1;
        }
        future_deg[static_cast<size_t>(j)] = d;
        future_hmin[static_cast<size_t>(j)] = hmin;
        relax_deg = std::max(relax_deg, -d);
    }
    TruncSpec relaxed = ts;
    relaxed.state_deg_max = ts.state_deg_max + relax_deg;
    relaxed.h_max = ts.h_max + std::max(0, -w.h_shift);
    relaxed.h_min = ts.h_min - std::max(0, w.h_shift);
    relaxed.lam_min = ts.lam_min - std::max(0, w.lam_shift) - n;
    relaxed.lam_max = ts.lam_max + std::max(0, -w.lam_shift);
    RelaxedRep rrep(rep, relaxed);

    SeriesElem cur = state.with_trunc(relaxed);
    for (int j = n - 1; j >= 0 && !cur.is_zero(); --j) {
        const Factor& f = w.factors[static_cast<size_t>(j)];
        if (f.kind == Factor::Kind::Gen) {
            if (f.mode == 0) {
                cur = apply_affine(rrep.zero_mode(f.color).minus_hb(f.zshift), cur);
            } else {
                cur = rrep.apply_gen(f.color, f.mode, cur);
            }
        } else {
            cur = apply_affine(f.sc, cur);
        }
        int deg_cap = ts.state_deg_max - future_deg[static_cast<size_t>(j)];
        int h_cap = ts.h_max - w.h_shift - future_hmin[static_cast<size_t>(j)];
        cur = cur.filter([&](const Monomial& m) {
            return m.state_degree() <= deg_cap && m.h_exp() <= h_cap;
        });
    }
    if (cur.is_zero()) return cur.with_trunc(ts);
    cur = cur.scaled(w.coeff);
    if (w.h_shift) cur = cur.times_var(var_h(), w.h_shift);
    if (w.lam_shift) cur = cur.times_var(opt.lambda_var, w.lam_shift);
    return cur.with_trunc(ts);
}

SeriesElem apply(const OperatorSpec& op, const SeriesElem& state, const Rep& rep,
                 const ApplyOptions& opt) {
    SeriesElem acc(rep.trunc());
    for (const auto& w : op.words) acc += apply(w, state, rep, opt);
    return acc;
}

SeriesElem commutator_defect(int a1, int k1, int a2, int k2, const SeriesElem& probe,
                             const Rep& rep) {
    ModeWord w12, w21;
    auto fac = [](int a, int k) {
        return k == 0 ? Factor::zero_mode(a, 0) : Factor::gen(a, k);
    };
    w12.factors = {fac(a1, k1), fac(a2, k2)};
    w21.factors = {fac(a2, k2), fac(a1, k1)};
    SeriesElem lhs = apply(w12, probe, rep) - apply(w21, probe, rep);
    if (a1 == a2 && k1 + k2 == 0)
        lhs -= probe.times_var(var_h(), 2).scaled(ParamScalar(Rat(k1)));
    return lhs;
}

}  // namespace bhz
