#pragma once

#include <map>
#include <memory>
#include <optional>

#include "bhz/modeword.hpp"

namespace bhz {

/// Weight parameter: an exact rational or a formal symbol P_i / Q_i.
struct ParamVal {
    std::optional<Rat> value;  // nullopt = symbolic
    VarId symbol = 0;

    static ParamVal rational(Rat v) { return {std::move(v), 0}; }
    static ParamVal symbolic(VarId s) { return {std::nullopt, s}; }
    bool is_symbolic() const { return !value.has_value(); }
    AffineScalar affine() const {
        return is_symbolic() ? AffineScalar::symbol(symbol) : AffineScalar::rational(*value);
    }
};

/// Representation of the Heisenberg modes on a truncated state space.
class Rep {
public:
    virtual ~Rep() = default;
    virtual const TruncSpec& trunc() const = 0;
    /// Applies J^color_mode (mode != 0) to a state.
    virtual SeriesElem apply_gen(int color, int mode, const SeriesElem& state) const = 0;
    /// The scalar value of the zero mode J^color_0.
    virtual AffineScalar zero_mode(int color) const = 0;
    virtual int rank() const = 0;
};

/// One-color representation on Q(s)[p~] per mode table
/// J^1_k = hbar k d/dp~_k (k>0), 0 (k=0), hbar p~_{-k} (k<0).
class RepOneColor : public Rep {
public:
    explicit RepOneColor(TruncSpec ts) : ts_(ts) {}
    const TruncSpec& trunc() const override { return ts_; }
    SeriesElem apply_gen(int color, int mode, const SeriesElem& state) const override;
    AffineScalar zero_mode(int color) const override;
    int rank() const override { return 1; }

private:
    TruncSpec ts_;
};

/// Multi-color representation on x^a_k with the exceptional Lambda^{-1} term
/// at (a, k) = (r, -1) and scalar zero modes; Q_0 is hardwired to 0.
class RepMultiColor : public Rep {
public:
    /// P has r entries; Q has r-2 entries Q_1..Q_{r-2} (pairwise distinct,
    /// nonzero when rational).
    RepMultiColor(int r, std::vector<ParamVal> P, std::vector<ParamVal> Q, TruncSpec ts);
    const TruncSpec& trunc() const override { return ts_; }
    SeriesElem apply_gen(int color, int mode, const SeriesElem& state) const override;
    AffineScalar zero_mode(int color) const override;
    int rank() const override { return r_; }
    const std::vector<ParamVal>& P() const { return P_; }
    const std::vector<ParamVal>& Q() const { return Q_; }

private:
    int r_;
    std::vector<ParamVal> P_, Q_;
    TruncSpec ts_;
};

struct ApplyOptions {
    /// Variable receiving the word's Lambda prefactor (Lambda, or t under the
    /// Lambda = t identification).
    VarId lambda_var = var_lam();
};

/// Applies a word / operator to a state: factors act rightmost-first, with
/// exact positional degree and hbar caps derived from the word itself.
SeriesElem apply(const ModeWord& w, const SeriesElem& state, const Rep& rep,
                 const ApplyOptions& opt = {});
SeriesElem apply(const OperatorSpec& op, const SeriesElem& state, const Rep& rep,
                 const ApplyOptions& opt = {});

/// Multiplies a state by an affine scalar.
SeriesElem apply_affine(const AffineScalar& a, const SeriesElem& state);

/// [J^{a1}_{k1}, J^{a2}_{k2}] v - hbar^2 k1 delta delta v, which must be zero.
SeriesElem commutator_defect(int a1, int k1, int a2, int k2, const SeriesElem& probe,
                             const Rep& rep);

}  // namespace bhz
