#pragma once

#include <vector>

#include "bhz/path.hpp"
#include "bhz/series.hpp"

namespace bhz {

/// Affine scalar c0 + hbar * c_h + sum_i coeff_i * symbol_i; the common
/// coefficient shape of flat-step weights and zero-mode values.
struct AffineScalar {
    ParamScalar c0;
    ParamScalar c_h;
    std::vector<std::pair<VarId, Rat>> lin;

    static AffineScalar zero() { return {}; }
    static AffineScalar rational(Rat v) { return {ParamScalar(std::move(v)), {}, {}}; }
    static AffineScalar symbol(VarId v, Rat coeff = Rat(1)) {
        return {ParamScalar::zero(), ParamScalar::zero(), {{v, std::move(coeff)}}};
    }
    /// Adds -hbar * frakb * mult.
    AffineScalar minus_hb(long mult) const;
    AffineScalar negated() const;
    AffineScalar plus(const AffineScalar& o) const;
    bool is_zero() const;
};

/// One factor of a ModeWord: a Heisenberg generator J^color_mode (a zero mode
/// carries an extra -hbar*frakb*zshift), or a plain affine scalar.
struct Factor {
    enum class Kind { Gen, Scalar };
    Kind kind = Kind::Scalar;
    int color = 1;
    int mode = 0;
    int zshift = 0;  // Gen with mode 0: value J^color_0 - hbar*frakb*zshift
    AffineScalar sc;

    static Factor gen(int color, int mode) { return {Kind::Gen, color, mode, 0, {}}; }
    static Factor zero_mode(int color, int zshift) { return {Kind::Gen, color, 0, zshift, {}}; }
    static Factor scalar(AffineScalar a) {
        return {Kind::Scalar, 1, 0, 0, std::move(a)};
    }
    /// Degree change of the factor on the state grading.
    int degree_shift() const { return kind == Kind::Gen ? -mode : 0; }
};

/// Ordered product of factors with an overall prefactor
/// coeff * hbar^h_shift * Lambda^lam_shift; the rightmost factor acts first.
struct ModeWord {
    ParamScalar coeff = ParamScalar::one();
    int h_shift = 0;
    int lam_shift = 0;
    std::vector<Factor> factors;

    ModeWord scaled(const ParamScalar& c) const {
        ModeWord w = *this;
        w.coeff = w.coeff * c;
        return w;
    }
    /// this . other (other acts first).
    ModeWord composed(const ModeWord& other) const;
    std::string str() const;
};

/// Formal sum of ModeWords.
struct OperatorSpec {
    std::vector<ModeWord> words;

    static OperatorSpec zero() { return {}; }
    static OperatorSpec identity() { return {{ModeWord{}}}; }
    static OperatorSpec single(ModeWord w) { return {{std::move(w)}}; }

    OperatorSpec& operator+=(const OperatorSpec& o) {
        words.insert(words.end(), o.words.begin(), o.words.end());
        return *this;
    }
    OperatorSpec operator+(const OperatorSpec& o) const {
        OperatorSpec r = *this;
        r += o;
        return r;
    }
    OperatorSpec scaled(const ParamScalar& c) const;
    OperatorSpec composed(const OperatorSpec& other) const;
    size_t size() const { return words.size(); }
    std::string str() const;
};

/// Weight wt~(gamma | u): step (1,k) with k != 0 maps to J^1_{-k}; a flat
/// step at height l maps to the scalar u_j - hbar*frakb*(l + diag_shift).
/// u must have one entry per step.
ModeWord tilde_weight(const Path& gamma, const std::vector<AffineScalar>& u, int diag_shift = 0);

/// Colored weight wt(gamma, f): step j with gamma_j != 0 maps to
/// J^{f(j)}_{gamma_j}; a flat step maps to J^{f(j)}_0 - hbar*frakb*(suffix
/// gamma-sum + remaining length). keep_first limits the product to the first
/// so many step weights (-1 keeps all); the shifts still see the full path.
ModeWord colored_weight(const Path& gamma, const std::vector<int>& coloring, int keep_first = -1);

}  // namespace bhz
