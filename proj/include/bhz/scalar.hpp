#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bhz/poly.hpp"

namespace bhz {

struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised by reexpress_in_frakb when a scalar is not a polynomial in
/// frakb = 1/s - s; carries the non-invariant residual.
struct not_b_polynomial : std::runtime_error {
    explicit not_b_polynomial(std::string residual)
        : std::runtime_error("not a polynomial in frakb; residual: " + residual),
          residual(std::move(residual)) {}
    std::string residual;
};

/// Exact element of Q(s), s = sqrt(alpha). The denominator is kept as a
/// multiset of primitive integer factors so that reduction is trial
/// division instead of polynomial gcd; values are compared by
/// cross-multiplication, and full gcd normalization happens only when a
/// canonical form is requested (serialization, frakb re-expression).
class ParamScalar {
public:
    ParamScalar() = default;
    explicit ParamScalar(Rat c) : num_(std::move(c)) {}
    explicit ParamScalar(long c) : num_(Rat(c)) {}
    explicit ParamScalar(Poly num) : num_(std::move(num)) {}

    static ParamScalar zero() { return ParamScalar(); }
    static ParamScalar one() { return ParamScalar(Rat(1)); }
    /// c * s^k for any integer k.
    static ParamScalar s_power(Rat c, int k);
    /// a*alpha + b = a*s^2 + b.
    static ParamScalar linear_alpha(long a, long b);
    /// Polynomial in alpha = s^2 with the given ascending coefficients.
    static ParamScalar alpha_poly(const std::vector<Rat>& cs);
    /// frakb = 1/s - s.
    static ParamScalar frakb();
    static ParamScalar from_fraction(Poly num, Poly den);

    bool is_zero() const { return num_.is_zero(); }
    bool is_rational(Rat& out) const;

    ParamScalar operator-() const;
    ParamScalar operator+(const ParamScalar& o) const;
    ParamScalar operator-(const ParamScalar& o) const;
    ParamScalar operator*(const ParamScalar& o) const;
    ParamScalar operator/(const ParamScalar& o) const;
    ParamScalar& operator+=(const ParamScalar& o) { return *this = *this + o; }
    ParamScalar& operator-=(const ParamScalar& o) { return *this = *this - o; }
    ParamScalar& operator*=(const ParamScalar& o) { return *this = *this * o; }
    ParamScalar& operator/=(const ParamScalar& o) { return *this = *this / o; }
    bool operator==(const ParamScalar& o) const;
    bool operator!=(const ParamScalar& o) const { return !(*this == o); }

    ParamScalar scaled(const Rat& c) const;
    ParamScalar pow(unsigned e) const;
    ParamScalar inv() const;

    /// Evaluate at a rational s-value; the denominator must not vanish there.
    Rat eval_s(const Rat& s) const;

    /// Fully reduced pair (num, den) with den monic and gcd(num, den) = 1.
    std::pair<Poly, Poly> canonical() const;

    /// Laurent expansion num/s^k; fails if the canonical denominator is not
    /// a power of s. Returns (poly, k) with value = poly / s^k, k >= 0.
    std::optional<std::pair<Poly, int>> as_laurent() const;

    /// Rewrites an s-Laurent polynomial invariant under s -> -1/s as a
    /// polynomial in frakb = 1/s - s (ascending coefficients). Throws
    /// not_b_polynomial otherwise.
    std::vector<Rat> reexpress_in_frakb() const;

    /// Canonical string "num" or "(num)/(den)".
    std::string str() const;

private:
    void tidy();
    Poly den_expanded() const;
    void push_den_factor(const Poly& f, int mult);

    Poly num_;
    // den = prod factors[i].first ^ factors[i].second; factors primitive,
    // positive leading coefficient, non-constant, sorted by Poly::cmp.
    std::vector<std::pair<Poly, int>> den_;
};

}  // namespace bhz
