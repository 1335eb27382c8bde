#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace bhz {

using Rat = mpq_class;

/// Dense univariate polynomial over Q in the deformation symbol s.
/// Coefficients are stored ascending; trailing zeros are trimmed, so
/// deg() of the zero polynomial is -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(Rat c) {
        if (c != 0) coeffs_.push_back(std::move(c));
    }
    explicit Poly(long c) : Poly(Rat(c)) {}
    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(Rat(1)); }
    /// c * s^k, k >= 0.
    static Poly monomial(Rat c, int k);
    static Poly from_coeffs(std::vector<Rat> cs);

    int deg() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    bool is_constant() const { return coeffs_.size() <= 1; }
    /// True if exactly c * s^k; reports c and k.
    bool is_monomial(Rat& c, int& k) const;

    const Rat& operator[](int i) const { return coeffs_[static_cast<size_t>(i)]; }
    Rat coeff(int i) const {
        return (i >= 0 && i <= deg()) ? coeffs_[static_cast<size_t>(i)] : Rat(0);
    }
    const Rat& lc() const { return coeffs_.back(); }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly scaled(const Rat& c) const;
    /// Multiply by s^k (k >= 0).
    Poly shifted(int k) const;
    Poly pow(unsigned e) const;

    /// Exact division: q with *this == q * d, or false if d does not divide.
    bool exact_div(const Poly& d, Poly& q) const;
    /// Euclidean division remainder.
    Poly rem(const Poly& d) const;
    /// Monic gcd (Euclid over Q; cold path, used for canonical forms only).
    static Poly gcd(const Poly& a, const Poly& b);

    Rat eval(const Rat& x) const;
    /// Rational content; the primitive part has coprime integer coefficients
    /// and positive leading coefficient.
    Rat content_and_primitive(Poly& primitive) const;

    /// Deterministic ascii form, descending powers, e.g. "2*s^3 - 1/2*s + 1".
    std::string str(const std::string& var = "s") const;

    /// Total-order comparison for canonical sorting (degree, then coeffs).
    static int cmp(const Poly& a, const Poly& b);

private:
    void trim();
    std::vector<Rat> coeffs_;
};

std::string rat_str(const Rat& q);

}  // namespace bhz
