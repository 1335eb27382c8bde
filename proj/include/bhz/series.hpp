#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "bhz/trunc.hpp"

namespace bhz {

/// Formal variable families. X carries a color in bits 16..23.
enum class Fam : uint8_t {
    T = 0,     // the bookkeeping parameter t
    H = 1,     // hbar (Laurent)
    Lam = 2,   // Lambda (Laurent)
    Ptil = 3,  // p~_k, k >= 1
    X = 4,     // x^a_k, color a >= 1, k >= 1
    P = 5,     // symbolic weight parameters P_i
    Q = 6,     // symbolic weight parameters Q_i
    U = 7,     // auxiliary symbols u_i
    W = 8,     // auxiliary symbols w_i
};

using VarId = uint32_t;

constexpr VarId var_t() { return 0; }
constexpr VarId var_h() { return 1u << 24; }
constexpr VarId var_lam() { return 2u << 24; }
constexpr VarId var_ptil(int k) { return (3u << 24) | static_cast<uint32_t>(k); }
constexpr VarId var_x(int color, int k) {
    return (4u << 24) | (static_cast<uint32_t>(color) << 16) | static_cast<uint32_t>(k);
}
constexpr VarId var_p(int i) { return (5u << 24) | static_cast<uint32_t>(i); }
constexpr VarId var_q(int i) { return (6u << 24) | static_cast<uint32_t>(i); }
constexpr VarId var_u(int i) { return (7u << 24) | static_cast<uint32_t>(i); }
constexpr VarId var_w(int i) { return (8u << 24) | static_cast<uint32_t>(i); }

inline Fam var_fam(VarId v) { return static_cast<Fam>(v >> 24); }
inline int var_index(VarId v) { return static_cast<int>(v & 0xffffu); }
inline int var_color(VarId v) { return static_cast<int>((v >> 16) & 0xffu); }
/// Weight of the variable in the state grading: k for p~_k and x^a_k, else 0.
int var_weight(VarId v);
std::string var_name(VarId v);

/// Sparse exponent vector, sorted by VarId; exponents are nonzero and may be
/// negative only for hbar and Lambda.
class Monomial {
public:
    Monomial() = default;
    static Monomial var(VarId v, int exp = 1);

    int exponent(VarId v) const;
    int t_exp() const { return exponent(var_t()); }
    int h_exp() const { return exponent(var_h()); }
    int lam_exp() const { return exponent(var_lam()); }
    int state_degree() const;

    Monomial times(const Monomial& o) const;
    Monomial times_var(VarId v, int exp) const;

    bool within(const TruncSpec& ts) const;

    const std::vector<std::pair<VarId, int>>& entries() const { return e_; }
    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    /// Canonical order: graded lex on (t, hbar, state variables, parameters).
    static int cmp(const Monomial& a, const Monomial& b);

    std::string str() const;

    struct Hash {
        size_t operator()(const Monomial& m) const {
            size_t h = 1469598103934665603ull;
            for (const auto& [v, e] : m.e_) {
                h = (h ^ v) * 1099511628211ull;
                h = (h ^ static_cast<uint32_t>(e)) * 1099511628211ull;
            }
            return h;
        }
    };

private:
    std::vector<std::pair<VarId, int>> e_;
};

/// Truncated sparse series with ParamScalar coefficients.
class SeriesElem {
public:
    SeriesElem() = default;
    explicit SeriesElem(TruncSpec ts) : ts_(ts) {}

    static SeriesElem constant(ParamScalar c, TruncSpec ts);
    static SeriesElem one(TruncSpec ts) { return constant(ParamScalar::one(), ts); }
    static SeriesElem variable(VarId v, TruncSpec ts);

    const TruncSpec& trunc() const { return ts_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    /// Adds c * m, dropping the term if it violates the truncation.
    void add_term(const Monomial& m, const ParamScalar& c);
    ParamScalar coefficient(const Monomial& m) const;

    SeriesElem operator-() const;
    SeriesElem operator+(const SeriesElem& o) const;
    SeriesElem operator-(const SeriesElem& o) const;
    SeriesElem operator*(const SeriesElem& o) const;
    SeriesElem& operator+=(const SeriesElem& o);
    SeriesElem& operator-=(const SeriesElem& o);
    bool operator==(const SeriesElem& o) const;
    bool operator!=(const SeriesElem& o) const { return !(*this == o); }

    SeriesElem scaled(const ParamScalar& c) const;
    SeriesElem times_var(VarId v, int exp) const;
    /// Partial derivative with respect to a variable.
    SeriesElem d_var(VarId v) const;

    /// exp of a series with zero constant term in t.
    SeriesElem exp_t() const;
    /// log of a series with t-constant part exactly 1.
    SeriesElem log_t() const;

    /// Substitutes exact rational values for formal variables.
    SeriesElem specialize(const std::map<VarId, Rat>& values) const;
    /// Evaluates every coefficient at a rational s-value.
    SeriesElem specialize_s(const Rat& s_value) const;
    /// t -> c * t.
    SeriesElem rescale_t(const Rat& c) const;
    SeriesElem with_trunc(const TruncSpec& ts) const;

    /// Keeps the terms selected by the predicate.
    SeriesElem filter(const std::function<bool(const Monomial&)>& keep) const;

    void for_each(const std::function<void(const Monomial&, const ParamScalar&)>& f) const;
    std::vector<std::pair<Monomial, ParamScalar>> sorted_terms() const;

    /// Canonical text form: one term per line, "coeff * monomial".
    std::string str() const;

private:
    void check_compatible(const SeriesElem& o) const;
    TruncSpec ts_;
    std::unordered_map<Monomial, ParamScalar, Monomial::Hash> terms_;
};

}  // namespace bhz
