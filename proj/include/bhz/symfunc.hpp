#pragma once

#include <unordered_map>

#include "bhz/partition.hpp"

namespace bhz {

/// Homogeneous symmetric function in the power-sum basis: sparse map from
/// partitions mu (the monomial p_mu) to ParamScalar.
class SymFunc {
public:
    SymFunc() = default;
    explicit SymFunc(int degree) : degree_(degree) {}
    static SymFunc p_monomial(const Partition& mu, ParamScalar c = ParamScalar::one());

    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Partition& mu, const ParamScalar& c);
    ParamScalar coefficient(const Partition& mu) const;

    SymFunc operator+(const SymFunc& o) const;
    SymFunc operator-(const SymFunc& o) const;
    SymFunc& operator+=(const SymFunc& o);
    SymFunc scaled(const ParamScalar& c) const;
    /// Multiplication by the power sum p_k (degree rises by k).
    SymFunc times_p(int k) const;
    bool operator==(const SymFunc& o) const;

    void for_each(const std::function<void(const Partition&, const ParamScalar&)>& f) const;
    std::vector<std::pair<Partition, ParamScalar>> sorted_terms() const;
    std::string str() const;

private:
    int degree_ = 0;
    std::unordered_map<Partition, ParamScalar, Partition::Hash> terms_;
};

/// Transition data between the monomial and power-sum bases in one degree.
/// Partitions are indexed in reverse-lexicographic order, which refines
/// dominance downward (index 0 is the most dominant partition [n]).
class BasisDegree {
public:
    explicit BasisDegree(int n);

    int count() const { return static_cast<int>(parts_.size()); }
    const Partition& at(int i) const { return parts_[static_cast<size_t>(i)]; }
    int index(const Partition& la) const;

    /// m_lambda expanded in the p-basis.
    const SymFunc& monomial_in_p(int i) const { return m_in_p_[static_cast<size_t>(i)]; }
    /// Coordinates of f in the m-basis (f given in the p-basis).
    std::vector<ParamScalar> to_m_coords(const SymFunc& f) const;
    /// Rebuild a p-basis SymFunc from m-coordinates.
    SymFunc from_m_coords(const std::vector<ParamScalar>& c) const;

private:
    std::vector<Partition> parts_;
    std::unordered_map<Partition, int, Partition::Hash> idx_;
    // R[la][mu] = coefficient of m_la in p_mu (nonzero only for la >= mu).
    std::vector<std::vector<Rat>> R_;
    std::vector<SymFunc> m_in_p_;
};

const BasisDegree& basis_degree(int n);

}  // namespace bhz
