#include "bhz/symfunc.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace bhz {

SymFunc SymFunc::p_monomial(const Partition& mu, ParamScalar c) {
    SymFunc f(mu.size());
    f.add(mu, c);
    return f;
}

void SymFunc::add(const Partition& mu, const ParamScalar& c) {
    if (c.is_zero()) return;
    if (mu.size() != degree_ && !terms_.empty())
        throw std::invalid_argument("SymFunc: mixed degrees");
    degree_ = mu.size();
    auto [it, inserted] = terms_.try_emplace(mu, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ParamScalar SymFunc::coefficient(const Partition& mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? ParamScalar::zero() : it->second;
}

SymFunc SymFunc::operator+(const SymFunc& o) const {
    SymFunc r = *this;
    r += o;
    return r;
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
    for (const auto& [mu, c] : o.terms_) add(mu, c);
    return *this;
}

SymFunc SymFunc::operator-(const SymFunc& o) const {
    SymFunc r = *this;
    for (const auto& [mu, c] : o.terms_) r.add(mu, -c);
    return r;
}

SymFunc SymFunc::scaled(const ParamScalar& c) const {
    SymFunc r(degree_);
    if (c.is_zero()) return r;
    for (const auto& [mu, v] : terms_) r.add(mu, v * c);
    return r;
}

SymFunc SymFunc::times_p(int k) const {
    SymFunc r(degree_ + k);
    for (const auto& [mu, c] : terms_) {
        std::vector<int> parts = mu.parts();
        parts.insert(std::upper_bound(parts.begin(), parts.end(), k, std::greater<int>()), k);
        r.add(Partition(std::move(parts)), c);
    }
    return r;
}

bool SymFunc::operator==(const SymFunc& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (const auto& [mu, c] : terms_) {
        auto it = o.terms_.find(mu);
        if (it == o.terms_.end() || !(it->second == c)) return false;
    }
    return true;
}

void SymFunc::for_each(const std::function<void(const Partition&, const ParamScalar&)>& f) const {
    for (const auto& [mu, c] : terms_) f(mu, c);
}

std::vector<std::pair<Partition, ParamScalar>> SymFunc::sorted_terms() const {
    std::vector<std::pair<Partition, ParamScalar>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
        return a.first.parts() > b.first.parts();  // lex descending, [n] first
    });
    return v;
}

std::string SymFunc::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mu, c] : sorted_terms()) {
        if (!first) os << " + ";
        os << "(" << c.str() << ")*p" << mu.str();
        first = false;
    }
    return os.str();
}

namespace {

/// Number of ordered set partitions of the parts of mu into blocks with the
/// prescribed sums la_1, ..., la_l (the coefficient of m_la in p_mu).
long ordered_block_count(const Partition& la, const Partition& mu) {
    std::vector<long> remaining(la.parts().begin(), la.parts().end());
    std::function<long(size_t)> rec = [&](size_t j) -> long {
        if (j == mu.parts().size()) {
            for (long r : remaining)
                if (r != 0) return 0;
            return 1;
        }
        long total = 0;
        long part = mu.parts()[j];
        for (size_t i = 0; i < remaining.size(); ++i) {
            if (remaining[i] < part) continue;
            // avoid double counting identical intermediate states cheaply:
            // blocks are distinguishable (ordered), so plain recursion is right
            remaining[i] -= part;
            total += rec(j + 1);
            remaining[i] += part;
        }
        return total;
    };
    return rec(0);
}

}  // namespace

BasisDegree::BasisDegree(int n) : parts_(partitions_of(n)) {
    for (int i = 0; i < count(); ++i) idx_[parts_[static_cast<size_t>(i)]] = i;
    R_.assign(parts_.size(), std::vector<Rat>(parts_.size(), Rat(0)));
    for (int la = 0; la < count(); ++la)
        for (int mu = la; mu < count(); ++mu)  // R nonzero only for la >= mu (dominance)
            R_[static_cast<size_t>(la)][static_cast<size_t>(mu)] =
                Rat(ordered_block_count(at(la), at(mu)));
    // m_la in the p-basis: solve R x = e_la by back substitution (R is upper
    // triangular in this indexing with nonzero diagonal).
    m_in_p_.resize(parts_.size());
    for (int la = 0; la < count(); ++la) {
        std::vector<ParamScalar> x(parts_.size(), ParamScalar::zero());
        for (int i = count() - 1; i >= 0; --i) {
            ParamScalar rhs = (i == la) ? ParamScalar::one() : ParamScalar::zero();
            for (int j = i + 1; j < count(); ++j) {
                const Rat& rij = R_[static_cast<size_t>(i)][static_cast<size_t>(j)];
                if (rij != 0) rhs -= x[static_cast<size_t>(j)].scaled(rij);
            }
            x[static_cast<size_t>(i)] =
                rhs.scaled(Rat(1) / R_[static_cast<size_t>(i)][static_cast<size_t>(i)]);
        }
        SymFunc f(n);
        for (int i = 0; i < count(); ++i) f.add(at(i), x[static_cast<size_t>(i)]);
        m_in_p_[static_cast<size_t>(la)] = std::move(f);
    }
}

int BasisDegree::index(const Partition& la) const {
    auto it = idx_.find(la);
    if (it == idx_.end()) throw std::invalid_argument("BasisDegree: wrong degree partition");
    return it->second;
}

std::vector<ParamScalar> BasisDegree::to_m_coords(const SymFunc& f) const {
    std::vector<ParamScalar> m(parts_.size(), ParamScalar::zero());
    f.for_each([&](const Partition& mu, const ParamScalar& c) {
        int j = index(mu);
        for (int i = 0; i <= j; ++i) {
            const Rat& rij = R_[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (rij != 0) m[static_cast<size_t>(i)] += c.scaled(rij);
        }
    });
    return m;
}

SymFunc BasisDegree::from_m_coords(const std::vector<ParamScalar>& c) const {
    SymFunc f(parts_.empty() ? 0 : parts_[0].size());
    for (int i = 0; i < count(); ++i)
        if (!c[static_cast<size_t>(i)].is_zero())
            f += monomial_in_p(i).scaled(c[static_cast<size_t>(i)]);
    return f;
}

const BasisDegree& basis_degree(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<BasisDegree>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<BasisDegree>(n);
    return *slot;
}

}  // namespace bhz
