#pragma once

#include <string>
#include <vector>

#include "bhz/scalar.hpp"

namespace bhz {

/// Box of a Young diagram: x is the column, y the row, both 1-based.
struct Box {
    int x = 1;
    int y = 1;
};

enum class Dominance { LessOrEqual, Greater, Incomparable };

/// Integer partition with weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    static Partition parse(const std::string& text);  // "[3,1,1]" or "3,1,1"

    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const {  // 1-based, 0 beyond the length
        return (i >= 1 && i <= length()) ? parts_[static_cast<size_t>(i - 1)] : 0;
    }
    bool empty() const { return parts_.empty(); }

    bool contains(const Box& b) const;
    std::vector<Box> boxes() const;
    Partition conjugate() const;
    /// Multiplicity of the part value i.
    int multiplicity(int i) const;
    /// n(lambda) = sum (i-1) lambda_i.
    long n_invariant() const;
    /// z_lambda = prod i^{m_i} m_i!.
    Rat z_aut() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    std::string str() const;  // "[3,1,1]"

    struct Hash {
        size_t operator()(const Partition& p) const {
            size_t h = 1469598103934665603ull;
            for (int x : p.parts_) h = (h ^ static_cast<size_t>(x)) * 1099511628211ull;
            return h;
        }
    };

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// All partitions of n in reverse-lexicographic order, [n] first, [1^n] last.
std::vector<Partition> partitions_of(int n);

/// alpha-content c_alpha(x,y) = alpha (x-1) - (y-1), with alpha = s^2.
ParamScalar content_alpha(const Partition& la, const Box& b);
/// Rescaled content c~_alpha(x,y) = s (x-1) - (y-1)/s.
ParamScalar content_tilde(const Partition& la, const Box& b);
/// Hook normalization j_lambda = prod hook * hook'.
ParamScalar hook_norm(const Partition& la);
/// Partial-sum dominance comparison; both partitions must have equal size.
Dominance dominance_leq(const Partition& la, const Partition& mu);
/// All (mu, removed box) with mu obtained from lambda by removing one corner,
/// ordered by increasing row of the removed box.
std::vector<std::pair<Partition, Box>> covers_down(const Partition& la);
/// All (mu, added box) with mu obtained from lambda by adding one box.
std::vector<std::pair<Partition, Box>> covers_up(const Partition& la);

}  // namespace bhz
