#include "bhz/partition.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bhz {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::string body = text;
    if (!body.empty() && body.front() == '[') {
        if (body.back() != ']') throw std::invalid_argument("Partition::parse: unbalanced brackets");
        body = body.substr(1, body.size() - 2);
    }
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.find_first_not_of(" \t") == std::string::npos) continue;
        parts.push_back(std::stoi(tok));
    }
    return Partition(std::move(parts));
}

bool Partition::contains(const Box& b) const {
    return b.y >= 1 && b.y <= length() && b.x >= 1 && b.x <= part(b.y);
}

std::vector<Box> Partition::boxes() const {
    std::vector<Box> bs;
    bs.reserve(static_cast<size_t>(size_));
    for (int y = 1; y <= length(); ++y)
        for (int x = 1; x <= part(y); ++x) bs.push_back({x, y});
    return bs;
}

Partition Partition::conjugate() const {
    if (empty()) return Partition();
    std::vector<int> cols(static_cast<size_t>(parts_[0]), 0);
    for (int y = 1; y <= length(); ++y)
        for (int x = 1; x <= part(y); ++x) ++cols[static_cast<size_t>(x - 1)];
    return Partition(std::move(cols));
}

int Partition::multiplicity(int i) const {
    int m = 0;
    for (int p : parts_) m += (p == i);
    return m;
}

long Partition::n_invariant() const {
    long n = 0;
    for (int i = 1; i <= length(); ++i) n += static_cast<long>(i - 1) * part(i);
    return n;
}

Rat Partition::z_aut() const {
    Rat z(1);
    int run = 0;
    int prev = 0;
    for (int p : parts_) {
        if (p == prev) {
            ++run;
        } else {
            prev = p;
            run = 1;
        }
        z *= Rat(p) * Rat(run);
    }
    return z;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    os << "]";
    return os.str();
}

namespace {
void gen_partitions(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(cur));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(remaining - p, p, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative n");
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(n, n == 0 ? 1 : n, cur, out);
    return out;
}

ParamScalar content_alpha(const Partition& la, const Box& b) {
    if (!la.contains(b)) throw std::domain_error("content_alpha: box outside diagram");
    return ParamScalar::linear_alpha(b.x - 1, -(b.y - 1));
}

ParamScalar content_tilde(const Partition& la, const Box& b) {
    if (!la.contains(b)) throw std::domain_error("content_tilde: box outside diagram");
    // s (x-1) - (y-1)/s = (s^2 (x-1) - (y-1)) / s
    return ParamScalar::from_fraction(
        Poly::from_coeffs({Rat(-(b.y - 1)), Rat(0), Rat(b.x - 1)}), Poly::monomial(Rat(1), 1));
}

ParamScalar hook_norm(const Partition& la) {
    ParamScalar j = ParamScalar::one();
    Partition conj = la.conjugate();
    for (const Box& b : la.boxes()) {
        int arm = la.part(b.y) - b.x;
        int leg = conj.part(b.x) - b.y;
        // hook = alpha*arm + leg + 1, hook' = alpha*(arm+1) + leg
        j *= ParamScalar::linear_alpha(arm, leg + 1);
        j *= ParamScalar::linear_alpha(arm + 1, leg);
    }
    return j;
}

Dominance dominance_leq(const Partition& la, const Partition& mu) {
    if (la.size() != mu.size()) throw std::invalid_argument("dominance_leq: unequal sizes");
    bool leq = true, geq = true;
    long sa = 0, sb = 0;
    int len = std::max(la.length(), mu.length());
    for (int i = 1; i <= len; ++i) {
        sa += la.part(i);
        sb += mu.part(i);
        if (sa > sb) leq = false;
        if (sa < sb) geq = false;
    }
    if (leq) return Dominance::LessOrEqual;
    if (geq) return Dominance::Greater;
    return Dominance::Incomparable;
}

std::vector<std::pair<Partition, Box>> covers_down(const Partition& la) {
    if (la.empty()) throw std::domain_error("covers_down: empty partition");
    std::vector<std::pair<Partition, Box>> out;
    for (int y = 1; y <= la.length(); ++y) {
        if (y < la.length() && la.part(y) == la.part(y + 1)) continue;  // not a corner
        std::vector<int> parts = la.parts();
        --parts[static_cast<size_t>(y - 1)];
        Box removed{la.part(y), y};
        if (parts[static_cast<size_t>(y - 1)] == 0) parts.erase(parts.begin() + (y - 1));
        out.push_back({Partition(std::move(parts)), removed});
    }
    return out;
}

std::vector<std::pair<Partition, Box>> covers_up(const Partition& la) {
    std::vector<std::pair<Partition, Box>> out;
    for (int y = 1; y <= la.length() + 1; ++y) {
        if (y > 1 && la.part(y) == la.part(y - 1)) continue;  // cannot add below an equal row
        std::vector<int> parts = la.parts();
        if (y <= la.length())
            ++parts[static_cast<size_t>(y - 1)];
        else
            parts.push_back(1);
        out.push_back({Partition(std::move(parts)), Box{la.part(y) + 1, y}});
    }
    return out;
}

}  // namespace bhz
