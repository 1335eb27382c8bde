#pragma once

#include <vector>

namespace bhz {

/// Directed lattice path with unit steps (1, d_j). The paper's step label is
/// gamma_j = -d_j; that sign convention is confined to gamma().
struct Path {
    int start_x = 0;
    int start_y = 0;
    std::vector<int> increments;

    int length() const { return static_cast<int>(increments.size()); }
    int end_x() const { return start_x + length(); }
    int end_y() const {
        int y = start_y;
        for (int d : increments) y += d;
        return y;
    }
    /// Height after step j (y_0 = start_y, j in [0, length]).
    int height(int j) const {
        int y = start_y;
        for (int i = 0; i < j; ++i) y += increments[static_cast<size_t>(i)];
        return y;
    }
    /// gamma_j = -(increment of the j-th step), j 1-based.
    int gamma(int j) const { return -increments[static_cast<size_t>(j - 1)]; }
    /// Sum of gamma_l over l in (j, length], j 0-based-exclusive.
    int gamma_suffix(int j) const {
        int s = 0;
        for (int l = j + 1; l <= length(); ++l) s += gamma(l);
        return s;
    }

    Path shifted_right(int units) const {
        Path p = *this;
        p.start_x += units;
        return p;
    }
    /// Concatenation; other.start must coincide with this path's end.
    Path concat(const Path& other) const;

    bool operator==(const Path& o) const {
        return start_x == o.start_x && start_y == o.start_y && increments == o.increments;
    }
};

/// All bridges from (sx, sy) to (ex, ey): interior points (endpoints exempt)
/// have height in [0, height_max]. Deterministic order (interior heights
/// ascending, leftmost first). Empty when ex <= sx.
std::vector<Path> enumerate_bridges(int sx, int sy, int ex, int ey, int height_max);

/// All paths from (sx, sy) to (ex, ey) with every annihilating label bounded,
/// i.e. gamma_j <= ann_max, and every creating label bounded, -gamma_j <=
/// create_max. Heights are unrestricted otherwise.
std::vector<Path> enumerate_paths(int sx, int sy, int ex, int ey, int ann_max, int create_max);

/// Strictly increasing colorings [1..len] -> [lo..hi], lexicographic order.
std::vector<std::vector<int>> increasing_colorings(int len, int lo, int hi);

/// Independent DP bridge counter (test oracle).
long count_bridges_dp(int sx, int sy, int ex, int ey, int height_max);

}  // namespace bhz
