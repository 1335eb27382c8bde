#include "bhz/path.hpp"

#include <map>
#include <stdexcept>

namespace bhz {

Path Path::concat(const Path& other) const {
    if (other.start_x != end_x() || other.start_y != end_y())
        throw std::invalid_argument("Path::concat: endpoints do not meet");
    Path p = *this;
    p.increments.insert(p.increments.end(), other.increments.begin(), other.increments.end());
    return p;
}

namespace {
void bridges_dfs(int x, int y, int ex, int ey, int height_max, Path& cur, std::vector<Path>& out) {
    if (x + 1 == ex) {
        cur.increments.push_back(ey - y);
        out.push_back(cur);
        cur.increments.pop_back();
        return;
    }
    for (int ny = 0; ny <= height_max; ++ny) {
        cur.increments.push_back(ny - y);
        bridges_dfs(x + 1, ny, ex, ey, height_max, cur, out);
        cur.increments.pop_back();
    }
}
}  // namespace

std::vector<Path> enumerate_bridges(int sx, int sy, int ex, int ey, int height_max) {
    std::vector<Path> out;
    if (ex <= sx || height_max < 0) return out;
    Path cur;
    cur.start_x = sx;
    cur.start_y = sy;
    bridges_dfs(sx, sy, ex, ey, height_max, cur, out);
    return out;
}

namespace {
void paths_dfs(int x, int y, int ex, int ey, int ann_max, int create_max, Path& cur,
               std::vector<Path>& out) {
    int steps_left = ex - x;
    if (steps_left == 0) {
        if (y == ey) out.push_back(cur);
        return;
    }
    // step increment d: gamma = -d, need -ann_max <= d <= create_max;
    // reachability of ey within the remaining budget prunes the rest.
    for (int d = -ann_max; d <= create_max; ++d) {
        int ny = y + d;
        int rem = steps_left - 1;
        if (ey - ny > rem * create_max || ey - ny < -rem * ann_max) continue;
        cur.increments.push_back(d);
        paths_dfs(x + 1, ny, ex, ey, ann_max, create_max, cur, out);
        cur.increments.pop_back();
    }
}
}  // namespace

std::vector<Path> enumerate_paths(int sx, int sy, int ex, int ey, int ann_max, int create_max) {
    std::vector<Path> out;
    if (ex <= sx) return out;
    Path cur;
    cur.start_x = sx;
    cur.start_y = sy;
    paths_dfs(sx, sy, ex, ey, ann_max, create_max, cur, out);
    return out;
}

std::vector<std::vector<int>> increasing_colorings(int len, int lo, int hi) {
    std::vector<std::vector<int>> out;
    if (len == 0) {
        out.push_back({});
        return out;
    }
    if (len > hi - lo + 1) return out;
    std::vector<int> cur;
    // choose len strictly increasing values in [lo, hi]
    std::function<void(int)> rec = [&](int next) {
        if (static_cast<int>(cur.size()) == len) {
            out.push_back(cur);
            return;
        }
        int needed = len - static_cast<int>(cur.size());
        for (int v = next; v <= hi - needed + 1; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(lo);
    return out;
}

long count_bridges_dp(int sx, int sy, int ex, int ey, int height_max) {
    if (ex <= sx) return 0;
    // counts[y] over interior heights, plus the exempt endpoints
    std::map<int, long> cur;
    cur[sy] = 1;
    for (int x = sx; x < ex; ++x) {
        std::map<int, long> next;
        bool last = (x + 1 == ex);
        for (const auto& [y, c] : cur) {
            if (last) {
                next[ey] += c;
            } else {
                for (int ny = 0; ny <= height_max; ++ny) next[ny] += c;
            }
        }
        cur = std::move(next);
    }
    auto it = cur.find(ey);
    return it == cur.end() ? 0 : it->second;
}

}  // namespace bhz
