#pragma once

// Reference implementations used only by tests. They deliberately take a
// different route from the library code they check.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <limits>
#include <numeric>
#include <optional>
#include <vector>

#include "mevo/grid.hpp"
#include "mevo/moea.hpp"
#include "mevo/rng.hpp"
#include "mevo/sokoban.hpp"

namespace oracle {

using mevo::EntityId;
using mevo::Level;
using mevo::Position;

inline Level random_level(mevo::Rng& rng, int w, int h, std::size_t entities, double first_share = -1.0) {
    Level level(w, h);
    for (auto& c : level.cells()) {
        if (first_share >= 0.0) c = rng.unit() < first_share ? 0 : static_cast<EntityId>(1 + rng.below(entities - 1));
        else c = static_cast<EntityId>(rng.below(entities));
    }
    return level;
}

inline std::size_t scan_count(const Level& level, EntityId e) {
    std::size_t n = 0;
    for (int y = 0; y < level.height(); ++y)
        for (int x = 0; x < level.width(); ++x)
            if (level.at(x, y) == e) ++n;
    return n;
}

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

private:
    std::vector<std::size_t> parent_;
};

inline std::size_t union_find_regions(const Level& level, EntityId e) {
    const int w = level.width();
    const int h = level.height();
    UnionFind uf(level.size());
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            if (level.at(x, y) != e) continue;
            if (x + 1 < w && level.at(x + 1, y) == e) uf.unite(level.index({x, y}), level.index({x + 1, y}));
            if (y + 1 < h && level.at(x, y + 1) == e) uf.unite(level.index({x, y}), level.index({x, y + 1}));
        }
    }
    std::vector<char> root(level.size(), 0);
    std::size_t n = 0;
    for (std::size_t i = 0; i < level.size(); ++i) {
        if (level.cells()[i] != e) continue;
        const std::size_t r = uf.find(i);
        if (!root[r]) {
            root[r] = 1;
            ++n;
        }
    }
    return n;
}

/// Breadth-first search over an explicit adjacency list with a deque.
template <typename PassableFn>
std::optional<int> bfs_distance(const Level& level, PassableFn passable, Position from, Position to) {
    const std::size_t n = level.size();
    if (!passable(level.at(from)) || !passable(level.at(to))) return std::nullopt;
    std::vector<std::vector<std::size_t>> adj(n);
    for (int y = 0; y < level.height(); ++y) {
        for (int x = 0; x < level.width(); ++x) {
            if (!passable(level.at(x, y))) continue;
            const int dx[] = {1, -1, 0, 0};
            const int dy[] = {0, 0, 1, -1};
            for (int k = 0; k < 4; ++k) {
                const Position q{x + dx[k], y + dy[k]};
                if (level.in_bounds(q) && passable(level.at(q))) adj[level.index({x, y})].push_back(level.index(q));
            }
        }
    }
    std::vector<int> dist(n, -1);
    std::deque<std::size_t> queue{level.index(from)};
    dist[level.index(from)] = 0;
    while (!queue.empty()) {
        const std::size_t u = queue.front();
        queue.pop_front();
        for (std::size_t v : adj[u]) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    const int d = dist[level.index(to)];
    if (d < 0) return std::nullopt;
    return d;
}

/// Largest finite all-pairs distance via Floyd-Warshall over cells equal to e.
inline int floyd_warshall_diameter(const Level& level, EntityId e) {
    std::vector<std::size_t> cells;
    for (std::size_t i = 0; i < level.size(); ++i)
        if (level.cells()[i] == e) cells.push_back(i);
    const std::size_t n = cells.size();
    constexpr int inf = std::numeric_limits<int>::max() / 4;
    std::vector<int> d(n * n, inf);
    for (std::size_t i = 0; i < n; ++i) {
        d[i * n + i] = 0;
        const Position a = level.position(cells[i]);
        for (std::size_t j = 0; j < n; ++j) {
            const Position b = level.position(cells[j]);
            if (std::abs(a.x - b.x) + std::abs(a.y - b.y) == 1) d[i * n + j] = 1;
        }
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                d[i * n + j] = std::min(d[i * n + j], d[i * n + k] + d[k * n + j]);
    int best = 0;
    for (int v : d)
        if (v < inf) best = std::max(best, v);
    return best;
}

/// Minimum moves for a one-crate board, by backward search over "pull" moves
/// from every goal state. Exact (no caps).
inline std::optional<int> sokoban_single_crate_reverse(const mevo::SokobanBoard& b) {
    const int w = b.width;
    const int h = b.height;
    const int cells = w * h;
    const int target = b.targets.at(0);
    auto free_cell = [&](int c) { return c >= 0 && !b.walls[static_cast<std::size_t>(c)]; };
    auto move = [&](int c, int d) -> int {
        const int x = c % w;
        const int y = c / w;
        const int nx = x + (d == 2) - (d == 1);
        const int ny = y + (d == 3) - (d == 0);
        if (nx < 0 || ny < 0 || nx >= w || ny >= h) return -1;
        return ny * w + nx;
    };
    // dist[player * cells + crate]
    std::vector<int> dist(static_cast<std::size_t>(cells * cells), -1);
    std::deque<std::pair<int, int>> queue;
    if (!free_cell(target)) return std::nullopt;
    for (int p = 0; p < cells; ++p) {
        if (p == target || !free_cell(p)) continue;
        dist[static_cast<std::size_t>(p * cells + target)] = 0;
        queue.emplace_back(p, target);
    }
    while (!queue.empty()) {
        const auto [p, c] = queue.front();
        queue.pop_front();
        const int here = dist[static_cast<std::size_t>(p * cells + c)];
        for (int d = 0; d < 4; ++d) {
            // Predecessor player position: one step back against direction d.
            const int prev = move(p, 3 - d);
            if (!free_cell(prev) || prev == c) continue;
            // Plain walk prev -> p.
            auto visit = [&](int pp, int cc) {
                auto& slot = dist[static_cast<std::size_t>(pp * cells + cc)];
                if (slot < 0) {
                    slot = here + 1;
                    queue.emplace_back(pp, cc);
                }
            };
            visit(prev, c);
            // Push: the crate was at p and moved to c = p + d.
            if (move(p, d) == c) visit(prev, p);
        }
    }
    const int start = dist[static_cast<std::size_t>(b.player * cells + b.crates.at(0))];
    if (start < 0) return std::nullopt;
    return start;
}

/// Fronts by repeatedly peeling the non-dominated set with direct pairwise checks.
inline mevo::Fronts pairwise_fronts(const std::vector<mevo::FitnessVector>& f) {
    auto dom = [](const mevo::FitnessVector& a, const mevo::FitnessVector& b) {
        bool better = false;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] < b[i]) return false;
            better = better || a[i] > b[i];
        }
        return better;
    };
    std::vector<char> removed(f.size(), 0);
    std::size_t left = f.size();
    mevo::Fronts fronts;
    while (left > 0) {
        std::vector<std::size_t> front;
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (removed[i]) continue;
            bool dominated = false;
            for (std::size_t j = 0; j < f.size() && !dominated; ++j)
                dominated = !removed[j] && j != i && dom(f[j], f[i]);
            if (!dominated) front.push_back(i);
        }
        for (std::size_t i : front) removed[i] = 1;
        left -= front.size();
        fronts.push_back(std::move(front));
    }
    return fronts;
}

/// Pearson chi-square statistic of `counts` against a uniform expectation.
inline double chi_square_uniform(const std::vector<std::size_t>& counts) {
    const double total = std::accumulate(counts.begin(), counts.end(), 0.0);
    const double expected = total / static_cast<double>(counts.size());
    double chi = 0.0;
    for (auto c : counts) chi += (static_cast<double>(c) - expected) * (static_cast<double>(c) - expected) / expected;
    return chi;
}

}  // namespace oracle
