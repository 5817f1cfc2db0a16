#include "mevo/grid.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace mevo {

Level::Level(int width, int height, EntityId fill) : width_(width), height_(height) {
    if (width < 1 || height < 1) throw std::invalid_argument("level dimensions must be at least 1x1");
    cells_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill);
}

namespace {

std::vector<Offset> window(int radius, auto keep) {
    std::vector<Offset> out;
    for (int dy = -radius; dy <= radius; ++dy) {
        for (int dx = -radius; dx <= radius; ++dx) {
            if (keep(dx, dy)) out.push_back({dx, dy});
        }
    }
    return out;
}

std::array<Neighborhood, neighborhood_count> build_catalog() {
    auto chebyshev = [](int dx, int dy) { return std::max(std::abs(dx), std::abs(dy)); };
    return {{
        {"self", {{0, 0}}},
        {"up", {{0, -1}}},
        {"down", {{0, 1}}},
        {"left", {{-1, 0}}},
        {"right", {{1, 0}}},
        {"all_3x3", window(1, [](int, int) { return true; })},
        {"ring_3x3", window(1, [](int dx, int dy) { return dx != 0 || dy != 0; })},
        {"plus_3x3", window(1, [](int dx, int dy) { return dx == 0 || dy == 0; })},
        {"cardinal_3x3", window(1, [](int dx, int dy) { return (dx == 0) != (dy == 0); })},
        {"diagonal_3x3", window(1, [](int dx, int dy) { return dx != 0 && dy != 0; })},
        {"horizontal_3", window(1, [](int, int dy) { return dy == 0; })},
        {"vertical_3", window(1, [](int dx, int) { return dx == 0; })},
        {"all_5x5", window(2, [](int, int) { return true; })},
        {"ring_5x5", window(2, [&](int dx, int dy) { return chebyshev(dx, dy) == 2; })},
        {"plus_5x5", window(2, [](int dx, int dy) { return std::abs(dx) + std::abs(dy) <= 2; })},
        {"cardinal_5x5", window(2, [](int dx, int dy) { return (dx == 0) != (dy == 0); })},
        {"diagonal_5x5", window(2, [](int dx, int dy) { return dx != 0 && std::abs(dx) == std::abs(dy); })},
        {"horizontal_5", window(2, [](int, int dy) { return dy == 0; })},
    }};
}

constexpr std::array<Offset, 4> kCardinal{{{0, -1}, {-1, 0}, {1, 0}, {0, 1}}};

}  // namespace

const std::array<Neighborhood, neighborhood_count>& neighborhood_catalog() {
    static const auto catalog = build_catalog();
    return catalog;
}

std::optional<std::size_t> find_neighborhood(std::string_view name) {
    const auto& catalog = neighborhood_catalog();
    for (std::size_t i = 0; i < catalog.size(); ++i) {
        if (catalog[i].name == name) return i;
    }
    return std::nullopt;
}

std::vector<Position> neighborhood_positions(std::size_t index, Position center, const Level& level) {
    if (index >= neighborhood_count) throw std::out_of_range("neighborhood index out of range");
    std::vector<Position> out;
    for_each_neighbor(index, center, level, [&](Position p) { out.push_back(p); });
    return out;
}

std::size_t count_entity(const Level& level, EntityId entity) {
    return static_cast<std::size_t>(std::count(level.cells().begin(), level.cells().end(), entity));
}

namespace {

// Flood-fills every region of `entity`; `on_cell(region, index)` is called
// once per matching cell in BFS order.
template <typename OnCell>
std::size_t flood_regions(const Level& level, EntityId entity, OnCell&& on_cell) {
    const auto& cells = level.cells();
    std::vector<char> seen(cells.size(), 0);
    std::vector<std::size_t> queue;
    queue.reserve(cells.size());
    std::size_t regions = 0;
    for (std::size_t start = 0; start < cells.size(); ++start) {
        if (seen[start] || cells[start] != entity) continue;
        queue.clear();
        queue.push_back(start);
        seen[start] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::size_t cur = queue[head];
            on_cell(regions, cur);
            const Position p = level.position(cur);
            for (const Offset& o : kCardinal) {
                const Position q{p.x + o.dx, p.y + o.dy};
                if (!level.in_bounds(q)) continue;
                const std::size_t qi = level.index(q);
                if (seen[qi] || cells[qi] != entity) continue;
                seen[qi] = 1;
                queue.push_back(qi);
            }
        }
        ++regions;
    }
    return regions;
}

}  // namespace

std::vector<std::vector<Position>> connected_regions(const Level& level, EntityId entity) {
    std::vector<std::vector<Position>> regions;
    flood_regions(level, entity, [&](std::size_t region, std::size_t cell) {
        if (region == regions.size()) regions.emplace_back();
        regions[region].push_back(level.position(cell));
    });
    for (auto& r : regions) std::sort(r.begin(), r.end());
    return regions;
}

std::size_t region_count(const Level& level, EntityId entity) {
    return flood_regions(level, entity, [](std::size_t, std::size_t) {});
}

std::vector<int> distance_map(const Level& level, const Passable& passable, Position from) {
    std::vector<int> dist(level.size(), -1);
    if (!level.in_bounds(from) || !passable(level.at(from))) return dist;
    std::vector<std::size_t> queue;
    queue.reserve(level.size());
    queue.push_back(level.index(from));
    dist[queue.front()] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::size_t cur = queue[head];
        const Position p = level.position(cur);
        for (const Offset& o : kCardinal) {
            const Position q{p.x + o.dx, p.y + o.dy};
            if (!level.in_bounds(q)) continue;
            const std::size_t qi = level.index(q);
            if (dist[qi] >= 0 || !passable(level.cells()[qi])) continue;
            dist[qi] = dist[cur] + 1;
            queue.push_back(qi);
        }
    }
    return dist;
}

std::optional<int> shortest_path_length(const Level& level, const Passable& passable, Position from, Position to) {
    if (!level.in_bounds(from) || !level.in_bounds(to)) throw std::out_of_range("path endpoint outside the level");
    if (!passable(level.at(from)) || !passable(level.at(to))) return std::nullopt;
    const int d = distance_map(level, passable, from)[level.index(to)];
    if (d < 0) return std::nullopt;
    return d;
}

int longest_shortest_path(const Level& level, EntityId entity) {
    const auto& cells = level.cells();
    const int w = level.width();
    const int h = level.height();
    std::vector<int> dist(cells.size());
    std::vector<int> queue(cells.size());
    int best = 0;
    for (std::size_t start = 0; start < cells.size(); ++start) {
        if (cells[start] != entity) continue;
        std::fill(dist.begin(), dist.end(), -1);
        std::size_t tail = 0;
        queue[tail++] = static_cast<int>(start);
        dist[start] = 0;
        for (std::size_t head = 0; head < tail; ++head) {
            const int cur = queue[head];
            const int x = cur % w;
            const int y = cur / w;
            const int d = dist[static_cast<std::size_t>(cur)];
            best = std::max(best, d);
            auto visit = [&](int n) {
                const auto ni = static_cast<std::size_t>(n);
                if (dist[ni] < 0 && cells[ni] == entity) {
                    dist[ni] = d + 1;
                    queue[tail++] = n;
                }
            };
            if (y > 0) visit(cur - w);
            if (x > 0) visit(cur - 1);
            if (x + 1 < w) visit(cur + 1);
            if (y + 1 < h) visit(cur + w);
        }
    }
    return best;
}

}  // namespace mevo
