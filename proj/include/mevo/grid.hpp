#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

namespace mevo {

/// Index of an entity within the active problem's entity list.
using EntityId = std::uint8_t;

/// Tile coordinate: x is the column, y is the row (growing downwards).
struct Position {
    int x = 0;
    int y = 0;

    friend bool operator==(const Position&, const Position&) = default;
    /// Row-major ordering.
    friend std::strong_ordering operator<=>(const Position& a, const Position& b) {
        if (auto c = a.y <=> b.y; c != 0) return c;
        return a.x <=> b.x;
    }
};

struct Offset {
    int dx = 0;
    int dy = 0;
    friend bool operator==(const Offset&, const Offset&) = default;
};

/// Row-major grid of entity indices.
class Level {
public:
    Level(int width, int height, EntityId fill = 0);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    std::size_t size() const noexcept { return cells_.size(); }

    bool in_bounds(int x, int y) const noexcept { return x >= 0 && y >= 0 && x < width_ && y < height_; }
    bool in_bounds(Position p) const noexcept { return in_bounds(p.x, p.y); }

    std::size_t index(Position p) const noexcept {
        return static_cast<std::size_t>(p.y) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(p.x);
    }
    Position position(std::size_t index) const noexcept {
        return {static_cast<int>(index % static_cast<std::size_t>(width_)),
                static_cast<int>(index / static_cast<std::size_t>(width_))};
    }

    EntityId at(Position p) const { return cells_[index(p)]; }
    EntityId at(int x, int y) const { return cells_[index({x, y})]; }
    void set(Position p, EntityId e) { cells_[index(p)] = e; }
    void set(int x, int y, EntityId e) { cells_[index({x, y})] = e; }

    const std::vector<EntityId>& cells() const noexcept { return cells_; }
    std::vector<EntityId>& cells() noexcept { return cells_; }

    friend bool operator==(const Level&, const Level&) = default;

private:
    int width_;
    int height_;
    std::vector<EntityId> cells_;
};

// ---------------------------------------------------------------------------
// Neighborhoods

struct Neighborhood {
    std::string_view name;
    std::vector<Offset> offsets;
};

inline constexpr std::size_t neighborhood_count = 18;

/// The fixed catalog of 18 neighborhoods. The order is part of the genotype
/// mapping; do not reorder.
const std::array<Neighborhood, neighborhood_count>& neighborhood_catalog();

std::optional<std::size_t> find_neighborhood(std::string_view name);

/// In-bounds positions of neighborhood `index` around `center`. Out-of-bounds
/// positions are dropped.
std::vector<Position> neighborhood_positions(std::size_t index, Position center, const Level& level);

/// Allocation-free variant of neighborhood_positions used by the interpreter.
template <typename Fn>
void for_each_neighbor(std::size_t index, Position center, const Level& level, Fn&& fn) {
    for (const Offset& o : neighborhood_catalog()[index].offsets) {
        const Position p{center.x + o.dx, center.y + o.dy};
        if (level.in_bounds(p)) fn(p);
    }
}

// ---------------------------------------------------------------------------
// Graph queries. Connectivity is 4-neighbour (cardinal) only.

std::size_t count_entity(const Level& level, EntityId entity);

/// 4-connected components of cells equal to `entity`, in discovery order of a
/// row-major scan. Each region is sorted row-major.
std::vector<std::vector<Position>> connected_regions(const Level& level, EntityId entity);

/// Number of regions without materialising them.
std::size_t region_count(const Level& level, EntityId entity);

using Passable = std::function<bool(EntityId)>;

/// Minimum number of cardinal steps from `from` to `to` over passable cells.
/// Absent when either endpoint is not passable or no path exists.
std::optional<int> shortest_path_length(const Level& level, const Passable& passable, Position from, Position to);

/// Breadth-first distances from `from` over passable cells; -1 marks unreachable.
std::vector<int> distance_map(const Level& level, const Passable& passable, Position from);

/// Largest shortest-path distance between two cells equal to `entity` that
/// share a region. 0 when fewer than two such cells exist.
int longest_shortest_path(const Level& level, EntityId entity);

}  // namespace mevo
