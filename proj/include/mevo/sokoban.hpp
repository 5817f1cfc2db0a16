#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mevo/grid.hpp"

namespace mevo {

inline constexpr int default_step_cap = 60;
inline constexpr std::size_t default_node_cap = 1'000'000;

/// Static walls plus the dynamic pieces. Cells are row-major indices. Unlike
/// a tile level, a board can hold a crate on a target.
struct SokobanBoard {
    int width = 0;
    int height = 0;
    std::vector<char> walls;
    int player = 0;
    std::vector<int> crates;
    std::vector<int> targets;
};

/// Requires exactly one player and as many crates as targets (at least one);
/// throws std::invalid_argument otherwise.
SokobanBoard board_from_level(const Level& level);

/// Minimum number of player moves (pushes included) that puts every crate on
/// a target, by breadth-first search over (player, crate set) states. Absent
/// when unsolvable, when the optimum exceeds `step_cap`, or when more than
/// `node_cap` states would be expanded.
std::optional<int> sokoban_solve(const SokobanBoard& board, int step_cap = default_step_cap,
                                 std::size_t node_cap = default_node_cap);

std::optional<int> sokoban_solve(const Level& level, int step_cap = default_step_cap,
                                 std::size_t node_cap = default_node_cap);

}  // namespace mevo
