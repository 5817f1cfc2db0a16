#pragma once

#include "mevo/grid.hpp"

// Entity indices of the three problems. Every problem lists `empty` first so
// the connect order treats it as the passable entity.
namespace mevo::binary_tiles {
inline constexpr EntityId empty = 0;
inline constexpr EntityId solid = 1;
}  // namespace mevo::binary_tiles

namespace mevo::zelda_tiles {
inline constexpr EntityId empty = 0;
inline constexpr EntityId solid = 1;
inline constexpr EntityId player = 2;
inline constexpr EntityId key = 3;
inline constexpr EntityId door = 4;
inline constexpr EntityId enemy = 5;
}  // namespace mevo::zelda_tiles

namespace mevo::sokoban_tiles {
inline constexpr EntityId empty = 0;
inline constexpr EntityId solid = 1;
inline constexpr EntityId player = 2;
inline constexpr EntityId crate = 3;
inline constexpr EntityId target = 4;
}  // namespace mevo::sokoban_tiles
