#pragma once

#include <string>
#include <string_view>

#include "mevo/grid.hpp"
#include "mevo/problems.hpp"

namespace mevo {

/// One row per line, one glyph per tile, each row newline-terminated.
std::string render_text(const Level& level, const ProblemSpec& problem);

/// Inverse of render_text. Rows must be non-empty and equally long; throws
/// std::invalid_argument naming the row and column of a bad glyph.
Level parse_level(std::string_view text, const ProblemSpec& problem);

/// Binary PPM (P6), `scale` pixels per tile, colored with the problem's
/// entity colors.
std::string render_ppm(const Level& level, const ProblemSpec& problem, int scale = 16);

}  // namespace mevo
