#include "mevo/level_io.hpp"

#include <stdexcept>
#include <vector>

#include <fmt/format.h>

namespace mevo {

std::string render_text(const Level& level, const ProblemSpec& problem) {
    std::string out;
    out.reserve(level.size() + static_cast<std::size_t>(level.height()));
    for (int y = 0; y < level.height(); ++y) {
        for (int x = 0; x < level.width(); ++x) out.push_back(problem.entities.at(level.at(x, y)).glyph);
        out.push_back('\n');
    }
    return out;
}

Level parse_level(std::string_view text, const ProblemSpec& problem) {
    std::vector<std::string_view> rows;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view row = text.substr(pos, end - pos);
        if (!row.empty() && row.back() == '\r') row.remove_suffix(1);
        rows.push_back(row);
        pos = end + 1;
    }
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
    if (rows.empty() || rows.front().empty()) throw std::invalid_argument("level text is empty");

    Level level(static_cast<int>(rows.front().size()), static_cast<int>(rows.size()));
    for (std::size_t y = 0; y < rows.size(); ++y) {
        if (rows[y].size() != rows.front().size()) {
            throw std::invalid_argument(fmt::format("row {}: expected {} tiles, found {}", y + 1,
                                                    rows.front().size(), rows[y].size()));
        }
        for (std::size_t x = 0; x < rows[y].size(); ++x) {
            std::size_t e = 0;
            while (e < problem.entities.size() && problem.entities[e].glyph != rows[y][x]) ++e;
            if (e == problem.entities.size()) {
                throw std::invalid_argument(
                    fmt::format("row {}, column {}: unknown glyph '{}' for {}", y + 1, x + 1, rows[y][x], problem.name));
            }
            level.set(static_cast<int>(x), static_cast<int>(y), static_cast<EntityId>(e));
        }
    }
    return level;
}

std::string render_ppm(const Level& level, const ProblemSpec& problem, int scale) {
    const int w = level.width() * scale;
    const int h = level.height() * scale;
    std::string out = fmt::format("P6\n{} {}\n255\n", w, h);
    out.reserve(out.size() + static_cast<std::size_t>(w) * static_cast<std::size_t>(h) * 3);
    for (int py = 0; py < h; ++py) {
        for (int px = 0; px < w; ++px) {
            const auto& c = problem.entities.at(level.at(px / scale, py / scale)).color;
            out.append(reinterpret_cast<const char*>(c.data()), c.size());
        }
    }
    return out;
}

}  // namespace mevo
