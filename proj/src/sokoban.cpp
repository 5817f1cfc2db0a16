#include "mevo/sokoban.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "mevo/tiles.hpp"

namespace mevo {

SokobanBoard board_from_level(const Level& level) {
    using namespace sokoban_tiles;
    SokobanBoard board;
    board.width = level.width();
    board.height = level.height();
    board.walls.assign(level.size(), 0);
    int players = 0;
    for (std::size_t i = 0; i < level.size(); ++i) {
        const int cell = static_cast<int>(i);
        switch (level.cells()[i]) {
            case solid: board.walls[i] = 1; break;
            case player:
                board.player = cell;
                ++players;
                break;
            case crate: board.crates.push_back(cell); break;
            case target: board.targets.push_back(cell); break;
            default: break;
        }
    }
    if (players != 1) throw std::invalid_argument("sokoban board needs exactly one player");
    if (board.crates.empty() || board.crates.size() != board.targets.size()) {
        throw std::invalid_argument("sokoban board needs as many crates as targets, at least one");
    }
    return board;
}

namespace {

// State key: two bytes of player index followed by the crate bitset.
class StateCodec {
public:
    explicit StateCodec(std::size_t cells) : bytes_(2 + (cells + 7) / 8) {}

    std::string encode(int player, const std::vector<int>& crates) const {
        std::string key(bytes_, '\0');
        key[0] = static_cast<char>(player & 0xff);
        key[1] = static_cast<char>(player >> 8);
        for (int c : crates) set(key, c, true);
        return key;
    }
    static int player(const std::string& key) {
        return static_cast<unsigned char>(key[0]) | (static_cast<unsigned char>(key[1]) << 8);
    }
    static void set_player(std::string& key, int p) {
        key[0] = static_cast<char>(p & 0xff);
        key[1] = static_cast<char>(p >> 8);
    }
    static bool crate(const std::string& key, int cell) {
        return (static_cast<unsigned char>(key[2 + cell / 8]) >> (cell % 8)) & 1u;
    }
    static void set(std::string& key, int cell, bool on) {
        auto& byte = reinterpret_cast<unsigned char&>(key[2 + static_cast<std::size_t>(cell) / 8]);
        const auto bit = static_cast<unsigned char>(1u << (cell % 8));
        byte = on ? static_cast<unsigned char>(byte | bit) : static_cast<unsigned char>(byte & ~bit);
    }

private:
    std::size_t bytes_;
};

}  // namespace

std::optional<int> sokoban_solve(const SokobanBoard& board, int step_cap, std::size_t node_cap) {
    const std::size_t cells = static_cast<std::size_t>(board.width) * static_cast<std::size_t>(board.height);
    if (board.walls.size() != cells || cells > 0xffff) throw std::invalid_argument("malformed sokoban board");
    const StateCodec codec(cells);
    std::vector<char> is_target(cells, 0);
    for (int t : board.targets) is_target[static_cast<std::size_t>(t)] = 1;

    auto solved = [&](const std::string& key) {
        for (std::size_t c = 0; c < cells; ++c) {
            if (StateCodec::crate(key, static_cast<int>(c)) && !is_target[c]) return false;
        }
        return true;
    };
    // Neighbour of `cell` in direction d, or -1 when it leaves the board.
    auto step = [&](int cell, int d) {
        const int x = cell % board.width;
        const int y = cell / board.width;
        switch (d) {
            case 0: return y > 0 ? cell - board.width : -1;
            case 1: return x > 0 ? cell - 1 : -1;
            case 2: return x + 1 < board.width ? cell + 1 : -1;
            default: return y + 1 < board.height ? cell + board.width : -1;
        }
    };

    std::string start = codec.encode(board.player, board.crates);
    if (solved(start)) return 0;

    std::unordered_set<std::string> seen{start};
    std::vector<std::string> frontier{std::move(start)};
    std::vector<std::string> next;
    std::size_t expanded = 0;
    for (int depth = 0; depth < step_cap && !frontier.empty(); ++depth) {
        next.clear();
        for (const std::string& key : frontier) {
            if (++expanded > node_cap) return std::nullopt;
            const int p = StateCodec::player(key);
            for (int d = 0; d < 4; ++d) {
                const int q = step(p, d);
                if (q < 0 || board.walls[static_cast<std::size_t>(q)]) continue;
                std::string succ = key;
                const bool push = StateCodec::crate(key, q);
                if (push) {
                    const int beyond = step(q, d);
                    if (beyond < 0 || board.walls[static_cast<std::size_t>(beyond)] || StateCodec::crate(key, beyond)) {
                        continue;
                    }
                    StateCodec::set(succ, q, false);
                    StateCodec::set(succ, beyond, true);
                }
                StateCodec::set_player(succ, q);
                if (!seen.insert(succ).second) continue;
                // Crates only move on a push, so only pushes can reach the goal.
                if (push && solved(succ)) return depth + 1;
                next.push_back(std::move(succ));
            }
        }
        frontier.swap(next);
    }
    return std::nullopt;
}

std::optional<int> sokoban_solve(const Level& level, int step_cap, std::size_t node_cap) {
    return sokoban_solve(board_from_level(level), step_cap, node_cap);
}

}  // namespace mevo
