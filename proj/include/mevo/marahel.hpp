#pragma once

// Restricted Marahel generator language: explorers that visit tiles in a
// given order and rewrite the level through condition -> executer rules.

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <variant>
#include <vector>

#include "mevo/grid.hpp"
#include "mevo/rng.hpp"

namespace mevo {

enum class Order : std::uint8_t { horizontal, vertical, random, connect };
enum class Comparator : std::uint8_t { greater, less, equal, not_equal };

inline constexpr std::size_t max_explorers = 5;
inline constexpr std::size_t max_rules = 2;
inline constexpr std::size_t max_executers = 2;
inline constexpr int max_threshold = 9;

/// Entity used by the connect order: every problem declares its passable
/// entity first.
inline constexpr EntityId passable_entity = 0;

std::string_view to_string(Order order);
std::string_view to_string(Comparator cmp);

/// `<neighborhood>(<entity>) <cmp> <threshold>`: counts cells of `entity`
/// inside the neighborhood around the visited tile.
struct NeighborhoodCheck {
    std::uint8_t neighborhood = 0;
    EntityId entity = 0;
    Comparator comparator = Comparator::greater;
    int threshold = 0;
    friend bool operator==(const NeighborhoodCheck&, const NeighborhoodCheck&) = default;
};

/// `noise(<p>)`: true with probability p. Stored in tenths (0..9).
struct Noise {
    int tenths = 0;
    double probability() const noexcept { return tenths / 10.0; }
    friend bool operator==(const Noise&, const Noise&) = default;
};

using Condition = std::variant<NeighborhoodCheck, Noise>;

struct Executer {
    std::uint8_t neighborhood = 0;
    EntityId entity = 0;
    friend bool operator==(const Executer&, const Executer&) = default;
};

struct Rule {
    Condition condition;
    std::vector<Executer> executers;
    friend bool operator==(const Rule&, const Rule&) = default;
};

struct Explorer {
    Order order = Order::horizontal;
    std::vector<Rule> rules;
    friend bool operator==(const Explorer&, const Explorer&) = default;
};

struct GeneratorScript {
    std::vector<Explorer> explorers;
    std::uint32_t seed = 0;
    friend bool operator==(const GeneratorScript&, const GeneratorScript&) = default;
};

/// Throws std::invalid_argument describing the first violated invariant
/// (explorer/rule/executer counts, index ranges against `entity_count`).
void validate(const GeneratorScript& script, std::size_t entity_count);

/// Tiles visited by an explorer, in order. Only `random` draws from `rng`
/// (one Fisher-Yates shuffle of the row-major tile list).
///
/// `connect` visits the tiles of L-shaped paths (horizontal leg first, both
/// endpoints included) joining every region of `passable_entity` to the
/// first discovered region. Regions are merged in discovery order; each one
/// is joined from its closest tile pair to the already-merged group (Manhattan
/// distance, ties broken row-major on the merged-side tile, then on the
/// region-side tile). A region that an earlier path crosses counts as merged.
/// Tiles appear once, in first-visit order. Empty when the passable cells
/// already form at most one region.
std::vector<Position> visit_sequence(Order order, const Level& level, Rng& rng);

bool evaluate_condition(const Condition& condition, const Level& level, Position pos, Rng& rng);

/// Writes are immediate and clipped at the border.
void apply_executers(const std::vector<Executer>& executers, Level& level, Position pos);

/// Per-rule firing counts, filled by run_explorer when requested.
struct ExplorerTrace {
    std::vector<std::size_t> firings;
    std::size_t visits = 0;
};

/// At every visited tile the rules are tried in order; the first one whose
/// condition holds fires and the rest are skipped.
void run_explorer(const Explorer& explorer, Level& level, Rng& rng, ExplorerTrace* trace = nullptr);

/// Runs the explorers in script order on the same level and random stream.
void run_script(const GeneratorScript& script, Level& level, Rng& rng);

}  // namespace mevo
