#pragma once

// The three level-generation problems (Binary maze, Zelda dungeon, Sokoban
// puzzle): entities, initial tile distributions, metrics, fitness scaling,
// and evaluation of a generator by sampling levels.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mevo/genotype.hpp"
#include "mevo/grid.hpp"
#include "mevo/marahel.hpp"
#include "mevo/rng.hpp"
#include "mevo/sokoban.hpp"
#include "mevo/tiles.hpp"

namespace mevo {

enum class ProblemKind { binary, zelda, sokoban };

struct EntityInfo {
    std::string name;
    char glyph;
    double init_probability;
    std::array<std::uint8_t, 3> color;
};

/// Scaling parameters of one objective. range_max may be +infinity.
struct ObjectiveSpec {
    std::string name;
    double range_min = 0.0;
    double range_max = 0.0;
    double max = 0.0;
};

struct ProblemSpec {
    ProblemKind kind;
    std::string name;
    std::vector<EntityInfo> entities;
    int width;
    int height;
    std::vector<ObjectiveSpec> objectives;

    std::size_t entity_count() const noexcept { return entities.size(); }
    std::vector<std::string> entity_names() const;
};

const ProblemSpec& problem_spec(ProblemKind kind);
/// "binary", "zelda" or "sokoban"; throws std::invalid_argument otherwise.
ProblemKind parse_problem_kind(std::string_view name);

/// Objective values in [0, 1], in ProblemSpec::objectives order.
using FitnessVector = std::vector<double>;

enum class Scaling {
    /// Distance-to-range scaling: 1 inside [range_min, range_max], x / range_min
    /// below it, 1 - (x - range_max) / (max - range_max) above it, clamped.
    corrected,
    /// The branch formulas exactly as printed in the original description
    /// ((range_min - x) / range_min and (x - range_max) / (max - range_max)).
    /// They grow away from the acceptable range; kept for comparison runs only.
    raw,
};

double scale_fitness(double x, const ObjectiveSpec& spec, Scaling scaling = Scaling::corrected);

struct EvalOptions {
    Scaling scaling = Scaling::corrected;
    /// Zelda path lengths treat enemies as walls when set.
    bool enemies_block = false;
    int sokoban_step_cap = default_step_cap;
    std::size_t sokoban_node_cap = default_node_cap;
};

/// Fills a problem-sized level with tiles drawn i.i.d. from the problem's
/// initial distribution (one rng draw per cell, row-major).
Level init_map(const ProblemSpec& problem, Rng& rng);

struct BinaryMetrics {
    int regions = 0;
    int path_improvement = 0;
};
BinaryMetrics binary_metrics(const Level& initial, const Level& final);

struct ZeldaMetrics {
    int players = 0;
    int keys = 0;
    int doors = 0;
    int enemies = 0;
    int solution_length = 0;
};
/// solution_length is player->key plus key->door over non-solid cells, and 0
/// unless there is exactly one player, key and door and both legs exist.
ZeldaMetrics zelda_metrics(const Level& level, bool enemies_block = false);

struct SokobanMetrics {
    int players = 0;
    int crates = 0;
    int abs_difference = 0;
    int solution_length = 0;
};
SokobanMetrics sokoban_metrics(const Level& level, int step_cap = default_step_cap,
                               std::size_t node_cap = default_node_cap);

/// Unscaled metric values in objective order.
std::vector<double> raw_metrics(const ProblemSpec& problem, const Level& initial, const Level& final,
                                const EvalOptions& options = {});
FitnessVector scale_metrics(const ProblemSpec& problem, const std::vector<double>& raw,
                            const EvalOptions& options = {});

struct Sample {
    Level initial;
    Level final;
};

/// Sample `index` of a generator: a fresh stream seeded with
/// sample_seed(seed, index) drives the initialization and then the script.
Sample generate_sample(const GeneratorScript& script, const ProblemSpec& problem, std::uint64_t seed,
                       std::uint64_t index);

/// Mean scaled fitness over `samples` levels. The script's own seed is used
/// unless `seed` is given.
FitnessVector evaluate_script(const GeneratorScript& script, const ProblemSpec& problem, std::size_t samples,
                              const EvalOptions& options = {}, std::optional<std::uint64_t> seed = std::nullopt);

FitnessVector evaluate_generator(const Chromosome& chromosome, const ProblemSpec& problem, std::size_t samples,
                                 const EvalOptions& options = {});

}  // namespace mevo
