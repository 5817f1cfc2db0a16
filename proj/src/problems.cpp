#include "mevo/problems.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace mevo {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::array<std::uint8_t, 3> kWhite{255, 255, 255};
constexpr std::array<std::uint8_t, 3> kBlack{0, 0, 0};
constexpr std::array<std::uint8_t, 3> kGreen{0, 200, 0};
constexpr std::array<std::uint8_t, 3> kRed{220, 0, 0};
constexpr std::array<std::uint8_t, 3> kYellow{240, 220, 0};
constexpr std::array<std::uint8_t, 3> kCyan{0, 220, 220};
constexpr std::array<std::uint8_t, 3> kBlue{0, 60, 230};

ProblemSpec make_binary() {
    return {ProblemKind::binary,
            "binary",
            {{"empty", '.', 0.5, kWhite}, {"solid", '#', 0.5, kBlack}},
            14,
            14,
            {{"regions", 1, 1, 10}, {"path_improvement", 20, kInf, kInf}}};
}

ProblemSpec make_zelda() {
    return {ProblemKind::zelda,
            "zelda",
            {{"empty", '.', 0.50, kWhite},
             {"solid", '#', 0.25, kBlack},
             {"player", '@', 0.05, kGreen},
             {"key", '+', 0.05, kYellow},
             {"door", 'D', 0.05, kCyan},
             {"enemy", 'e', 0.10, kRed}},
            11,
            7,
            {{"players", 1, 1, 10},
             {"keys", 1, 1, 10},
             {"doors", 1, 1, 10},
             {"enemies", 2, 4, 10},
             {"solution_length", 20, kInf, kInf}}};
}

ProblemSpec make_sokoban() {
    return {ProblemKind::sokoban,
            "sokoban",
            {{"empty", '.', 0.45, kWhite},
             {"solid", '#', 0.40, kBlack},
             {"player", '@', 0.05, kGreen},
             {"crate", '$', 0.05, kRed},
             {"target", 'x', 0.05, kBlue}},
            5,
            5,
            {{"players", 1, 1, 10},
             {"crates", 2, 4, 10},
             {"abs_difference", 0, 0, 10},
             {"solution_length", 20, kInf, kInf}}};
}

int count(const Level& level, EntityId e) { return static_cast<int>(count_entity(level, e)); }

std::optional<Position> find_first(const Level& level, EntityId e) {
    const auto& cells = level.cells();
    const auto it = std::find(cells.begin(), cells.end(), e);
    if (it == cells.end()) return std::nullopt;
    return level.position(static_cast<std::size_t>(it - cells.begin()));
}

}  // namespace

std::vector<std::string> ProblemSpec::entity_names() const {
    std::vector<std::string> out;
    out.reserve(entities.size());
    for (const auto& e : entities) out.push_back(e.name);
    return out;
}

const ProblemSpec& problem_spec(ProblemKind kind) {
    static const ProblemSpec binary = make_binary();
    static const ProblemSpec zelda = make_zelda();
    static const ProblemSpec sokoban = make_sokoban();
    switch (kind) {
        case ProblemKind::binary: return binary;
        case ProblemKind::zelda: return zelda;
        case ProblemKind::sokoban: return sokoban;
    }
    throw std::invalid_argument("unknown problem");
}

ProblemKind parse_problem_kind(std::string_view name) {
    if (name == "binary") return ProblemKind::binary;
    if (name == "zelda") return ProblemKind::zelda;
    if (name == "sokoban") return ProblemKind::sokoban;
    throw std::invalid_argument("unknown problem '" + std::string(name) + "' (expected binary, zelda or sokoban)");
}

double scale_fitness(double x, const ObjectiveSpec& spec, Scaling scaling) {
    const double lo = spec.range_min;
    const double hi = spec.range_max;
    if (x >= lo && x <= hi) return 1.0;
    double value = 0.0;
    if (x < lo) {
        if (lo <= 0.0) return 0.0;
        value = scaling == Scaling::corrected ? x / lo : (lo - x) / lo;
    } else {
        // x > hi, so hi is finite here.
        if (!(spec.max > hi)) return 0.0;
        const double t = (x - hi) / (spec.max - hi);
        value = scaling == Scaling::corrected ? 1.0 - t : t;
    }
    return std::clamp(value, 0.0, 1.0);
}

Level init_map(const ProblemSpec& problem, Rng& rng) {
    Level level(problem.width, problem.height);
    for (auto& cell : level.cells()) {
        const double u = rng.unit();
        double acc = 0.0;
        EntityId pick = static_cast<EntityId>(problem.entities.size() - 1);
        for (std::size_t e = 0; e < problem.entities.size(); ++e) {
            acc += problem.entities[e].init_probability;
            if (u < acc) {
                pick = static_cast<EntityId>(e);
                break;
            }
        }
        cell = pick;
    }
    return level;
}

BinaryMetrics binary_metrics(const Level& initial, const Level& final) {
    if (initial.width() != final.width() || initial.height() != final.height()) {
        throw std::invalid_argument("binary metrics need equally sized levels");
    }
    BinaryMetrics m;
    m.regions = static_cast<int>(region_count(final, binary_tiles::empty));
    m.path_improvement =
        longest_shortest_path(final, binary_tiles::empty) - longest_shortest_path(initial, binary_tiles::empty);
    return m;
}

ZeldaMetrics zelda_metrics(const Level& level, bool enemies_block) {
    using namespace zelda_tiles;
    ZeldaMetrics m;
    m.players = count(level, player);
    m.keys = count(level, key);
    m.doors = count(level, door);
    m.enemies = count(level, enemy);
    if (m.players != 1 || m.keys != 1 || m.doors != 1) return m;

    const Passable passable = [enemies_block](EntityId e) {
        return e != solid && !(enemies_block && e == enemy);
    };
    const Position p = *find_first(level, player);
    const Position k = *find_first(level, key);
    const Position d = *find_first(level, door);
    const auto to_key = shortest_path_length(level, passable, p, k);
    if (!to_key) return m;
    const auto to_door = shortest_path_length(level, passable, k, d);
    if (!to_door) return m;
    m.solution_length = *to_key + *to_door;
    return m;
}

SokobanMetrics sokoban_metrics(const Level& level, int step_cap, std::size_t node_cap) {
    using namespace sokoban_tiles;
    SokobanMetrics m;
    m.players = count(level, player);
    m.crates = count(level, crate);
    const int targets = count(level, target);
    m.abs_difference = std::abs(m.crates - targets);
    if (m.players == 1 && m.crates >= 1 && m.crates == targets) {
        m.solution_length = sokoban_solve(level, step_cap, node_cap).value_or(0);
    }
    return m;
}

std::vector<double> raw_metrics(const ProblemSpec& problem, const Level& initial, const Level& final,
                                const EvalOptions& options) {
    switch (problem.kind) {
        case ProblemKind::binary: {
            const auto m = binary_metrics(initial, final);
            return {double(m.regions), double(m.path_improvement)};
        }
        case ProblemKind::zelda: {
            const auto m = zelda_metrics(final, options.enemies_block);
            return {double(m.players), double(m.keys), double(m.doors), double(m.enemies), double(m.solution_length)};
        }
        case ProblemKind::sokoban: {
            const auto m = sokoban_metrics(final, options.sokoban_step_cap, options.sokoban_node_cap);
            return {double(m.players), double(m.crates), double(m.abs_difference), double(m.solution_length)};
        }
    }
    throw std::invalid_argument("unknown problem");
}

FitnessVector scale_metrics(const ProblemSpec& problem, const std::vector<double>& raw, const EvalOptions& options) {
    if (raw.size() != problem.objectives.size()) throw std::invalid_argument("metric count mismatch");
    FitnessVector out(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) out[i] = scale_fitness(raw[i], problem.objectives[i], options.scaling);
    return out;
}

Sample generate_sample(const GeneratorScript& script, const ProblemSpec& problem, std::uint64_t seed,
                       std::uint64_t index) {
    Rng rng(sample_seed(seed, index));
    Level initial = init_map(problem, rng);
    Level final = initial;
    run_script(script, final, rng);
    return {std::move(initial), std::move(final)};
}

FitnessVector evaluate_script(const GeneratorScript& script, const ProblemSpec& problem, std::size_t samples,
                              const EvalOptions& options, std::optional<std::uint64_t> seed) {
    if (samples == 0) throw std::invalid_argument("at least one sample is required");
    const std::uint64_t base = seed.value_or(script.seed);
    FitnessVector total(problem.objectives.size(), 0.0);
    for (std::size_t i = 0; i < samples; ++i) {
        const Sample s = generate_sample(script, problem, base, i);
        const FitnessVector f = scale_metrics(problem, raw_metrics(problem, s.initial, s.final, options), options);
        for (std::size_t k = 0; k < f.size(); ++k) total[k] += f[k];
    }
    for (double& v : total) v /= static_cast<double>(samples);
    return total;
}

FitnessVector evaluate_generator(const Chromosome& chromosome, const ProblemSpec& problem, std::size_t samples,
                                 const EvalOptions& options) {
    return evaluate_script(decode(chromosome, problem.entity_count()), problem, samples, options);
}

}  // namespace mevo
