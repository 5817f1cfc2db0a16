#pragma once

// Batch commands behind the `mevo` executable: evolve, eval, sample, baseline.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mevo/moea.hpp"
#include "mevo/problems.hpp"

namespace mevo {

/// Bad configuration or arguments; maps to exit code 1.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Filesystem failure; maps to exit code 2.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Configuration of an evolution run. Text form is flat `key = value` lines;
/// `#` starts a comment. Keys and defaults:
///
///   problem = binary          population_size = 500    generations = 2000
///   crossover_rate = 0.7      mutation_rate = 0.3      tournament_size = 2
///   samples = 50              seed = 0                 threads = 0
///   output_dir = run          render_count = 4         render_ppm = false
///   scaling = corrected       enemies_block = false
struct RunConfig {
    EvolutionConfig evolution;
    EvalOptions eval;
    std::filesystem::path output_dir = "run";
    std::size_t render_count = 4;
    bool render_ppm = false;
};

/// Throws UsageError naming the key (or line) at fault.
RunConfig parse_run_config(std::string_view text);
/// Every key with its effective value, in the documented order.
std::string format_run_config(const RunConfig& config);

/// `generation,num_fronts,front0_size,best_<obj>...,mean_<obj>...`
std::string stats_csv(const std::vector<GenerationStats>& stats, const ProblemSpec& problem);
/// `id,<obj>...`, one row per fitness vector.
std::string fitness_csv(const std::vector<FitnessVector>& rows, const ProblemSpec& problem);
/// `<obj>=<value>` lines.
std::string format_fitness(const FitnessVector& fitness, const ProblemSpec& problem);

/// Runs the evolution and writes into config.output_dir:
///   config.txt           effective configuration
///   stats.csv            one row per generation
///   front0_fitness.csv   fitness of the final rank-0 individuals
///   front0/generator_NNN.json, .chromosome
///   front0/generator_NNN_sample_MM.txt (and .ppm when render_ppm)
/// Progress lines go to `log` when given.
std::filesystem::path cmd_evolve(const RunConfig& config, std::ostream* log = nullptr);

struct EvalRequest {
    ProblemKind problem = ProblemKind::binary;
    std::optional<std::filesystem::path> script;
    std::optional<std::filesystem::path> chromosome;
    std::size_t samples = 50;
    /// Overrides the generator's own seed for per-sample seeding.
    std::optional<std::uint64_t> seed;
    EvalOptions options;
};
FitnessVector cmd_eval(const EvalRequest& request);

struct SampleRequest {
    ProblemKind problem = ProblemKind::binary;
    std::filesystem::path script;
    std::size_t count = 8;
    std::uint64_t seed = 0;
    bool render = false;
    std::filesystem::path output_dir = "samples";
};
/// Writes sample_NNN.txt (and sample_NNN.ppm when rendering); returns the
/// text files in sample order.
std::vector<std::filesystem::path> cmd_sample(const SampleRequest& request);

struct BaselineRequest {
    ProblemKind problem = ProblemKind::binary;
    std::size_t n = 500;
    std::size_t samples = 50;
    std::uint64_t seed = 0;
    unsigned threads = 0;
    EvalOptions options;
};
/// Fitness of `n` random chromosomes drawn from one stream seeded with `seed`.
std::vector<FitnessVector> run_baseline(const BaselineRequest& request);
/// run_baseline rendered as fitness_csv.
std::string cmd_baseline(const BaselineRequest& request);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace mevo
