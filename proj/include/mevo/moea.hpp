#pragma once

// NSGA-II over generator chromosomes. All objectives are maximised.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "mevo/genotype.hpp"
#include "mevo/problems.hpp"
#include "mevo/rng.hpp"

namespace mevo {

struct Individual {
    Chromosome chromosome;
    FitnessVector fitness;
    std::size_t rank = 0;
    double crowding = 0.0;
};

struct EvolutionConfig {
    std::size_t population_size = 500;
    std::size_t generations = 2000;
    double crossover_rate = 0.7;
    double mutation_rate = 0.3;
    std::size_t tournament_size = 2;
    std::size_t samples_per_eval = 50;
    std::uint64_t master_seed = 0;
    ProblemKind problem = ProblemKind::binary;
    /// Evaluation workers; 0 picks the hardware concurrency. Never affects results.
    unsigned threads = 0;

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;
};

struct GenerationStats {
    std::size_t generation = 0;
    std::size_t num_fronts = 0;
    std::size_t front0_size = 0;
    /// Per objective: maximum over front 0, mean over the population.
    std::vector<double> best;
    std::vector<double> mean;
};

using Fronts = std::vector<std::vector<std::size_t>>;

/// a is no worse than b everywhere and strictly better somewhere.
bool dominates(const FitnessVector& a, const FitnessVector& b);

/// Fronts of population indices, each sorted ascending; front 0 is the
/// non-dominated set.
Fronts fast_nondominated_sort(const std::vector<FitnessVector>& fitness);
/// Same, and writes Individual::rank.
Fronts fast_nondominated_sort(std::vector<Individual>& population);

/// Writes Individual::crowding for the members of `front` and returns the
/// distances in `front` order. Boundary members of every objective get
/// +infinity; objectives with zero spread add nothing.
std::vector<double> crowding_distance(std::vector<Individual>& population, const std::vector<std::size_t>& front);

/// Binary tournament with replacement: lower rank wins, then larger crowding,
/// then a fair coin. Returns the winner's index.
std::size_t tournament_select(const std::vector<Individual>& population, Rng& rng);

using Evaluator = std::function<FitnessVector(const Chromosome&)>;

/// Evaluates every chromosome, fanning out over `threads` workers. Results
/// are gathered by index, so the output does not depend on scheduling.
std::vector<FitnessVector> evaluate_all(const std::vector<Chromosome>& chromosomes, const Evaluator& evaluate,
                                        unsigned threads);

struct EvolutionResult {
    std::vector<Individual> population;
    std::vector<GenerationStats> stats;
    /// Rank-0 members of the final population.
    std::vector<Individual> archive;
    std::size_t evaluations = 0;
};

using GenerationObserver = std::function<void(const GenerationStats&)>;

EvolutionResult evolve(const EvolutionConfig& config, std::size_t objective_count, const Evaluator& evaluate,
                       const GenerationObserver& observer = {});

/// Evolves generators for `config.problem`.
EvolutionResult evolve(const EvolutionConfig& config, const EvalOptions& options = {},
                       const GenerationObserver& observer = {});

}  // namespace mevo
