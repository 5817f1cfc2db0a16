#include "mevo/moea.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace mevo {

void EvolutionConfig::validate() const {
    auto fail = [](const char* what) { throw std::invalid_argument(what); };
    if (population_size < 2) fail("population_size must be at least 2");
    if (!(crossover_rate >= 0.0 && crossover_rate <= 1.0)) fail("crossover_rate must be in [0, 1]");
    if (!(mutation_rate >= 0.0 && mutation_rate <= 1.0)) fail("mutation_rate must be in [0, 1]");
    if (tournament_size != 2) fail("tournament_size must be 2");
    if (samples_per_eval < 1) fail("samples must be at least 1");
}

bool dominates(const FitnessVector& a, const FitnessVector& b) {
    if (a.size() != b.size()) throw std::logic_error("fitness vectors of different length");
    bool strictly = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return false;
        if (a[i] > b[i]) strictly = true;
    }
    return strictly;
}

Fronts fast_nondominated_sort(const std::vector<FitnessVector>& fitness) {
    const std::size_t n = fitness.size();
    std::vector<std::vector<std::size_t>> dominated(n);
    std::vector<std::size_t> domination_count(n, 0);
    Fronts fronts;
    std::vector<std::size_t> current;
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            if (dominates(fitness[p], fitness[q])) {
                dominated[p].push_back(q);
                ++domination_count[q];
            } else if (dominates(fitness[q], fitness[p])) {
                dominated[q].push_back(p);
                ++domination_count[p];
            }
        }
    }
    for (std::size_t p = 0; p < n; ++p) {
        if (domination_count[p] == 0) current.push_back(p);
    }
    while (!current.empty()) {
        std::vector<std::size_t> next;
        for (std::size_t p : current) {
            for (std::size_t q : dominated[p]) {
                if (--domination_count[q] == 0) next.push_back(q);
            }
        }
        std::sort(next.begin(), next.end());
        fronts.push_back(std::move(current));
        current = std::move(next);
    }
    return fronts;
}

Fronts fast_nondominated_sort(std::vector<Individual>& population) {
    std::vector<FitnessVector> fitness;
    fitness.reserve(population.size());
    for (const auto& ind : population) fitness.push_back(ind.fitness);
    Fronts fronts = fast_nondominated_sort(fitness);
    for (std::size_t r = 0; r < fronts.size(); ++r) {
        for (std::size_t i : fronts[r]) population[i].rank = r;
    }
    return fronts;
}

std::vector<double> crowding_distance(std::vector<Individual>& population, const std::vector<std::size_t>& front) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    const std::size_t n = front.size();
    std::vector<double> dist(n, 0.0);
    if (n <= 2) {
        std::fill(dist.begin(), dist.end(), inf);
    } else {
        const std::size_t objectives = population[front[0]].fitness.size();
        std::vector<std::size_t> order(n);
        for (std::size_t m = 0; m < objectives; ++m) {
            std::iota(order.begin(), order.end(), std::size_t{0});
            auto value = [&](std::size_t k) { return population[front[k]].fitness[m]; };
            std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return value(a) < value(b); });
            dist[order.front()] = inf;
            dist[order.back()] = inf;
            const double spread = value(order.back()) - value(order.front());
            if (spread <= 0.0) continue;
            for (std::size_t k = 1; k + 1 < n; ++k) {
                dist[order[k]] += (value(order[k + 1]) - value(order[k - 1])) / spread;
            }
        }
    }
    for (std::size_t k = 0; k < n; ++k) population[front[k]].crowding = dist[k];
    return dist;
}

std::size_t tournament_select(const std::vector<Individual>& population, Rng& rng) {
    const std::size_t a = rng.below(population.size());
    const std::size_t b = rng.below(population.size());
    const Individual& x = population[a];
    const Individual& y = population[b];
    if (x.rank != y.rank) return x.rank < y.rank ? a : b;
    if (x.crowding != y.crowding) return x.crowding > y.crowding ? a : b;
    return rng.coin() ? a : b;
}

std::vector<FitnessVector> evaluate_all(const std::vector<Chromosome>& chromosomes, const Evaluator& evaluate,
                                        unsigned threads) {
    std::vector<FitnessVector> out(chromosomes.size());
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, chromosomes.size()));
    if (threads <= 1) {
        for (std::size_t i = 0; i < chromosomes.size(); ++i) out[i] = evaluate(chromosomes[i]);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
        for (std::size_t i = next++; i < chromosomes.size(); i = next++) {
            try {
                out[i] = evaluate(chromosomes[i]);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return out;
}

namespace {

void assign_rank_and_crowding(std::vector<Individual>& population, Fronts* fronts_out = nullptr) {
    Fronts fronts = fast_nondominated_sort(population);
    for (const auto& front : fronts) crowding_distance(population, front);
    if (fronts_out) *fronts_out = std::move(fronts);
}

GenerationStats summarize(const std::vector<Individual>& population, std::size_t generation,
                          std::size_t objective_count) {
    GenerationStats s;
    s.generation = generation;
    s.best.assign(objective_count, -std::numeric_limits<double>::infinity());
    s.mean.assign(objective_count, 0.0);
    for (const auto& ind : population) {
        s.num_fronts = std::max(s.num_fronts, ind.rank + 1);
        for (std::size_t m = 0; m < objective_count; ++m) s.mean[m] += ind.fitness[m];
        if (ind.rank != 0) continue;
        ++s.front0_size;
        for (std::size_t m = 0; m < objective_count; ++m) s.best[m] = std::max(s.best[m], ind.fitness[m]);
    }
    for (double& v : s.mean) v /= static_cast<double>(population.size());
    return s;
}

// Keeps whole fronts while they fit, then the most crowded-apart members of
// the first front that does not.
std::vector<Individual> survive(std::vector<Individual> merged, std::size_t target) {
    Fronts fronts;
    assign_rank_and_crowding(merged, &fronts);
    std::vector<Individual> next;
    next.reserve(target);
    for (auto& front : fronts) {
        if (next.size() + front.size() <= target) {
            for (std::size_t i : front) next.push_back(merged[i]);
            if (next.size() == target) break;
            continue;
        }
        std::stable_sort(front.begin(), front.end(),
                         [&](std::size_t a, std::size_t b) { return merged[a].crowding > merged[b].crowding; });
        for (std::size_t k = 0; next.size() < target; ++k) next.push_back(merged[front[k]]);
        break;
    }
    return next;
}

}  // namespace

EvolutionResult evolve(const EvolutionConfig& config, std::size_t objective_count, const Evaluator& evaluate,
                       const GenerationObserver& observer) {
    config.validate();
    Rng rng(config.master_seed);
    EvolutionResult result;
    const std::size_t n = config.population_size;

    std::vector<Chromosome> genomes;
    genomes.reserve(n);
    for (std::size_t i = 0; i < n; ++i) genomes.push_back(random_chromosome(rng));
    auto fitness = evaluate_all(genomes, evaluate, config.threads);
    result.evaluations += n;
    auto& population = result.population;
    for (std::size_t i = 0; i < n; ++i) population.push_back({genomes[i], std::move(fitness[i])});
    assign_rank_and_crowding(population);

    for (std::size_t gen = 1; gen <= config.generations; ++gen) {
        genomes.clear();
        while (genomes.size() < n) {
            const Chromosome& a = population[tournament_select(population, rng)].chromosome;
            const Chromosome& b = population[tournament_select(population, rng)].chromosome;
            auto children = rng.unit() < config.crossover_rate ? crossover(a, b, rng) : std::pair{a, b};
            for (Chromosome* child : {&children.first, &children.second}) {
                if (rng.unit() < config.mutation_rate) *child = mutate(*child, rng);
                if (genomes.size() < n) genomes.push_back(*child);
            }
        }
        fitness = evaluate_all(genomes, evaluate, config.threads);
        result.evaluations += n;

        std::vector<Individual> merged = std::move(population);
        for (std::size_t i = 0; i < n; ++i) merged.push_back({genomes[i], std::move(fitness[i])});
        population = survive(std::move(merged), n);

        result.stats.push_back(summarize(population, gen, objective_count));
        if (observer) observer(result.stats.back());
    }

    for (const auto& ind : population) {
        if (ind.rank == 0) result.archive.push_back(ind);
    }
    return result;
}

EvolutionResult evolve(const EvolutionConfig& config, const EvalOptions& options, const GenerationObserver& observer) {
    const ProblemSpec& problem = problem_spec(config.problem);
    const std::size_t samples = config.samples_per_eval;
    const Evaluator evaluate = [&problem, samples, options](const Chromosome& c) {
        return evaluate_generator(c, problem, samples, options);
    };
    return evolve(config, problem.objectives.size(), evaluate, observer);
}

}  // namespace mevo
