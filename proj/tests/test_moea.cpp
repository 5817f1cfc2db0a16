#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "mevo/moea.hpp"
#include "oracles.hpp"

using namespace mevo;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<Individual> population_of(const std::vector<FitnessVector>& fitness) {
    std::vector<Individual> pop;
    for (const auto& f : fitness) pop.push_back({Chromosome{}, f});
    return pop;
}

std::vector<FitnessVector> random_fitness(Rng& rng, std::size_t n, std::size_t m, std::size_t levels = 0) {
    std::vector<FitnessVector> out(n, FitnessVector(m));
    for (auto& f : out) {
        for (auto& v : f) v = levels ? static_cast<double>(rng.below(levels)) / double(levels) : rng.unit();
    }
    return out;
}

// Cheap evaluator with a real trade-off: high genes in the first half
// against low genes in the second.
FitnessVector toy_fitness(const Chromosome& c) {
    double a = 0.0;
    double b = 0.0;
    for (std::size_t i = 0; i < 51; ++i) a += c.genes[i] / 49.0;
    for (std::size_t i = 51; i < chromosome_length; ++i) b += (49 - c.genes[i]) / 49.0;
    return {a / 51.0, b / 51.0};
}

}  // namespace

TEST_CASE("dominates") {
    CHECK(dominates({0.5, 0.5}, {0.4, 0.5}));
    CHECK_FALSE(dominates({0.5, 0.4}, {0.4, 0.5}));
    CHECK_FALSE(dominates({0.4, 0.5}, {0.5, 0.4}));
    CHECK_FALSE(dominates({0.3, 0.3}, {0.3, 0.3}));
    CHECK_THROWS_AS(dominates({1.0}, {1.0, 0.0}), std::logic_error);
}

TEST_CASE("fast_nondominated_sort examples") {
    auto same = population_of(std::vector<FitnessVector>(6, {0.2, 0.7}));
    const Fronts one = fast_nondominated_sort(same);
    REQUIRE(one.size() == 1);
    CHECK(one[0].size() == 6);

    auto chain = population_of({{0.1, 0.1}, {0.4, 0.4}, {0.3, 0.3}, {0.2, 0.2}});
    const Fronts four = fast_nondominated_sort(chain);
    CHECK(four == Fronts{{1}, {2}, {3}, {0}});
    CHECK(chain[0].rank == 3);
    CHECK(chain[1].rank == 0);
}

TEST_CASE("fast_nondominated_sort matches the pairwise oracle") {
    Rng rng(7);
    for (int i = 0; i < 30; ++i) {
        // Coarse levels produce ties and duplicates.
        const auto fitness = random_fitness(rng, 200, 3, i % 2 ? 5 : 0);
        const Fronts got = fast_nondominated_sort(fitness);
        CHECK(got == oracle::pairwise_fronts(fitness));
        std::vector<std::size_t> rank(fitness.size());
        for (std::size_t r = 0; r < got.size(); ++r)
            for (std::size_t k : got[r]) rank[k] = r;
        for (std::size_t a = 0; a < fitness.size(); ++a)
            for (std::size_t b = 0; b < fitness.size(); ++b)
                if (dominates(fitness[a], fitness[b])) CHECK(rank[a] < rank[b]);
    }
}

TEST_CASE("crowding_distance") {
    SUBCASE("small fronts are all boundary") {
        auto pop = population_of({{0.1, 0.9}, {0.9, 0.1}});
        CHECK(crowding_distance(pop, {0, 1}) == std::vector<double>{kInf, kInf});
        CHECK(pop[0].crowding == kInf);
    }
    SUBCASE("collinear points on one objective") {
        auto pop = population_of({{0.0, 0.5}, {0.3, 0.5}, {1.0, 0.5}});
        const auto d = crowding_distance(pop, {0, 1, 2});
        CHECK(d[0] == kInf);
        CHECK(d[2] == kInf);
        CHECK(d[1] == doctest::Approx((1.0 - 0.0) / (1.0 - 0.0)));

        auto pop2 = population_of({{0.2, 1.0}, {0.4, 1.0}, {0.5, 1.0}, {1.0, 1.0}});
        const auto d2 = crowding_distance(pop2, {0, 1, 2, 3});
        CHECK(d2[1] == doctest::Approx((0.5 - 0.2) / 0.8));
        CHECK(d2[2] == doctest::Approx((1.0 - 0.4) / 0.8));
    }
    SUBCASE("zero spread everywhere") {
        auto pop = population_of(std::vector<FitnessVector>(5, {0.3, 0.3}));
        const auto d = crowding_distance(pop, {0, 1, 2, 3, 4});
        CHECK(std::count(d.begin(), d.end(), kInf) == 2);
        CHECK(std::count(d.begin(), d.end(), 0.0) == 3);
    }
}

TEST_CASE("tournament_select") {
    Rng rng(1);
    auto pop = population_of({{0.0}, {0.0}});
    pop[0].rank = 0;
    pop[1].rank = 3;
    for (int i = 0; i < 200; ++i) {
        const std::size_t w = tournament_select(pop, rng);
        // The rank-3 individual only wins when it meets itself.
        if (w == 1) continue;
        CHECK(w == 0);
    }
    int wins_low = 0;
    for (int i = 0; i < 4000; ++i) wins_low += tournament_select(pop, rng) == 0;
    CHECK(wins_low / 4000.0 == doctest::Approx(0.75).epsilon(0.05));

    pop[1].rank = 0;
    pop[0].crowding = kInf;
    pop[1].crowding = 0.2;
    int wins_inf = 0;
    for (int i = 0; i < 4000; ++i) wins_inf += tournament_select(pop, rng) == 0;
    CHECK(wins_inf / 4000.0 == doctest::Approx(0.75).epsilon(0.05));

    pop[0].crowding = 0.2;
    int wins_first = 0;
    for (int i = 0; i < 10000; ++i) wins_first += tournament_select(pop, rng) == 0;
    CHECK(std::abs(wins_first / 10000.0 - 0.5) < 0.02);
}

TEST_CASE("evaluate_all is scheduling independent") {
    Rng rng(2);
    std::vector<Chromosome> genomes;
    for (int i = 0; i < 37; ++i) genomes.push_back(random_chromosome(rng));
    const auto one = evaluate_all(genomes, toy_fitness, 1);
    CHECK(evaluate_all(genomes, toy_fitness, 4) == one);
    CHECK_THROWS_AS(evaluate_all(genomes, [](const Chromosome&) -> FitnessVector { throw std::runtime_error("x"); }, 3),
                    std::runtime_error);
}

TEST_CASE("evolve degenerate and invalid configs") {
    EvolutionConfig config;
    config.population_size = 10;
    config.generations = 0;
    const auto result = evolve(config, 2, toy_fitness);
    CHECK(result.stats.empty());
    CHECK(result.population.size() == 10);
    CHECK(result.evaluations == 10);
    for (const auto& ind : result.population) CHECK(ind.fitness.size() == 2);

    EvolutionConfig bad = config;
    bad.population_size = 1;
    CHECK_THROWS_AS(evolve(bad, 2, toy_fitness), std::invalid_argument);
    bad = config;
    bad.crossover_rate = 1.5;
    CHECK_THROWS_AS(evolve(bad, 2, toy_fitness), std::invalid_argument);
    bad = config;
    bad.tournament_size = 3;
    CHECK_THROWS_AS(evolve(bad, 2, toy_fitness), std::invalid_argument);
}

TEST_CASE("evolve is deterministic, elitist and partitions survivors") {
    EvolutionConfig config;
    config.population_size = 31;
    config.generations = 40;
    config.master_seed = 5;
    config.threads = 2;
    const auto a = evolve(config, 2, toy_fitness);
    config.threads = 1;
    const auto b = evolve(config, 2, toy_fitness);
    REQUIRE(a.stats.size() == 40);
    CHECK(a.evaluations == 31 * 41);
    for (std::size_t g = 0; g < a.stats.size(); ++g) {
        CHECK(a.stats[g].generation == g + 1);
        CHECK(a.stats[g].best == b.stats[g].best);
        CHECK(a.stats[g].num_fronts == b.stats[g].num_fronts);
        CHECK(a.stats[g].num_fronts >= 1);
        if (g > 0) {
            for (std::size_t m = 0; m < 2; ++m) CHECK(a.stats[g].best[m] >= a.stats[g - 1].best[m]);
        }
    }
    CHECK(a.stats.back().best[0] > a.stats.front().mean[0]);

    // Ranks of the survivors agree with a fresh sort of the final population.
    std::vector<FitnessVector> fitness;
    for (const auto& ind : a.population) fitness.push_back(ind.fitness);
    const Fronts fresh = fast_nondominated_sort(fitness);
    for (std::size_t r = 0; r < fresh.size(); ++r)
        for (std::size_t i : fresh[r]) CHECK(a.population[i].rank == r);
    CHECK(a.archive.size() == fresh[0].size());
    CHECK(a.stats.back().front0_size == fresh[0].size());
}

TEST_CASE("single objective fronts are the distinct fitness values") {
    EvolutionConfig config;
    config.population_size = 20;
    config.generations = 30;
    config.master_seed = 9;
    const auto result = evolve(config, 1, [](const Chromosome& c) { return FitnessVector{c.genes[0] / 49.0}; });
    // With one objective every distinct value is its own front.
    std::vector<double> values;
    for (const auto& ind : result.population) values.push_back(ind.fitness[0]);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    CHECK(result.stats.back().num_fronts == values.size());
}
