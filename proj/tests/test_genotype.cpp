#include <doctest.h>

#include <algorithm>
#include <map>

#include "mevo/genotype.hpp"
#include "oracles.hpp"

using namespace mevo;

namespace {

// Chromosome with a clear explorer block layout for hand-checked decoding.
Chromosome with_block(std::size_t block, std::initializer_list<int> genes) {
    Chromosome c;
    std::size_t i = first_block + block * explorer_block_length;
    for (int g : genes) c.genes[i++] = static_cast<std::uint8_t>(g);
    return c;
}

}  // namespace

TEST_CASE("all-zero chromosome decodes to the first option everywhere") {
    const GeneratorScript s = decode(Chromosome{}, 2);
    REQUIRE(s.explorers.size() == 1);
    CHECK(s.seed == 0);
    const Explorer& ex = s.explorers[0];
    CHECK(ex.order == Order::horizontal);
    REQUIRE(ex.rules.size() == 1);
    CHECK(ex.rules[0].condition == Condition{NeighborhoodCheck{0, 0, Comparator::greater, 0}});
    CHECK(ex.rules[0].executers == std::vector<Executer>{{0, 0}});
}

TEST_CASE("explorer count and seed genes") {
    Chromosome c;
    c.genes[count_gene] = 7;
    c.genes[seed_gene] = 42;
    const GeneratorScript s = decode(c, 2);
    CHECK(s.explorers.size() == 3);
    CHECK(s.seed == 42);
    c.genes[count_gene] = 49;
    CHECK(decode(c, 2).explorers.size() == 5);
}

TEST_CASE("hand-decoded block") {
    // order 7%4=3 connect; rules 1+1%2=2;
    // rule 1: cond 0 -> check, neigh 29%18=11 vertical_3, entity 4%3=1, op 6%4=2 ==, threshold 13%10=3,
    //         execs 1+0=1, exec neigh 5 all_3x3, entity 2;
    // rule 2: cond 1 -> noise, prob 47%10=7, execs 1+1=2, execs (17 horizontal_5, 0) and (wraps) ...
    const Chromosome c = with_block(0, {7, 1, 0, 29, 4, 6, 13, 0, 5, 2, 1, 47, 1, 17, 3, 36, 8, 0, 0, 0});
    const GeneratorScript s = decode(c, 3);
    REQUIRE(s.explorers.size() == 1);
    const Explorer& ex = s.explorers[0];
    CHECK(ex.order == Order::connect);
    REQUIRE(ex.rules.size() == 2);
    CHECK(ex.rules[0].condition == Condition{NeighborhoodCheck{11, 1, Comparator::equal, 3}});
    CHECK(ex.rules[0].executers == std::vector<Executer>{{5, 2}});
    CHECK(ex.rules[1].condition == Condition{Noise{7}});
    CHECK(ex.rules[1].executers == std::vector<Executer>{{17, 0}, {0, 2}});
}

TEST_CASE("gene consumption wraps within the block") {
    // Two rules each with a neighborhood check and two executers need 22 genes.
    // Genes 20 and 21 of the derivation re-read block genes 0 and 1.
    const Chromosome c = with_block(0, {5, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0});
    const Explorer ex = decode(c, 2).explorers[0];
    REQUIRE(ex.rules.size() == 2);
    REQUIRE(ex.rules[1].executers.size() == 2);
    // Last executer: neighborhood = gene 0 (5) mod 18, entity = gene 1 (1) mod 2.
    CHECK(ex.rules[1].executers[1] == Executer{5, 1});
}

TEST_CASE("unused genes are neutral") {
    Rng rng(12);
    for (int i = 0; i < 200; ++i) {
        Chromosome c = random_chromosome(rng);
        c.genes[count_gene] = 0;  // one explorer: blocks 1..4 unused
        const GeneratorScript s = decode(c, 5);
        Chromosome d = c;
        d.genes[first_block + explorer_block_length + rng.below(4 * explorer_block_length)] =
            static_cast<std::uint8_t>(rng.below(gene_values));
        CHECK(decode(d, 5) == s);
    }
    // All-zero block uses 10 genes; the last ten are free.
    Chromosome z;
    z.genes[first_block + 15] = 33;
    CHECK(decode(z, 2) == decode(Chromosome{}, 2));
}

TEST_CASE("decode is deterministic and total") {
    Rng rng(100);
    for (int i = 0; i < 2000; ++i) {
        const Chromosome c = random_chromosome(rng);
        const std::size_t entities = 2 + rng.below(5);
        const GeneratorScript s = decode(c, entities);
        CHECK_NOTHROW(validate(s, entities));
        CHECK(decode(c, entities) == s);
    }
    CHECK_THROWS_AS(decode(Chromosome{}, 1), std::invalid_argument);
}

TEST_CASE("crossover swaps exactly one unit") {
    Rng rng(4);
    const Chromosome a = random_chromosome(rng);
    const Chromosome b = random_chromosome(rng);

    auto [s1, s2] = swap_unit(a, b, 1);
    for (std::size_t i = 0; i < chromosome_length; ++i) {
        CHECK(s1.genes[i] == (i == 1 ? b.genes[i] : a.genes[i]));
        CHECK(s2.genes[i] == (i == 1 ? a.genes[i] : b.genes[i]));
    }

    // Block 3 (unit 4) spans genes 42..61.
    CHECK(unit_extent(4) == std::pair<std::size_t, std::size_t>{42, 20});
    auto [b1, b2] = swap_unit(a, b, 4);
    for (std::size_t i = 0; i < chromosome_length; ++i) {
        const bool inside = i >= 42 && i <= 61;
        CHECK(b1.genes[i] == (inside ? b.genes[i] : a.genes[i]));
        CHECK(b2.genes[i] == (inside ? a.genes[i] : b.genes[i]));
    }
    CHECK_THROWS_AS(unit_extent(7), std::out_of_range);
}

TEST_CASE("crossover preserves the multiset of units and picks units uniformly") {
    Rng rng(6);
    std::vector<std::size_t> picked(crossover_units, 0);
    for (int i = 0; i < 7000; ++i) {
        const Chromosome a = random_chromosome(rng);
        Chromosome b = random_chromosome(rng);
        b.genes[0] = static_cast<std::uint8_t>((a.genes[0] + 1) % gene_values);
        b.genes[1] = static_cast<std::uint8_t>((a.genes[1] + 1) % gene_values);
        const auto [c1, c2] = crossover(a, b, rng);
        for (std::size_t u = 0; u < crossover_units; ++u) {
            const auto [start, len] = unit_extent(u);
            auto slice = [&](const Chromosome& c) {
                return std::vector<std::uint8_t>(c.genes.begin() + start, c.genes.begin() + start + len);
            };
            std::vector<std::vector<std::uint8_t>> before{slice(a), slice(b)};
            std::vector<std::vector<std::uint8_t>> after{slice(c1), slice(c2)};
            std::sort(before.begin(), before.end());
            std::sort(after.begin(), after.end());
            CHECK(before == after);
            if (slice(c1) != slice(a)) ++picked[u];
        }
    }
    // Units differ between parents with overwhelming probability, so every
    // crossover is visible in exactly one unit.
    std::size_t total = 0;
    for (auto p : picked) total += p;
    CHECK(total == 7000);
    CHECK(oracle::chi_square_uniform(picked) < 22.46);  // df 6, p = 0.001
}

TEST_CASE("mutation edits at most one site, uniformly") {
    Rng rng(8);
    std::vector<std::size_t> hits(chromosome_length, 0);
    std::size_t changed = 0;
    const int trials = 20400;
    for (int i = 0; i < trials; ++i) {
        const Chromosome c = random_chromosome(rng);
        const Chromosome m = mutate(c, rng);
        std::size_t diff = 0;
        for (std::size_t k = 0; k < chromosome_length; ++k) {
            CHECK(m.genes[k] < gene_values);
            if (m.genes[k] != c.genes[k]) {
                ++diff;
                ++hits[k];
            }
        }
        CHECK(diff <= 1);
        changed += diff;
    }
    // A fresh value repeats the old one with probability 1/50.
    CHECK(changed / double(trials) == doctest::Approx(49.0 / 50.0).epsilon(0.01));
    CHECK(oracle::chi_square_uniform(hits) < 148.2);  // df 101, p = 0.001
}

TEST_CASE("random chromosomes are uniform and seed dependent") {
    Rng a(1);
    Rng b(2);
    CHECK(random_chromosome(a) != random_chromosome(b));
    Rng rng(3);
    std::vector<std::size_t> histogram(gene_values, 0);
    for (int i = 0; i < 10000; ++i) {
        for (auto g : random_chromosome(rng).genes) {
            REQUIRE(g < gene_values);
            ++histogram[g];
        }
    }
    CHECK(oracle::chi_square_uniform(histogram) < 85.35);  // df 49, p = 0.001
}

TEST_CASE("chromosome text form") {
    Rng rng(2);
    const Chromosome c = random_chromosome(rng);
    const std::string text = format_chromosome(c);
    CHECK(std::count(text.begin(), text.end(), ' ') == 101);
    CHECK(parse_chromosome(text + "\n") == c);
    CHECK_THROWS_AS(parse_chromosome("1 2 3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_chromosome(text + " 4"), std::invalid_argument);
    std::string bad = text;
    bad.replace(0, bad.find(' '), "50");
    CHECK_THROWS_AS(parse_chromosome(bad), std::invalid_argument);
    CHECK_THROWS_AS(parse_chromosome("x" + text), std::invalid_argument);
}
