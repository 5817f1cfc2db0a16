#pragma once

// Integer genotype and its grammar-guided decoding.
//
// Layout: gene 0 picks the explorer count (1 + g mod 5), gene 1 is the seed,
// genes 2..101 are five 20-gene explorer blocks. Each explorer is derived
// from the grammar below, reading genes left to right inside its own block
// and wrapping around the block when it runs out:
//
//   <explorer>  ::= <order> <rules>
//   <order>     ::= horizontal | vertical | random | connect
//   <rules>     ::= <rule> | <rule> <rule>
//   <rule>      ::= <condition> <executers>
//   <condition> ::= <neigh>(<entity>) <op> <threshold> | noise(<prob>)
//   <op>        ::= > | < | == | !=
//   <executers> ::= <exec> | <exec> <exec>
//   <exec>      ::= <neigh>(<entity>)
//
// A choice between k options takes gene mod k. Leaves: neighborhood = gene
// mod 18, entity = gene mod entity_count, threshold = gene mod 10,
// probability = (gene mod 10) / 10. Option order is part of the mapping.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "mevo/marahel.hpp"
#include "mevo/rng.hpp"

namespace mevo {

inline constexpr std::size_t chromosome_length = 102;
inline constexpr std::size_t gene_values = 50;
inline constexpr std::size_t explorer_block_length = 20;
inline constexpr std::size_t first_block = 2;
inline constexpr std::size_t count_gene = 0;
inline constexpr std::size_t seed_gene = 1;

struct Chromosome {
    std::array<std::uint8_t, chromosome_length> genes{};
    friend bool operator==(const Chromosome&, const Chromosome&) = default;
};

/// Total: every chromosome decodes. `entity_count` must be >= 2.
GeneratorScript decode(const Chromosome& chromosome, std::size_t entity_count);

/// Units exchanged by crossover: 0 = count gene, 1 = seed gene, 2..6 = blocks.
inline constexpr std::size_t crossover_units = 7;

/// First gene index and length of a crossover unit.
std::pair<std::size_t, std::size_t> unit_extent(std::size_t unit);

std::pair<Chromosome, Chromosome> swap_unit(const Chromosome& a, const Chromosome& b, std::size_t unit);
std::pair<Chromosome, Chromosome> crossover(const Chromosome& a, const Chromosome& b, Rng& rng);

/// Reassigns one uniformly chosen gene to a fresh uniform value.
Chromosome mutate(const Chromosome& c, Rng& rng);

Chromosome random_chromosome(Rng& rng);

/// One line of 102 space-separated integers.
std::string format_chromosome(const Chromosome& c);
/// Throws std::invalid_argument on wrong length or out-of-range genes.
Chromosome parse_chromosome(std::string_view text);

}  // namespace mevo
