#include "mevo/genotype.hpp"

#include <charconv>
#include <stdexcept>

#include <fmt/format.h>

namespace mevo {

namespace {

// Reads genes cyclically from one explorer block.
class GeneCursor {
public:
    GeneCursor(const Chromosome& c, std::size_t block)
        : genes_(c.genes.data() + first_block + block * explorer_block_length) {}

    std::size_t choose(std::size_t options) {
        const std::size_t g = genes_[next_ % explorer_block_length];
        ++next_;
        return g % options;
    }

private:
    const std::uint8_t* genes_;
    std::size_t next_ = 0;
};

Executer decode_executer(GeneCursor& in, std::size_t entity_count) {
    Executer e;
    e.neighborhood = static_cast<std::uint8_t>(in.choose(neighborhood_count));
    e.entity = static_cast<EntityId>(in.choose(entity_count));
    return e;
}

Rule decode_rule(GeneCursor& in, std::size_t entity_count) {
    Rule rule;
    if (in.choose(2) == 0) {
        NeighborhoodCheck check;
        check.neighborhood = static_cast<std::uint8_t>(in.choose(neighborhood_count));
        check.entity = static_cast<EntityId>(in.choose(entity_count));
        check.comparator = static_cast<Comparator>(in.choose(4));
        check.threshold = static_cast<int>(in.choose(10));
        rule.condition = check;
    } else {
        rule.condition = Noise{static_cast<int>(in.choose(10))};
    }
    const std::size_t execs = 1 + in.choose(max_executers);
    for (std::size_t i = 0; i < execs; ++i) rule.executers.push_back(decode_executer(in, entity_count));
    return rule;
}

}  // namespace

GeneratorScript decode(const Chromosome& chromosome, std::size_t entity_count) {
    if (entity_count < 2) throw std::invalid_argument("decode needs at least two entities");
    GeneratorScript script;
    script.seed = chromosome.genes[seed_gene];
    const std::size_t explorers = 1 + chromosome.genes[count_gene] % max_explorers;
    for (std::size_t b = 0; b < explorers; ++b) {
        GeneCursor in(chromosome, b);
        Explorer ex;
        ex.order = static_cast<Order>(in.choose(4));
        const std::size_t rules = 1 + in.choose(max_rules);
        for (std::size_t r = 0; r < rules; ++r) ex.rules.push_back(decode_rule(in, entity_count));
        script.explorers.push_back(std::move(ex));
    }
    return script;
}

std::pair<std::size_t, std::size_t> unit_extent(std::size_t unit) {
    if (unit >= crossover_units) throw std::out_of_range("crossover unit out of range");
    if (unit < first_block) return {unit, 1};
    return {first_block + (unit - first_block) * explorer_block_length, explorer_block_length};
}

std::pair<Chromosome, Chromosome> swap_unit(const Chromosome& a, const Chromosome& b, std::size_t unit) {
    auto [start, len] = unit_extent(unit);
    Chromosome ca = a;
    Chromosome cb = b;
    for (std::size_t i = start; i < start + len; ++i) std::swap(ca.genes[i], cb.genes[i]);
    return {ca, cb};
}

std::pair<Chromosome, Chromosome> crossover(const Chromosome& a, const Chromosome& b, Rng& rng) {
    return swap_unit(a, b, rng.below(crossover_units));
}

Chromosome mutate(const Chromosome& c, Rng& rng) {
    Chromosome out = c;
    const std::size_t at = rng.below(chromosome_length);
    out.genes[at] = static_cast<std::uint8_t>(rng.below(gene_values));
    return out;
}

Chromosome random_chromosome(Rng& rng) {
    Chromosome c;
    for (auto& g : c.genes) g = static_cast<std::uint8_t>(rng.below(gene_values));
    return c;
}

std::string format_chromosome(const Chromosome& c) {
    return fmt::format("{}", fmt::join(c.genes, " "));
}

Chromosome parse_chromosome(std::string_view text) {
    Chromosome c;
    std::size_t count = 0;
    std::size_t pos = 0;
    while (true) {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' || text[pos] == '\r')) {
            ++pos;
        }
        if (pos >= text.size()) break;
        unsigned value = 0;
        const auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc{}) throw std::invalid_argument(fmt::format("gene {}: not an integer", count));
        if (value >= gene_values) throw std::invalid_argument(fmt::format("gene {}: value {} outside 0..49", count, value));
        if (count >= chromosome_length) throw std::invalid_argument("more than 102 genes");
        c.genes[count++] = static_cast<std::uint8_t>(value);
        pos = static_cast<std::size_t>(ptr - text.data());
        if (pos < text.size() && text[pos] != ' ' && text[pos] != '\t' && text[pos] != '\n' && text[pos] != '\r') {
            throw std::invalid_argument(fmt::format("gene {}: unexpected character", count - 1));
        }
    }
    if (count != chromosome_length) throw std::invalid_argument(fmt::format("expected 102 genes, found {}", count));
    return c;
}

}  // namespace mevo
