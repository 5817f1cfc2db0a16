#include "mevo/marahel.hpp"

#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>
#include <tuple>

namespace mevo {

std::string_view to_string(Order order) {
    switch (order) {
        case Order::horizontal: return "horizontal";
        case Order::vertical: return "vertical";
        case Order::random: return "random";
        case Order::connect: return "connect";
    }
    return "?";
}

std::string_view to_string(Comparator cmp) {
    switch (cmp) {
        case Comparator::greater: return ">";
        case Comparator::less: return "<";
        case Comparator::equal: return "==";
        case Comparator::not_equal: return "!=";
    }
    return "?";
}

void validate(const GeneratorScript& script, std::size_t entity_count) {
    auto fail = [](const std::string& what) { throw std::invalid_argument(what); };
    if (script.explorers.empty() || script.explorers.size() > max_explorers) {
        fail("script must have 1 to " + std::to_string(max_explorers) + " explorers, has " +
             std::to_string(script.explorers.size()));
    }
    auto check_entity = [&](EntityId e) {
        if (e >= entity_count) fail("entity index " + std::to_string(e) + " out of range");
    };
    auto check_neighborhood = [&](std::size_t n) {
        if (n >= neighborhood_count) fail("neighborhood index " + std::to_string(n) + " out of range");
    };
    for (const Explorer& ex : script.explorers) {
        if (ex.rules.empty() || ex.rules.size() > max_rules) fail("explorer must have 1 or 2 rules");
        for (const Rule& rule : ex.rules) {
            if (rule.executers.empty() || rule.executers.size() > max_executers) {
                fail("rule must have 1 or 2 executers");
            }
            if (const auto* check = std::get_if<NeighborhoodCheck>(&rule.condition)) {
                check_neighborhood(check->neighborhood);
                check_entity(check->entity);
                if (check->threshold < 0 || check->threshold > max_threshold) fail("threshold out of range");
            } else {
                const int t = std::get<Noise>(rule.condition).tenths;
                if (t < 0 || t > 9) fail("noise probability out of range");
            }
            for (const Executer& e : rule.executers) {
                check_neighborhood(e.neighborhood);
                check_entity(e.entity);
            }
        }
    }
}

namespace {

std::vector<Position> connect_sequence(const Level& level) {
    const auto regions = connected_regions(level, passable_entity);
    if (regions.size() <= 1) return {};

    std::vector<int> region_of(level.size(), -1);
    for (std::size_t r = 0; r < regions.size(); ++r) {
        for (Position p : regions[r]) region_of[level.index(p)] = static_cast<int>(r);
    }

    std::vector<char> merged(regions.size(), 0);
    std::vector<Position> merged_tiles;
    auto merge = [&](std::size_t r) {
        if (merged[r]) return;
        merged[r] = 1;
        merged_tiles.insert(merged_tiles.end(), regions[r].begin(), regions[r].end());
    };
    merge(0);

    std::vector<char> emitted(level.size(), 0);
    std::vector<Position> out;
    auto emit = [&](Position p) {
        const std::size_t i = level.index(p);
        if (region_of[i] >= 0) merge(static_cast<std::size_t>(region_of[i]));
        if (emitted[i]) return;
        emitted[i] = 1;
        out.push_back(p);
    };

    for (std::size_t r = 1; r < regions.size(); ++r) {
        if (merged[r]) continue;
        // Closest pair; ties resolved row-major on the merged side, then on the region side.
        std::tuple<int, std::size_t, std::size_t> best{std::numeric_limits<int>::max(), 0, 0};
        Position from{};
        Position to{};
        for (Position a : merged_tiles) {
            for (Position b : regions[r]) {
                const std::tuple<int, std::size_t, std::size_t> key{
                    std::abs(a.x - b.x) + std::abs(a.y - b.y), level.index(a), level.index(b)};
                if (key < best) {
                    best = key;
                    from = a;
                    to = b;
                }
            }
        }
        const int sx = to.x > from.x ? 1 : -1;
        const int sy = to.y > from.y ? 1 : -1;
        Position cur = from;
        emit(cur);
        while (cur.x != to.x) {
            cur.x += sx;
            emit(cur);
        }
        while (cur.y != to.y) {
            cur.y += sy;
            emit(cur);
        }
    }
    return out;
}

}  // namespace

std::vector<Position> visit_sequence(Order order, const Level& level, Rng& rng) {
    std::vector<Position> out;
    switch (order) {
        case Order::horizontal:
        case Order::random:
            out.reserve(level.size());
            for (int y = 0; y < level.height(); ++y) {
                for (int x = 0; x < level.width(); ++x) out.push_back({x, y});
            }
            if (order == Order::random) rng.shuffle(std::span<Position>(out));
            break;
        case Order::vertical:
            out.reserve(level.size());
            for (int x = 0; x < level.width(); ++x) {
                for (int y = 0; y < level.height(); ++y) out.push_back({x, y});
            }
            break;
        case Order::connect:
            out = connect_sequence(level);
            break;
    }
    return out;
}

bool evaluate_condition(const Condition& condition, const Level& level, Position pos, Rng& rng) {
    if (const auto* noise = std::get_if<Noise>(&condition)) {
        return rng.unit() < noise->probability();
    }
    const auto& check = std::get<NeighborhoodCheck>(condition);
    int count = 0;
    for_each_neighbor(check.neighborhood, pos, level, [&](Position p) {
        if (level.at(p) == check.entity) ++count;
    });
    switch (check.comparator) {
        case Comparator::greater: return count > check.threshold;
        case Comparator::less: return count < check.threshold;
        case Comparator::equal: return count == check.threshold;
        case Comparator::not_equal: return count != check.threshold;
    }
    return false;
}

void apply_executers(const std::vector<Executer>& executers, Level& level, Position pos) {
    for (const Executer& e : executers) {
        for_each_neighbor(e.neighborhood, pos, level, [&](Position p) { level.set(p, e.entity); });
    }
}

void run_explorer(const Explorer& explorer, Level& level, Rng& rng, ExplorerTrace* trace) {
    if (trace) trace->firings.assign(explorer.rules.size(), 0);
    for (const Position pos : visit_sequence(explorer.order, level, rng)) {
        if (trace) ++trace->visits;
        for (std::size_t i = 0; i < explorer.rules.size(); ++i) {
            const Rule& rule = explorer.rules[i];
            if (!evaluate_condition(rule.condition, level, pos, rng)) continue;
            apply_executers(rule.executers, level, pos);
            if (trace) ++trace->firings[i];
            break;
        }
    }
}

void run_script(const GeneratorScript& script, Level& level, Rng& rng) {
    for (const Explorer& explorer : script.explorers) run_explorer(explorer, level, rng);
}

}  // namespace mevo
