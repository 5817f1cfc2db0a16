#include "mevo/script_io.hpp"

#include <charconv>
#include <cmath>

#include <fmt/format.h>
#include <json.hpp>

namespace mevo {

using nlohmann::json;

namespace {

std::size_t lookup_entity(std::string_view name, std::span<const std::string> entity_names) {
    for (std::size_t i = 0; i < entity_names.size(); ++i) {
        if (entity_names[i] == name) return i;
    }
    return entity_names.size();
}

// Cursor over a condition string; errors carry the 1-based column.
struct ConditionScanner {
    std::string_view text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& reason) const {
        throw ScriptParseError(fmt::format("column {}", pos + 1), reason);
    }
    void skip_spaces() {
        while (pos < text.size() && text[pos] == ' ') ++pos;
    }
    std::string_view take_until(char stop) {
        const std::size_t end = text.find(stop, pos);
        if (end == std::string_view::npos) fail(fmt::format("expected '{}'", stop));
        std::string_view out = text.substr(pos, end - pos);
        pos = end + 1;
        return out;
    }
    bool at_end() const { return pos >= text.size(); }
};

}  // namespace

std::string format_condition(const Condition& condition, std::span<const std::string> entity_names) {
    if (const auto* noise = std::get_if<Noise>(&condition)) {
        return fmt::format("noise(0.{})", noise->tenths);
    }
    const auto& check = std::get<NeighborhoodCheck>(condition);
    return fmt::format("{}({}) {} {}", neighborhood_catalog()[check.neighborhood].name,
                       entity_names[check.entity], to_string(check.comparator), check.threshold);
}

Condition parse_condition(std::string_view text, std::span<const std::string> entity_names) {
    ConditionScanner in{text};
    in.skip_spaces();
    const std::size_t name_start = in.pos;
    const std::string_view head = in.take_until('(');
    if (head == "noise") {
        const std::size_t value_start = in.pos;
        const std::string_view value = in.take_until(')');
        in.skip_spaces();
        if (!in.at_end()) in.fail("trailing characters after noise(...)");
        double p = 0.0;
        const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), p);
        const double tenths = std::round(p * 10.0);
        if (ec != std::errc{} || ptr != value.data() + value.size() || tenths < 0.0 || tenths > 9.0 ||
            std::abs(p * 10.0 - tenths) > 1e-9) {
            in.pos = value_start;
            in.fail(fmt::format("noise probability '{}' must be one of 0.0, 0.1, ..., 0.9", value));
        }
        return Noise{static_cast<int>(tenths)};
    }

    NeighborhoodCheck check;
    const auto neighborhood = find_neighborhood(head);
    if (!neighborhood) {
        in.pos = name_start;
        in.fail(fmt::format("unknown neighborhood '{}'", head));
    }
    check.neighborhood = static_cast<std::uint8_t>(*neighborhood);

    const std::size_t entity_start = in.pos;
    const std::string_view entity = in.take_until(')');
    const std::size_t e = lookup_entity(entity, entity_names);
    if (e == entity_names.size()) {
        in.pos = entity_start;
        in.fail(fmt::format("unknown entity '{}'", entity));
    }
    check.entity = static_cast<EntityId>(e);

    in.skip_spaces();
    const std::size_t op_start = in.pos;
    while (in.pos < text.size() && text[in.pos] != ' ') ++in.pos;
    const std::string_view op = text.substr(op_start, in.pos - op_start);
    if (op == ">") check.comparator = Comparator::greater;
    else if (op == "<") check.comparator = Comparator::less;
    else if (op == "==") check.comparator = Comparator::equal;
    else if (op == "!=") check.comparator = Comparator::not_equal;
    else {
        in.pos = op_start;
        in.fail(fmt::format("unknown comparator '{}'", op));
    }

    in.skip_spaces();
    const std::size_t num_start = in.pos;
    const auto [ptr, ec] = std::from_chars(text.data() + in.pos, text.data() + text.size(), check.threshold);
    in.pos = static_cast<std::size_t>(ptr - text.data());
    if (ec != std::errc{} || check.threshold < 0 || check.threshold > max_threshold) {
        in.pos = num_start;
        in.fail("threshold must be an integer in 0..9");
    }
    in.skip_spaces();
    if (!in.at_end()) in.fail("trailing characters after threshold");
    return check;
}

std::string serialize_script(const GeneratorScript& script, std::span<const std::string> entity_names) {
    json explorers = json::array();
    for (const Explorer& ex : script.explorers) {
        json rules = json::array();
        for (const Rule& rule : ex.rules) {
            json execs = json::array();
            for (const Executer& e : rule.executers) {
                execs.push_back({{"neighborhood", std::string(neighborhood_catalog()[e.neighborhood].name)},
                                 {"entity", entity_names[e.entity]}});
            }
            rules.push_back({{"condition", format_condition(rule.condition, entity_names)}, {"executers", execs}});
        }
        explorers.push_back({{"order", std::string(to_string(ex.order))}, {"rules", rules}});
    }
    const json doc = {{"seed", script.seed}, {"explorers", explorers}};
    return doc.dump(2) + "\n";
}

namespace {

struct ScriptReader {
    std::span<const std::string> entity_names;

    [[noreturn]] static void fail(const std::string& where, const std::string& reason) {
        throw ScriptParseError(where, reason);
    }

    static const json& field(const json& obj, const char* key, const std::string& where) {
        if (!obj.is_object()) fail(where, "expected an object");
        const auto it = obj.find(key);
        if (it == obj.end()) fail(where, fmt::format("missing field '{}'", key));
        return *it;
    }

    static void only_fields(const json& obj, std::initializer_list<std::string_view> keys, const std::string& where) {
        for (const auto& [key, value] : obj.items()) {
            bool known = false;
            for (auto k : keys) known = known || key == k;
            if (!known) fail(where, fmt::format("unknown field '{}'", key));
        }
    }

    static const std::string& text(const json& value, const std::string& where) {
        if (!value.is_string()) fail(where, "expected a string");
        return value.get_ref<const std::string&>();
    }

    static const json& list(const json& value, std::size_t max, const std::string& where) {
        if (!value.is_array()) fail(where, "expected an array");
        if (value.empty() || value.size() > max) {
            fail(where, fmt::format("expected 1 to {} entries, found {}", max, value.size()));
        }
        return value;
    }

    Executer executer(const json& obj, const std::string& where) const {
        only_fields(obj, {"neighborhood", "entity"}, where);
        Executer e;
        const std::string& n = text(field(obj, "neighborhood", where), where + ".neighborhood");
        const auto idx = find_neighborhood(n);
        if (!idx) fail(where + ".neighborhood", fmt::format("unknown neighborhood '{}'", n));
        e.neighborhood = static_cast<std::uint8_t>(*idx);
        const std::string& name = text(field(obj, "entity", where), where + ".entity");
        const std::size_t ent = lookup_entity(name, entity_names);
        if (ent == entity_names.size()) fail(where + ".entity", fmt::format("unknown entity '{}'", name));
        e.entity = static_cast<EntityId>(ent);
        return e;
    }

    Rule rule(const json& obj, const std::string& where) const {
        only_fields(obj, {"condition", "executers"}, where);
        Rule r;
        const std::string cond_where = where + ".condition";
        try {
            r.condition = parse_condition(text(field(obj, "condition", where), cond_where), entity_names);
        } catch (const ScriptParseError& e) {
            if (e.where().rfind("column", 0) != 0) throw;
            fail(cond_where + " " + e.where(), std::string(e.what()).substr(e.where().size() + 2));
        }
        const json& execs = list(field(obj, "executers", where), max_executers, where + ".executers");
        for (std::size_t i = 0; i < execs.size(); ++i) {
            r.executers.push_back(executer(execs[i], fmt::format("{}.executers[{}]", where, i)));
        }
        return r;
    }

    Explorer explorer(const json& obj, const std::string& where) const {
        only_fields(obj, {"order", "rules"}, where);
        Explorer ex;
        const std::string& order = text(field(obj, "order", where), where + ".order");
        if (order == "horizontal") ex.order = Order::horizontal;
        else if (order == "vertical") ex.order = Order::vertical;
        else if (order == "random") ex.order = Order::random;
        else if (order == "connect") ex.order = Order::connect;
        else fail(where + ".order", fmt::format("unknown order '{}'", order));
        const json& rules = list(field(obj, "rules", where), max_rules, where + ".rules");
        for (std::size_t i = 0; i < rules.size(); ++i) {
            ex.rules.push_back(rule(rules[i], fmt::format("{}.rules[{}]", where, i)));
        }
        return ex;
    }
};

}  // namespace

GeneratorScript parse_script(std::string_view text, std::span<const std::string> entity_names) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ScriptParseError(fmt::format("byte {}", e.byte), "invalid JSON");
    }
    const ScriptReader reader{entity_names};
    ScriptReader::only_fields(doc, {"seed", "explorers"}, "$");
    GeneratorScript script;
    const json& seed = ScriptReader::field(doc, "seed", "$");
    if (!seed.is_number_unsigned() || seed.get<std::uint64_t>() > 0xffffffffULL) {
        ScriptReader::fail("$.seed", "expected a non-negative 32-bit integer");
    }
    script.seed = seed.get<std::uint32_t>();
    const json& explorers = ScriptReader::list(ScriptReader::field(doc, "explorers", "$"), max_explorers, "$.explorers");
    for (std::size_t i = 0; i < explorers.size(); ++i) {
        script.explorers.push_back(reader.explorer(explorers[i], fmt::format("$.explorers[{}]", i)));
    }
    return script;
}

}  // namespace mevo
