#pragma once

// JSON text form of generator scripts:
//
//   {"seed": 3,
//    "explorers": [
//      {"order": "connect",
//       "rules": [{"condition": "vertical_3(solid) > 1",
//                  "executers": [{"neighborhood": "vertical_3", "entity": "empty"}]}]}]}
//
// Conditions are either "<neighborhood>(<entity>) <op> <k>" with op one of
// > < == != and k in 0..9, or "noise(<p>)" with p in {0.0, 0.1, ..., 0.9}.

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mevo/marahel.hpp"

namespace mevo {

/// Malformed script text. `where()` is a JSON path (optionally followed by a
/// column inside a condition string) or a byte offset for syntax errors.
class ScriptParseError : public std::runtime_error {
public:
    ScriptParseError(std::string where, const std::string& reason)
        : std::runtime_error(where + ": " + reason), where_(std::move(where)) {}
    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

std::string format_condition(const Condition& condition, std::span<const std::string> entity_names);
Condition parse_condition(std::string_view text, std::span<const std::string> entity_names);

std::string serialize_script(const GeneratorScript& script, std::span<const std::string> entity_names);
GeneratorScript parse_script(std::string_view text, std::span<const std::string> entity_names);

}  // namespace mevo
