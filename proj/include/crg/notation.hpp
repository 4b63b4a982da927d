#pragma once

// Text and JSON notations for positions and sums.
//
// Text grammar:  expr := term ('+' term)*
//                term := integer | '{' integer '|' integer '|' integer '}'
//                        | '(' integer ')'
// JSON:          {"int": n}
//                {"L": [pos...], "R": [pos...], "S": [[pos...]...]}
//                {"sh": [a, b, c]}            (requires a >= b >= c)
//                {"sum": [pos...]}            (only where a sum is accepted)
// The JSON format is specific to this project.

#include <string>
#include <string_view>
#include <vector>

#include "crg/position.hpp"
#include "json.hpp"

namespace crg {

/// Parses a `+`-separated sum into its terms. Throws ParseError.
std::vector<Position> parse_sum(std::string_view text);

/// Parses one JSON position. Throws ParseError.
Position position_from_json(const nlohmann::json& j);

/// Accepts {"sum": [...]} or a single position.
std::vector<Position> components_from_json(const nlohmann::json& j);

nlohmann::json to_json(Position p);
nlohmann::json to_json(const std::vector<Position>& components);

/// "3", "{2|0|-4}", or "{L, ... | S | R, ...}" with '.' for empty lists and
/// the same-round matrix written as [[..], [..]] when it is not 1x1.
std::string to_text(Position p);
std::string to_text(const std::vector<Position>& components);

}  // namespace crg
