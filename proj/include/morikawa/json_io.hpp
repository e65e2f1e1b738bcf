#pragma once

#include <json.hpp>

#include "morikawa/polynomial.hpp"

namespace morikawa {

// Polynomial wire format, bit-exact round trip:
//   {"vars": ["t","x"],
//    "terms": [{"e": [i,j], "n": "<numerator>", "d": "<denominator>"}, ...]}
// Exponent tuples match the vars list; big integers are decimal strings.
// Terms are emitted in ascending exponent order.

nlohmann::ordered_json to_json(const UniPoly& p, const std::string& var = "x");
nlohmann::ordered_json to_json(const BivarPoly& p);
nlohmann::ordered_json to_json(const TrivarPoly& p);

UniPoly unipoly_from_json(const nlohmann::json& j);
BivarPoly bivar_from_json(const nlohmann::json& j);
TrivarPoly trivar_from_json(const nlohmann::json& j);

}  // namespace morikawa
