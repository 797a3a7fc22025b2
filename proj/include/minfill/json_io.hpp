#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "minfill/rational.hpp"

namespace minfill {

using Json = nlohmann::ordered_json;

/// Parses a JSON document, keeping every non-integer number as its original
/// source text (a JSON string) so that decimals can be converted exactly.
/// Throws ParseError.
Json parse_json_exact(std::string_view text);

/// Accepts a JSON integer or a string in any form parse_rational accepts.
Rational rational_from_json(const Json& value, const std::string& where);

inline Json rational_to_json(const Rational& value) { return to_string(value); }

}  // namespace minfill
