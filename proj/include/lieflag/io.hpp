#pragma once

// JSON forms of rationals, roots and bracket tables. Rationals are "p/q" strings
// (integers print without a denominator); coordinates are referred to by name.

#include <json.hpp>
#include <string>

#include "lieflag/brackets.hpp"
#include "lieflag/rational.hpp"

namespace lieflag::io {

using Json = nlohmann::ordered_json;

std::string rational_string(const Rational& r);
/// Accepts "p", "p/q" and "-p/q"; throws InvalidArgument otherwise or when q = 0.
Rational parse_rational(const std::string& s);

/// {"names", "weights", "brackets": [{"left", "right", "terms": [[name, name, "p/q"], ...]}]}
/// with one entry per ordered pair carrying a nonzero bracket.
Json table_to_json(const QuadraticBracketTable& t);
/// Inverse of table_to_json; throws InvalidArgument on unknown names or malformed entries.
QuadraticBracketTable table_from_json(const Json& j);

Json quadratic_to_json(const QuadraticBracketTable& t, const Quadratic& q);

}  // namespace lieflag::io
