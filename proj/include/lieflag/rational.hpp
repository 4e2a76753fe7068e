#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lieflag {

using Rational = mpq_class;

/// Serializes as "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace lieflag
