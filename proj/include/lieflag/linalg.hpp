#pragma once

// Small dense exact linear algebra over the rationals.

#include <optional>
#include <vector>

#include "lieflag/rational.hpp"

namespace lieflag {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Rank via fraction-free row reduction on a copy.
int matrix_rank(RationalMatrix m);

/// Solves A x = b. Returns one solution (free variables set to zero) or nullopt
/// when the system is inconsistent.
std::optional<std::vector<Rational>> solve(const RationalMatrix& a, const std::vector<Rational>& b);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& m);

RationalMatrix identity_matrix(int n);

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace lieflag
