#pragma once

// Quadratic Poisson brackets on n_J^- for cominuscule J, closed-form tables of the
// classical families and E6, and matching up to coordinate bijection and rescaling.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lieflag/chevalley.hpp"
#include "lieflag/rational.hpp"

namespace lieflag {

/// Monomial y_a y_b with a <= b.
using Monomial = std::pair<int, int>;
using Quadratic = std::map<Monomial, Rational>;
using Cubic = std::map<std::array<int, 3>, Rational>;

struct QuadraticBracketTable {
  std::vector<std::string> names;
  std::vector<std::vector<int>> weights;  // grading vector per coordinate
  std::map<std::pair<int, int>, Quadratic> coeffs;  // ordered pairs with nonzero bracket

  int size() const { return static_cast<int>(names.size()); }
  /// {y_a, y_b}; zero when absent.
  Quadratic bracket(int a, int b) const;
  /// Adds c y_d y_e to {y_a, y_b} (not to {y_b, y_a}).
  void add(int a, int b, int d, int e, const Rational& c);
  std::optional<int> index_of(const std::string& name) const;
};

/// First violation of {y_a, y_b} = -{y_b, y_a} or {y_a, y_a} = 0.
std::optional<std::string> antisymmetry_violation(const QuadraticBracketTable& t);
/// First term y_d y_e of {y_a, y_b} with weight(d) + weight(e) != weight(a) + weight(b).
std::optional<std::string> homogeneity_violation(const QuadraticBracketTable& t);

/// Whether J = Gamma minus {alpha'} for a cominuscule alpha'.
bool is_hermitian(const RootSystem& rs, const ParabolicSet& j);

/// The bracket on y_beta, beta in Delta^+ minus Delta_J^+ in root order:
/// {y_b, y_g} = sum over a in Delta_J^+ of -N_{a,b} N_{-a,g} y_{a+b} y_{g-a} + N_{-a,b} N_{a,g} y_{b-a} y_{a+g}.
/// Each alpha-term carries the r-matrix weight of alpha: <a,a>/2 under Normalized, 1 under Unit.
/// The two agree up to a global factor unless Delta_J has two root lengths (type B).
/// Throws DomainError if J is not Hermitian.
QuadraticBracketTable bracket_table(const ChevalleyAlgebra& alg, const ParabolicSet& j,
                                    RJConvention conv = RJConvention::Normalized);

/// {P, y_c} for a quadratic P, by the Leibniz rule.
Cubic bracket_with(const QuadraticBracketTable& t, const Quadratic& p, int c);

struct JacobiReport {
  long triples = 0;
  std::optional<std::array<int, 3>> failure;  // first triple with nonzero cyclic sum
  Cubic residual;
  bool ok() const { return !failure.has_value(); }
};

JacobiReport jacobi_check(const QuadraticBracketTable& t);

enum class GoldenFamily {
  Rectangular,     // p x q matrices
  OddEuclidean,    // x_2..x_N, y_2..y_N, z
  Symmetric,       // y_ij, i <= j <= N
  EvenEuclidean,   // x_2..x_N, y_2..y_N
  Antisymmetric,   // y_ij, i < j <= N
  HalfSpin,        // y_I, I odd subset of {1..5}
};

std::string to_string(GoldenFamily f);
/// Accepts the names printed by to_string; throws InvalidArgument otherwise.
GoldenFamily parse_golden_family(const std::string& s);

/// Closed-form table. `size` is N (or p for Rectangular, with q = `size2`); HalfSpin takes size 5.
/// Throws InvalidArgument on unsupported sizes.
QuadraticBracketTable golden_table(GoldenFamily family, int size, int size2 = 0);

/// The half-spin table with `pair_coefficient` in front of the two pair sums (1/2 in golden_table).
QuadraticBracketTable half_spin_table(const Rational& pair_coefficient);

/// Every coefficient multiplied by c != 0.
QuadraticBracketTable scale_table(const QuadraticBracketTable& t, const Rational& c);

/// The closed-form family and size matching a Hermitian case, if there is one.
std::optional<std::pair<GoldenFamily, std::pair<int, int>>> golden_for(const RootSystem& rs, int alpha_prime);

/// Image of a table under y'_{sigma(a)} = lambda_a y_a.
QuadraticBracketTable transform(const QuadraticBracketTable& t, const std::vector<int>& sigma,
                                const std::vector<Rational>& lambda, const std::vector<std::string>& names,
                                const std::vector<std::vector<int>>& weights);

struct MatchReport {
  bool success = false;
  bool literal = false;               // sigma with every lambda = 1 already works
  std::vector<int> sigma;             // computed coordinate -> golden coordinate
  std::vector<Rational> lambda;       // y'_{sigma(a)} = lambda_a y_a
  Rational scale = 1;                 // golden = scale * transformed computed
  long bijections_tried = 0;
  std::string failure;                // first irreconcilable constraint when !success
};

/// Searches bijections preserving every rescaling invariant (bracket supports and the
/// coefficient of y_a y_b in {y_a, y_b}), then solves for lambda. A witness is verified by
/// re-expansion before it is reported.
MatchReport match_tables(const QuadraticBracketTable& computed, const QuadraticBracketTable& golden,
                         long max_bijections = 100000);

/// As match_tables, but also tries a global factor on the computed table when no rescaling works
/// (a global factor is invariant under every rescaling). A found factor is reported in `scale`.
MatchReport match_tables_up_to_scale(const QuadraticBracketTable& computed, const QuadraticBracketTable& golden,
                                     long max_bijections = 100000);

}  // namespace lieflag
