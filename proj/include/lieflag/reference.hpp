#pragma once

// Brute-force reference computations. Slow and deliberately naive: they share
// no algorithm with the main modules and exist to cross-check them.

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "lieflag/chevalley.hpp"
#include "lieflag/rootsys.hpp"
#include "lieflag/weyl.hpp"

namespace lieflag::reference {

/// Positive roots as the orbit of the simple roots under simple reflections.
std::set<Root> positive_roots(const CartanDatum& d);

/// All action matrices of W by closure under products of generators.
std::set<IntMatrix> group_elements(const CartanDatum& d);

/// Product of simple-reflection matrices along a word.
IntMatrix word_action(const CartanDatum& d, const std::vector<int>& word);

/// Number of positive roots sent to negative roots.
int inversions(const RootSystem& rs, const IntMatrix& w);

/// Subword criterion: u <= v iff u is a product of a subword of a reduced word of v.
bool subword_bruhat(const CartanDatum& d, const IntMatrix& u, const std::vector<int>& v_reduced);

/// Double cosets W_I x W_J as explicit sets of action matrices.
std::vector<std::set<IntMatrix>> double_cosets(const CartanDatum& d, const ParabolicSet& i, const ParabolicSet& j);

/// Largest set of mutually orthogonal long roots in Delta^+ minus Delta_J^+.
int orthogonal_long_clique(const RootSystem& rs, const ParabolicSet& j);

/// Number of triples (v1, d, v2) with v1 in W_I minimal in its W_{I cap d(J)} coset,
/// d a double-coset minimum, v2 in W_J, and v1 d v2 = x (exhaustive scan).
int factorization_count(const WeylGroup& w, WeylGroup::Index x, const ParabolicSet& i, const ParabolicSet& j);

/// All pairs (w1, w2) with w1(Delta_J^+) in -Delta^+ and w1 <= w2 (subword criterion),
/// as pairs of group indices.
std::vector<std::pair<WeylGroup::Index, WeylGroup::Index>> strata_pairs(const WeylGroup& w,
                                                                        const ParabolicSet& j);

/// Coefficients of {y_b, y_g} computed as -m(r_J(e_b (x) e_g)) with r_J acting by adjoint matrices
/// on n_J^+. Keys are coordinate positions among Delta^+ minus Delta_J^+ in root order; zero
/// coefficients are dropped.
using PairBrackets = std::map<std::pair<int, int>, std::map<std::pair<int, int>, Rational>>;
PairBrackets bracket_by_action(const ChevalleyAlgebra& alg, const ParabolicSet& j, RJConvention conv);

}  // namespace lieflag::reference
