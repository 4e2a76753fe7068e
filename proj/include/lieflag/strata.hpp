#pragma once

// Torus orbits of symplectic leaves on G/P_J, indexed by
// Omega^J = {(w1, w2) : w1 in W^J_max, w1 <= w2}, and their closure order.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lieflag/weyl.hpp"

namespace lieflag {

/// A stratum as a pair of group indices.
struct StratumId {
  WeylGroup::Index w1;
  WeylGroup::Index w2;
  friend bool operator==(const StratumId&, const StratumId&) = default;
};

struct LeafIndex {
  WeylElement w1;
  WeylElement w2;
  ParabolicSet j;
};

inline constexpr std::size_t kDefaultStrataCap = 100'000;

/// All of Omega^J, ordered lexicographically by (word(w1), word(w2)).
/// Throws CapExceeded when more than `cap` strata exist.
std::vector<StratumId> enumerate_strata(const WeylGroup& w, const ParabolicSet& j,
                                        std::size_t cap = kDefaultStrataCap);

LeafIndex to_leaf(const WeylGroup& w, StratumId s, const ParabolicSet& j);

/// l(w2) - l(w1).
int leaf_dimension(const WeylGroup& w, StratumId s);
int leaf_dimension(const LeafIndex& ix);

/// Whether a lies in the closure of b: some z in W_J has b.w1 <= a.w1 z and b.w2 >= a.w2 z.
bool closure_leq(const WeylGroup& w, const ParabolicSet& j, StratumId a, StratumId b);
/// Same on element pairs; throws InvalidArgument when the parabolics differ.
bool closure_leq(const LeafIndex& a, const LeafIndex& b, std::uint64_t cap = WeylGroup::kDefaultCap);

struct ClosurePoset {
  ParabolicSet j;
  std::vector<StratumId> nodes;
  std::vector<std::vector<std::uint64_t>> below;  // below[b] has bit a iff a <= b
  std::vector<std::pair<int, int>> covers;        // (a, b) with a covered by b

  bool leq(int a, int b) const { return below[b][a / 64] >> (a % 64) & 1; }
};

/// Throws CapExceeded when Omega^J has more than `cap` elements.
ClosurePoset closure_poset(const WeylGroup& w, const ParabolicSet& j, std::size_t cap = kDefaultStrataCap);

/// Violation of reflexivity, antisymmetry or transitivity, if any.
std::optional<std::string> partial_order_violation(const ClosurePoset& p);

/// First pair a < b (strictly) with dim a >= dim b, if any.
std::optional<std::pair<int, int>> dimension_monotonicity_violation(const WeylGroup& w, const ClosurePoset& p);

/// Strata inside the Schubert cell of w in W^J_max: (w, w2) for w2 >= w, by word(w2).
/// Throws DomainError if w is not a maximal representative.
std::vector<StratumId> cell_strata(const WeylGroup& w, WeylGroup::Index cell, const ParabolicSet& j);

/// Within one cell: a <= b iff w <= a.w2 <= b.w2. Throws InvalidArgument on different cells.
bool cell_closure_leq(const WeylGroup& w, StratumId a, StratumId b);

}  // namespace lieflag
