#include "lieflag/strata.hpp"

#include <algorithm>

#include "lieflag/error.hpp"

namespace lieflag {

namespace {

bool is_max(const WeylGroup& w, WeylGroup::Index x, const std::vector<int>& in_j) {
  const auto& rs = *w.root_system();
  for (int k : in_j)
    if (w.maps_to_positive(x, rs.positive_root(k))) return false;
  return true;
}

}  // namespace

std::vector<StratumId> enumerate_strata(const WeylGroup& w, const ParabolicSet& j, std::size_t cap) {
  const auto in_j = w.root_system()->positive_roots_in(j.indices());
  std::vector<std::vector<int>> words(w.size());
  for (WeylGroup::Index x = 0; x < w.size(); ++x) words[x] = w.word(x);

  std::vector<StratumId> out;
  for (WeylGroup::Index w1 = 0; w1 < w.size(); ++w1) {
    if (!is_max(w, w1, in_j)) continue;
    for (WeylGroup::Index w2 = 0; w2 < w.size(); ++w2) {
      if (w.length(w2) < w.length(w1) || !w.bruhat_leq(w1, w2)) continue;
      if (out.size() == cap) throw CapExceeded("more than " + std::to_string(cap) + " strata");
      out.push_back({w1, w2});
    }
  }
  std::sort(out.begin(), out.end(), [&](StratumId a, StratumId b) {
    if (a.w1 != b.w1) return words[a.w1] < words[b.w1];
    return words[a.w2] < words[b.w2];
  });
  return out;
}

LeafIndex to_leaf(const WeylGroup& w, StratumId s, const ParabolicSet& j) {
  return {w.element(s.w1), w.element(s.w2), j};
}

int leaf_dimension(const WeylGroup& w, StratumId s) { return w.length(s.w2) - w.length(s.w1); }

int leaf_dimension(const LeafIndex& ix) { return ix.w2.length() - ix.w1.length(); }

bool closure_leq(const WeylGroup& w, const ParabolicSet& j, StratumId a, StratumId b) {
  for (auto z : w.parabolic_subgroup(j)) {
    if (w.bruhat_leq(b.w1, w.multiply(a.w1, z)) && w.bruhat_leq(w.multiply(a.w2, z), b.w2)) return true;
  }
  return false;
}

bool closure_leq(const LeafIndex& a, const LeafIndex& b, std::uint64_t cap) {
  if (!(a.j == b.j)) throw InvalidArgument("closure_leq: strata over different parabolics");
  if (!(a.w1.root_system()->datum() == b.w1.root_system()->datum()))
    throw InvalidArgument("closure_leq: strata over different root systems");
  WeylGroup w(a.w1.root_system(), cap);
  return closure_leq(w, a.j, {w.index_of(a.w1), w.index_of(a.w2)}, {w.index_of(b.w1), w.index_of(b.w2)});
}

ClosurePoset closure_poset(const WeylGroup& w, const ParabolicSet& j, std::size_t cap) {
  ClosurePoset p{j, enumerate_strata(w, j, cap), {}, {}};
  const int n = static_cast<int>(p.nodes.size());
  const std::size_t words = (n + 63) / 64;
  p.below.assign(n, std::vector<std::uint64_t>(words, 0));
  const auto wj = w.parabolic_subgroup(j);

  // For each a precompute a.w1 z and a.w2 z over z in W_J.
  std::vector<std::vector<std::pair<WeylGroup::Index, WeylGroup::Index>>> shifted(n);
  for (int a = 0; a < n; ++a)
    for (auto z : wj) shifted[a].emplace_back(w.multiply(p.nodes[a].w1, z), w.multiply(p.nodes[a].w2, z));

  for (int b = 0; b < n; ++b) {
    const auto [bw1, bw2] = p.nodes[b];
    for (int a = 0; a < n; ++a) {
      for (const auto& [x1, x2] : shifted[a]) {
        if (w.bruhat_leq(bw1, x1) && w.bruhat_leq(x2, bw2)) {
          p.below[b][a / 64] |= std::uint64_t{1} << (a % 64);
          break;
        }
      }
    }
  }

  for (int b = 0; b < n; ++b) {
    std::vector<std::uint64_t> strict = p.below[b];
    strict[b / 64] &= ~(std::uint64_t{1} << (b % 64));
    std::vector<std::uint64_t> covered = strict;
    for (int c = 0; c < n; ++c) {
      if (!(strict[c / 64] >> (c % 64) & 1)) continue;
      for (std::size_t k = 0; k < words; ++k) {
        std::uint64_t below_c = p.below[c][k];
        if (k == static_cast<std::size_t>(c / 64)) below_c &= ~(std::uint64_t{1} << (c % 64));
        covered[k] &= ~below_c;
      }
    }
    for (int a = 0; a < n; ++a)
      if (covered[a / 64] >> (a % 64) & 1) p.covers.emplace_back(a, b);
  }
  std::sort(p.covers.begin(), p.covers.end());
  return p;
}

std::optional<std::string> partial_order_violation(const ClosurePoset& p) {
  const int n = static_cast<int>(p.nodes.size());
  for (int a = 0; a < n; ++a)
    if (!p.leq(a, a)) return "not reflexive at " + std::to_string(a);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (p.leq(a, b) && p.leq(b, a)) return "not antisymmetric at " + std::to_string(a) + "," + std::to_string(b);
  // Transitivity: below[b] must contain below[c] for every c in below[b].
  for (int b = 0; b < n; ++b)
    for (int c = 0; c < n; ++c) {
      if (!p.leq(c, b)) continue;
      for (std::size_t k = 0; k < p.below[b].size(); ++k)
        if ((p.below[c][k] & ~p.below[b][k]) != 0)
          return "not transitive through " + std::to_string(c) + " below " + std::to_string(b);
    }
  return std::nullopt;
}

std::optional<std::pair<int, int>> dimension_monotonicity_violation(const WeylGroup& w, const ClosurePoset& p) {
  const int n = static_cast<int>(p.nodes.size());
  for (int b = 0; b < n; ++b)
    for (int a = 0; a < n; ++a)
      if (a != b && p.leq(a, b) && leaf_dimension(w, p.nodes[a]) >= leaf_dimension(w, p.nodes[b]))
        return std::make_pair(a, b);
  return std::nullopt;
}

std::vector<StratumId> cell_strata(const WeylGroup& w, WeylGroup::Index cell, const ParabolicSet& j) {
  if (!is_max(w, cell, w.root_system()->positive_roots_in(j.indices())))
    throw DomainError("cell_strata: element is not a maximal coset representative");
  std::vector<std::pair<std::vector<int>, WeylGroup::Index>> keyed;
  for (WeylGroup::Index w2 = 0; w2 < w.size(); ++w2)
    if (w.bruhat_leq(cell, w2)) keyed.emplace_back(w.word(w2), w2);
  std::sort(keyed.begin(), keyed.end());
  std::vector<StratumId> out;
  for (const auto& [word, w2] : keyed) out.push_back({cell, w2});
  return out;
}

bool cell_closure_leq(const WeylGroup& w, StratumId a, StratumId b) {
  if (a.w1 != b.w1) throw InvalidArgument("cell_closure_leq: strata in different cells");
  return w.bruhat_leq(a.w1, a.w2) && w.bruhat_leq(a.w2, b.w2);
}

}  // namespace lieflag
