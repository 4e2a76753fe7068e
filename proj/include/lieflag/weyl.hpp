#pragma once

// Weyl groups: elements, Bruhat order, parabolic cosets and double cosets.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "lieflag/rootsys.hpp"

namespace lieflag {

/// A subset J of the simple roots (0-based indices, sorted, unique).
class ParabolicSet {
 public:
  ParabolicSet() = default;
  /// Throws InvalidArgument if an index is outside [0, rank).
  ParabolicSet(int rank, std::vector<int> indices);

  static ParabolicSet empty(int rank) { return ParabolicSet(rank, {}); }
  static ParabolicSet full(int rank);
  /// Gamma minus {omit}: the maximal parabolic attached to one simple root.
  static ParabolicSet omit(int rank, int omitted);

  int rank() const { return rank_; }
  const std::vector<int>& indices() const { return indices_; }
  bool contains(int i) const;
  std::size_t size() const { return indices_.size(); }

  friend bool operator==(const ParabolicSet&, const ParabolicSet&) = default;

 private:
  int rank_ = 0;
  std::vector<int> indices_;
};

std::string to_string(const ParabolicSet& j);  // 1-based, e.g. "{1,3}"

class WeylElement {
 public:
  static WeylElement identity(RootSystemPtr rs);
  static WeylElement simple_reflection(RootSystemPtr rs, int i);
  /// Product s_{w[0]} s_{w[1]} ... (0-based letters; need not be reduced).
  static WeylElement from_word(RootSystemPtr rs, std::span<const int> word);
  /// The reflection s_beta for a root beta.
  static WeylElement reflection(RootSystemPtr rs, const Root& beta);
  /// Wraps an action matrix (columns are images of the simple roots).
  static WeylElement from_action(RootSystemPtr rs, IntMatrix action);

  const RootSystemPtr& root_system() const { return rs_; }
  /// action()[r][c] = coefficient of alpha_r in w(alpha_c).
  const IntMatrix& action() const { return action_; }
  /// Lexicographically least reduced word (0-based letters).
  const std::vector<int>& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }

  Root apply(const Root& r) const;

  /// Equality of actions; elements of different root systems never compare equal.
  friend bool operator==(const WeylElement& a, const WeylElement& b);

 private:
  WeylElement(RootSystemPtr rs, IntMatrix action);
  RootSystemPtr rs_;
  IntMatrix action_;
  std::vector<int> word_;
};

/// Throws InvalidArgument when the factors come from different root systems.
WeylElement multiply(const WeylElement& u, const WeylElement& v);
WeylElement operator*(const WeylElement& u, const WeylElement& v);
WeylElement invert(const WeylElement& u);
inline int length(const WeylElement& u) { return u.length(); }

/// Number of positive roots sent to negative roots; independent of the word.
int inversion_count(const WeylElement& u);

/// Bruhat order by the lifting property, without group enumeration.
bool bruhat_leq(const WeylElement& u, const WeylElement& v);

/// Longest element of W_J (identity for J empty).
WeylElement longest_element(const RootSystemPtr& rs, const ParabolicSet& j);

/// Whether u lies in the parabolic subgroup W_J.
bool in_parabolic(const WeylElement& u, const ParabolicSet& j);

/// Whether u(Delta_J^+) is contained in Delta^+ (minimal coset representative).
bool is_min_rep(const WeylElement& u, const ParabolicSet& j);
/// Whether u(Delta_J^+) is contained in -Delta^+ (maximal coset representative).
bool is_max_rep(const WeylElement& u, const ParabolicSet& j);

/// Group order from the classification.
std::uint64_t weyl_group_order(const CartanDatum& datum);

/// A fully enumerated Weyl group with multiplication tables.
///
/// Elements are addressed by a dense index; index 0 is the identity and
/// indices are in breadth-first (hence length-nondecreasing) order.
class WeylGroup {
 public:
  using Index = std::uint32_t;
  static constexpr std::uint64_t kDefaultCap = 1'000'000;

  /// Throws CapExceeded if |W| > cap.
  explicit WeylGroup(RootSystemPtr rs, std::uint64_t cap = kDefaultCap);

  const RootSystemPtr& root_system() const { return rs_; }
  int rank() const { return rank_; }
  std::size_t size() const { return length_.size(); }

  Index identity() const { return 0; }
  int length(Index w) const { return length_[w]; }
  Index left_mul(int s, Index w) const { return lmul_[w * rank_ + s]; }
  Index right_mul(Index w, int s) const { return rmul_[w * rank_ + s]; }
  Index inverse(Index w) const { return inverse_[w]; }
  Index multiply(Index u, Index v) const;
  Index longest() const { return longest_; }
  Index longest_of(const ParabolicSet& j) const;

  bool is_left_descent(int s, Index w) const { return length(left_mul(s, w)) < length(w); }
  bool is_right_descent(Index w, int s) const { return length(right_mul(w, s)) < length(w); }

  /// Lexicographically least reduced word.
  std::vector<int> word(Index w) const;
  Index from_word(std::span<const int> word) const;
  Index index_of(const WeylElement& w) const;
  WeylElement element(Index w) const;

  /// Image of a root-lattice vector.
  Root apply(Index w, const Root& r) const;
  /// Sign of w(r) for a root r: true when w(r) is positive.
  bool maps_to_positive(Index w, const Root& r) const;

  bool in_parabolic(Index w, const ParabolicSet& j) const;

  /// Bruhat order via the lifting property (Deodhar's property Z): with s a
  /// left descent of v, u <= v iff min(u, su) <= sv. Runs in O(l(v)) steps.
  bool bruhat_leq(Index u, Index v) const;

  /// All elements of W_J.
  std::vector<Index> parabolic_subgroup(const ParabolicSet& j) const;

 private:
  std::string key(const std::int8_t* action) const;

  RootSystemPtr rs_;
  int rank_;
  std::vector<std::int8_t> actions_;  // size() * rank^2, row-major
  std::vector<int> length_;
  std::vector<Index> lmul_;
  std::vector<Index> rmul_;
  std::vector<Index> inverse_;
  std::unordered_map<std::string, Index> lookup_;
  Index longest_ = 0;
};

struct CosetTables {
  ParabolicSet j;
  std::vector<WeylElement> min_reps;  // W^J_min, by (length, word)
  std::vector<WeylElement> max_reps;  // W^J_max, image of min_reps under v -> v w0^J
  WeylElement longest_j;              // w0^J
  WeylElement longest;                // w0
};

/// Indices of W^J_min by criterion w(Delta_J^+) in Delta^+, in index order.
std::vector<WeylGroup::Index> min_coset_reps(const WeylGroup& w, const ParabolicSet& j);
/// Indices of W^J_max by criterion w(Delta_J^+) in -Delta^+, in index order.
std::vector<WeylGroup::Index> max_coset_reps(const WeylGroup& w, const ParabolicSet& j);

/// Builds both representative sets and verifies that v -> v w0^J and
/// v -> w0 v are length-compatible bijections W^J_min -> W^J_max
/// (throws std::logic_error otherwise).
CosetTables coset_tables(const WeylGroup& w, const ParabolicSet& j);

/// Minimal length representatives of W_I \ W / W_J, in index order.
std::vector<WeylGroup::Index> double_coset_min_reps(const WeylGroup& w, const ParabolicSet& i,
                                                    const ParabolicSet& j);
std::vector<WeylElement> double_coset_min_reps(const RootSystemPtr& rs, const ParabolicSet& i,
                                               const ParabolicSet& j,
                                               std::uint64_t cap = WeylGroup::kDefaultCap);

/// The minimum of the double coset W_I w W_J.
WeylGroup::Index double_coset_min(const WeylGroup& w, WeylGroup::Index x, const ParabolicSet& i,
                                  const ParabolicSet& j);

/// I intersected with w(J): indices i in I with alpha_i = w(alpha_j) for some j in J.
ParabolicSet intersect_image(const WeylGroup& w, WeylGroup::Index x, const ParabolicSet& i,
                             const ParabolicSet& j);

struct MinFactorization {
  WeylGroup::Index v;  // in W_I, minimal in its W_{I cap d(J)} coset
  WeylGroup::Index d;  // in ^I W^J_min
};

struct FullFactorization {
  WeylGroup::Index v1;  // in W_I, minimal in its W_{I cap d(J)} coset
  WeylGroup::Index d;   // in ^I W^J_min
  WeylGroup::Index v2;  // in W_J
};

/// x = v d for x in W^J_min. Throws DomainError if x is not in W^J_min.
MinFactorization factor_min(const WeylGroup& w, WeylGroup::Index x, const ParabolicSet& i,
                            const ParabolicSet& j);
/// x = v1 d v2 for arbitrary x.
FullFactorization factor_full(const WeylGroup& w, WeylGroup::Index x, const ParabolicSet& i,
                              const ParabolicSet& j);

}  // namespace lieflag
