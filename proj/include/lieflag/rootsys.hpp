#pragma once

// Finite crystallographic root systems built from Cartan data.
//
// Conventions used throughout the library:
//  * simple-root indices are 0-based in the C++ API and 1-based in every
//    serialized form (CLI, JSON, TSV);
//  * Cartan matrix entries are a(i,j) = <alpha_i^vee, alpha_j>, Bourbaki numbering;
//  * the invariant form is normalized so that long roots have squared length 2.

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lieflag/rational.hpp"

namespace lieflag {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

using IntMatrix = std::vector<std::vector<int>>;

class CartanDatum {
 public:
  /// Validates the series/rank combination and derives the Cartan matrix.
  /// Throws InvalidArgument on A0, B1, C1, D<4, E not in {6,7,8}, F!=4, G!=2.
  static CartanDatum make(Series series, int rank);
  static CartanDatum make(char series, int rank);

  Series series() const { return series_; }
  int rank() const { return rank_; }
  const IntMatrix& cartan_matrix() const { return cartan_; }
  int cartan(int i, int j) const { return cartan_[i][j]; }

  /// e.g. "B3"
  std::string name() const;

  friend bool operator==(const CartanDatum& a, const CartanDatum& b) {
    return a.series_ == b.series_ && a.rank_ == b.rank_;
  }

 private:
  CartanDatum(Series s, int r, IntMatrix m) : series_(s), rank_(r), cartan_(std::move(m)) {}
  Series series_;
  int rank_;
  IntMatrix cartan_;
};

/// A vector in the root lattice, in simple-root coordinates.
class Root {
 public:
  Root() = default;
  explicit Root(std::vector<int> coeffs) : coeffs_(std::move(coeffs)) {}

  static Root simple(int rank, int i);
  static Root zero(int rank) { return Root(std::vector<int>(rank, 0)); }

  const std::vector<int>& coeffs() const { return coeffs_; }
  int rank() const { return static_cast<int>(coeffs_.size()); }
  int operator[](int i) const { return coeffs_[i]; }

  int height() const;
  bool is_zero() const;
  bool is_positive() const;  // nonzero, all coefficients >= 0
  bool is_negative() const;

  Root operator-() const;
  Root operator+(const Root& o) const;
  Root operator-(const Root& o) const;
  Root scaled(int k) const;

  auto operator<=>(const Root&) const = default;
  bool operator==(const Root&) const = default;

 private:
  std::vector<int> coeffs_;
};

struct RootHash {
  std::size_t operator()(const Root& r) const noexcept;
};

/// n_{alpha_j}(r): the j-th coordinate.
int height(const Root& r, int j);

/// Indices with nonzero coefficient, ascending.
std::vector<int> support(const Root& r);

std::string to_string(const Root& r);

class RootSystem {
 public:
  static std::shared_ptr<const RootSystem> build(const CartanDatum& datum);

  const CartanDatum& datum() const { return datum_; }
  int rank() const { return datum_.rank(); }

  /// Sorted by height, then by coefficient vector in decreasing lexicographic
  /// order (so the simple roots come first, as alpha_1, ..., alpha_n).
  const std::vector<Root>& positive_roots() const { return positive_; }
  int num_positive() const { return static_cast<int>(positive_.size()); }
  const Root& positive_root(int k) const { return positive_[k]; }
  const Root& simple_root(int i) const { return positive_[i]; }
  const Root& highest_root() const { return positive_.back(); }

  /// Position of a positive root in positive_roots().
  std::optional<int> positive_index(const Root& r) const;
  bool is_root(const Root& r) const;

  /// Gram matrix <alpha_i, alpha_j> on the simple roots.
  const std::vector<std::vector<Rational>>& form() const { return form_; }
  const std::vector<std::vector<Rational>>& form_inverse() const { return form_inverse_; }
  Rational inner(const Root& a, const Root& b) const;
  Rational norm2(const Root& a) const { return inner(a, a); }
  bool is_long(const Root& a) const { return norm2(a) == max_norm2_; }

  /// 2a/<a,a> in simple-root coordinates.
  std::vector<Rational> coroot(const Root& a) const;

  /// <b, a^vee> = 2<b,a>/<a,a>; integral for roots.
  int pairing(const Root& b, const Root& a) const;

  /// s_a(b) = b - <b, a^vee> a.
  Root reflect(const Root& b, const Root& a) const;

  /// Positive-root indices whose support lies in the given simple-root set.
  std::vector<int> positive_roots_in(std::span<const int> simple_subset) const;

  /// The largest root whose support is exactly a connected subset, i.e. the
  /// highest root of the subsystem generated by that subset.
  Root highest_root_of(std::span<const int> connected_subset) const;

  /// Whether two simple roots are joined in the Dynkin diagram.
  bool adjacent(int i, int j) const { return i != j && datum_.cartan(i, j) != 0; }

 private:
  explicit RootSystem(const CartanDatum& d) : datum_(d) {}
  void generate();

  CartanDatum datum_;
  std::vector<Root> positive_;
  std::unordered_map<Root, int, RootHash> index_;
  std::vector<std::vector<Rational>> form_;
  std::vector<std::vector<Rational>> form_inverse_;
  Rational max_norm2_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

/// Connected component of `subset` (as a Dynkin subgraph) containing `node`.
std::vector<int> connected_component(const RootSystem& rs, std::span<const int> subset, int node);

/// Standard epsilon-coordinate embedding of the classical series A-D.
///
/// Descending: alpha_i = e_i - e_{i+1} (Bourbaki). Ascending (type A only):
/// alpha_i = e_{i+1} - e_i, the convention where e_j - e_i is positive for i < j.
enum class EpsilonOrder { Descending, Ascending };

class ClassicalRealization {
 public:
  /// Throws InvalidArgument for exceptional series or Ascending outside type A.
  static ClassicalRealization of(const RootSystem& rs, EpsilonOrder order = EpsilonOrder::Descending);

  int dimension() const { return dim_; }
  std::vector<Rational> to_epsilon(const Root& r) const;
  /// Inverse of to_epsilon on the root lattice; nullopt if not in the lattice span.
  std::optional<Root> from_epsilon(std::span<const Rational> v) const;

 private:
  int dim_ = 0;
  std::vector<std::vector<Rational>> simple_images_;  // one epsilon vector per simple root
};

/// Parses expressions such as "e3-e1", "e1+e2", "2e4", "-e2" into an epsilon vector of
/// the given dimension (1-based indices). Throws InvalidArgument.
std::vector<Rational> parse_epsilon(std::string_view text, int dimension);

}  // namespace lieflag
