#pragma once

// Chevalley basis, exact adjoint matrices and bivectors in wedge^2 g.
//
// Basis order: f_alpha for alpha in Delta^+ in reverse root order, then
// h_1..h_n (h_i = alpha_i^vee), then e_alpha in root order. The root vector
// of a negative root -alpha is f_alpha; [e_alpha, f_alpha] = alpha^vee.

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "lieflag/linalg.hpp"
#include "lieflag/rootsys.hpp"
#include "lieflag/weyl.hpp"

namespace lieflag {

using LieElement = std::vector<Rational>;

class ChevalleyAlgebra {
 public:
  struct Term {
    int index;
    int coeff;
  };

  static std::shared_ptr<const ChevalleyAlgebra> build(RootSystemPtr rs);

  const RootSystemPtr& root_system() const { return rs_; }
  int dimension() const { return dim_; }
  int rank() const { return rank_; }
  int num_positive() const { return m_; }

  int f_index(int k) const { return m_ - 1 - k; }
  int h_index(int i) const { return m_ + i; }
  int e_index(int k) const { return m_ + rank_ + k; }
  /// Basis index of the root vector of a (positive or negative) root.
  int root_vector_index(const Root& r) const;
  bool is_root_vector(int idx) const { return idx < m_ || idx >= m_ + rank_; }
  /// Weight of a basis vector; zero for the Cartan part.
  const Root& weight(int idx) const { return weights_[idx]; }
  /// e.g. "e[1,1,0]", "f[0,1,0]", "h2".
  std::string basis_label(int idx) const;

  /// N_{a,b} with [e_a, e_b] = N_{a,b} e_{a+b}; 0 unless a+b is a root.
  int structure_constant(const Root& a, const Root& b) const;
  /// Largest p with b - p a a root (a, b roots, b != -a).
  int string_bottom(const Root& a, const Root& b) const;

  /// [b_i, b_j] as integer combination of basis vectors.
  const std::vector<Term>& basis_bracket(int i, int j) const { return table_[i * dim_ + j]; }

  LieElement zero() const { return LieElement(dim_); }
  LieElement basis_vector(int idx) const;
  LieElement bracket(const LieElement& x, const LieElement& y) const;

  /// Invariant form: <e_a, f_a> = 2/<a,a>, <h_i, h_j> = <alpha_i^vee, alpha_j^vee>.
  Rational form(int i, int j) const;
  Rational form(const LieElement& x, const LieElement& y) const;

  /// Matrix of ad_x; column j is [x, b_j].
  RationalMatrix ad(const LieElement& x) const;

 private:
  explicit ChevalleyAlgebra(RootSystemPtr rs);
  void compute_structure_constants();
  void fill_table();
  int signed_index(const Root& r) const;  // +k+1 for positive root k, -(k+1) for its negative

  RootSystemPtr rs_;
  int rank_;
  int m_;
  int dim_;
  std::vector<Root> weights_;
  std::vector<int> pos_;  // m x m: N on positive pairs
  std::vector<std::vector<Term>> table_;
};

using ChevalleyPtr = std::shared_ptr<const ChevalleyAlgebra>;

/// An invertible linear map of g with a record of how it was assembled.
class AdMatrix {
 public:
  AdMatrix() = default;
  AdMatrix(RationalMatrix m, std::vector<std::string> provenance);
  static AdMatrix identity(int dim);

  const RationalMatrix& matrix() const { return m_; }
  const std::vector<std::string>& provenance() const { return provenance_; }
  int dimension() const { return static_cast<int>(m_.size()); }

  LieElement apply(const LieElement& x) const;
  /// Throws DomainError if singular.
  AdMatrix inverse() const;

  friend AdMatrix operator*(const AdMatrix& a, const AdMatrix& b);  // a after b
  friend bool operator==(const AdMatrix& a, const AdMatrix& b) { return a.m_ == b.m_; }

 private:
  RationalMatrix m_;
  std::vector<std::string> provenance_;
};

/// exp(ad_x) as a finite sum; throws DomainError if ad_x is not nilpotent.
AdMatrix ad_exp(const ChevalleyAlgebra& alg, const LieElement& x, std::string label = "exp");
/// Ad of w_beta = exp(e_beta) exp(-f_beta) exp(e_beta) for a positive root beta.
AdMatrix weyl_rep_ad(const ChevalleyAlgebra& alg, const Root& beta);
/// Product of weyl_rep_ad over the simple reflections of the canonical word.
AdMatrix weyl_element_ad(const ChevalleyAlgebra& alg, const WeylElement& w);
/// Whether M[b_i, b_j] = [M b_i, M b_j] for all basis pairs.
bool preserves_bracket(const ChevalleyAlgebra& alg, const AdMatrix& m);

/// Element of wedge^2 g, stored on pairs i < j.
class Bivector {
 public:
  using Key = std::pair<int, int>;

  void add(int i, int j, const Rational& c);
  Rational coefficient(int i, int j) const;
  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Bivector operator+(const Bivector& o) const;
  Bivector operator-(const Bivector& o) const;
  Bivector scaled(const Rational& c) const;
  friend bool operator==(const Bivector&, const Bivector&) = default;

 private:
  std::map<Key, Rational> terms_;
};

Bivector wedge(const LieElement& x, const LieElement& y);
Bivector transport(const AdMatrix& m, const Bivector& b);
/// Projection onto span{b_i ^ b_j : i in s1, j in s2}.
Bivector wedge_component(const Bivector& b, const std::vector<int>& s1, const std::vector<int>& s2);

/// How r_J and its complement weight e_a ^ f_a: by 1, or by <a,a>/2 as in r_g.
enum class RJConvention { Unit, Normalized };
std::string to_string(RJConvention c);

Bivector r_matrix(const ChevalleyAlgebra& alg);
Bivector r_j(const ChevalleyAlgebra& alg, const ParabolicSet& j, RJConvention conv);
Bivector r_check(const ChevalleyAlgebra& alg, const ParabolicSet& j, RJConvention conv);

/// Weight of e_a ^ f_a under a convention.
Rational rj_weight(const RootSystem& rs, const Root& a, RJConvention conv);

}  // namespace lieflag
