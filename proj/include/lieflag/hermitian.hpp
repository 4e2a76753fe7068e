#pragma once

// Cominuscule parabolics, the cascade of orthogonal long roots, base points of
// Levi orbits on G/P_J, and the vanishing of pi_J at those base points.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lieflag/chevalley.hpp"
#include "lieflag/strata.hpp"
#include "lieflag/weyl.hpp"

namespace lieflag {

/// Simple roots alpha_m with n_{alpha_m}(theta) = 1, ascending.
std::vector<int> cominuscule_roots(const RootSystem& rs);

struct CominusculeDatum {
  int alpha_prime;
  ParabolicSet j;                     // Gamma minus {alpha'}
  std::vector<int> theta_restricted;  // coefficients of theta on J, in J order

  /// Throws DomainError unless n_{alpha'}(theta) = 1.
  static CominusculeDatum make(const RootSystem& rs, int alpha_prime);
};

struct Cascade {
  std::vector<Root> betas;               // beta_1 = theta, ...
  std::vector<std::vector<int>> gammas;  // Gamma_1 = Gamma, ...
  int k() const { return static_cast<int>(betas.size()); }
};

Cascade cascade(const RootSystem& rs, const CominusculeDatum& cd);

/// First failed cascade invariant (orthogonality, support chain, highest roots,
/// length, maximality), if any.
std::optional<std::string> cascade_violation(const RootSystem& rs, const CominusculeDatum& cd, const Cascade& c);

/// x_st = prod_{i<=t} w_{beta_i} prod_{t<j<=s} exp(f_{beta_j}), with both Ad and Ad^{-1}.
struct BasePoint {
  int t = 0;
  int s = 0;
  std::vector<Root> betas;
  AdMatrix ad;
  AdMatrix ad_inverse;
};

/// Requires 0 <= t <= s <= k; throws InvalidArgument otherwise.
BasePoint base_point(const ChevalleyAlgebra& alg, const Cascade& c, int t, int s);
/// Same product over an arbitrary list (s = list size). The roots must be long, pairwise
/// orthogonal and in Delta^+ minus Delta_J^+; throws InvalidArgument otherwise.
BasePoint base_point_custom(const ChevalleyAlgebra& alg, const ParabolicSet& j, const std::vector<Root>& betas,
                            int t);

/// Basis indices of n_J^-: f_alpha for alpha in Delta^+ minus Delta_J^+.
std::vector<int> nilradical_minus(const ChevalleyAlgebra& alg, const ParabolicSet& j);

struct VanishingResult {
  int t = 0;
  int s = 0;
  RJConvention convention = RJConvention::Unit;
  Bivector direct;   // wedge^2 n_J^- component of Ad_x(r_J)
  Bivector inverse;  // wedge^2 n_J^- component of Ad_x^{-1}(r_J)
  bool direct_vanishes() const { return direct.is_zero(); }
  bool inverse_vanishes() const { return inverse.is_zero(); }
};

VanishingResult vanishing_check(const ChevalleyAlgebra& alg, const BasePoint& bp, const ParabolicSet& j,
                                RJConvention conv);

/// Outcome of a scan over many instances of an identity.
struct IdentityScan {
  int checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// For long beta outside Delta_J^+ and root vectors y_alpha (alpha != beta) with
/// [f_beta, y_alpha] != 0: s_beta(alpha) = alpha - beta and [f_beta, y_alpha] = -Ad_{w_beta}(y_alpha).
IdentityScan check_reflection_identity(const ChevalleyAlgebra& alg, const ParabolicSet& j);
/// For alpha in Delta_J^+ and i != j with [f_bi, e_a] != 0 != [f_bj, f_a]:
/// gamma = b_i - a - b_j lies in Delta_J^+ and the two wedges cancel.
IdentityScan check_pairing_cancellation(const ChevalleyAlgebra& alg, const Cascade& c, const ParabolicSet& j);
/// Ad^{-1} of prod_{t<j<=s} exp(f_bj) applied to r_J equals the first-order expansion, for all t <= s.
IdentityScan check_first_order_expansion(const ChevalleyAlgebra& alg, const Cascade& c, const ParabolicSet& j,
                                   RJConvention conv);

/// Ad of w_{beta_i} and exp(f_{beta_j}) commute pairwise for i != j, and each family among itself.
IdentityScan check_commutation(const ChevalleyAlgebra& alg, const Cascade& c);

/// All (t, s) with 0 <= t <= s <= k.
std::vector<std::pair<int, int>> orbit_reps(const Cascade& c);

/// w_s = s_{beta_1} ... s_{beta_s} for s = 0..k.
std::vector<WeylGroup::Index> cascade_products(const WeylGroup& w, const Cascade& c);

/// Whether {w_s} equals the set of (J, J) double-coset minima, element by element.
bool check_minreps(const WeylGroup& w, const Cascade& c, const ParabolicSet& j);

/// Minimum of the double coset W_J w_s W_J for s = 0..k.
std::vector<WeylGroup::Index> cascade_coset_minima(const WeylGroup& w, const Cascade& c, const ParabolicSet& j);

/// Whether the w_s lie in pairwise distinct (J, J) double cosets covering W.
bool check_double_cosets(const WeylGroup& w, const Cascade& c, const ParabolicSet& j);

struct LeafOrbit {
  int t;
  int s;
  WeylGroup::Index v1;  // w1 = v1 d_t w0^J, d_t the minimum of W_J w_t W_J
  WeylGroup::Index v2;  // w2 = v2 d_s v3
  WeylGroup::Index v3;
};

/// The Levi orbit L_J x_st containing a stratum. Throws std::logic_error if the
/// factorization does not land on cascade double cosets with t <= s.
LeafOrbit leaf_orbit(const WeylGroup& w, const Cascade& c, const ParabolicSet& j, StratumId ix);

}  // namespace lieflag
