#include "lieflag/hermitian.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "lieflag/error.hpp"

namespace lieflag {

namespace {

bool outside_j(const Root& r, const ParabolicSet& j) {
  for (int i = 0; i < r.rank(); ++i)
    if (r[i] != 0 && !j.contains(i)) return true;
  return false;
}

LieElement root_vector(const ChevalleyAlgebra& alg, const Root& r) {
  return alg.basis_vector(alg.root_vector_index(r));
}

LieElement negated(LieElement x) {
  for (auto& v : x) v = -v;
  return x;
}

AdMatrix weyl_rep_ad_inverse(const ChevalleyAlgebra& alg, const Root& beta) {
  const AdMatrix ee = ad_exp(alg, negated(root_vector(alg, beta)));
  const AdMatrix m = ee * ad_exp(alg, root_vector(alg, -beta)) * ee;
  return AdMatrix(m.matrix(), {"w" + to_string(beta) + "^-1"});
}

AdMatrix unipotent_ad(const ChevalleyAlgebra& alg, const Root& beta, bool inverse) {
  LieElement f = root_vector(alg, -beta);
  if (inverse) f = negated(std::move(f));
  return ad_exp(alg, f, std::string(inverse ? "u^-1" : "u") + to_string(-beta));
}

BasePoint assemble(const ChevalleyAlgebra& alg, std::vector<Root> betas, int t, int s) {
  const int dim = alg.dimension();
  BasePoint bp{t, s, std::move(betas), AdMatrix::identity(dim), AdMatrix::identity(dim)};
  for (int i = 0; i < s; ++i) {
    const Root& b = bp.betas[i];
    if (i < t) {
      bp.ad = bp.ad * weyl_rep_ad(alg, b);
      bp.ad_inverse = weyl_rep_ad_inverse(alg, b) * bp.ad_inverse;
    } else {
      bp.ad = bp.ad * unipotent_ad(alg, b, false);
      bp.ad_inverse = unipotent_ad(alg, b, true) * bp.ad_inverse;
    }
  }
  return bp;
}

std::string label(const Root& r) { return to_string(r); }

}  // namespace

std::vector<int> cominuscule_roots(const RootSystem& rs) {
  std::vector<int> out;
  const Root& theta = rs.highest_root();
  for (int i = 0; i < rs.rank(); ++i)
    if (theta[i] == 1) out.push_back(i);
  return out;
}

CominusculeDatum CominusculeDatum::make(const RootSystem& rs, int alpha_prime) {
  if (alpha_prime < 0 || alpha_prime >= rs.rank()) throw InvalidArgument("simple root index out of range");
  const Root& theta = rs.highest_root();
  if (theta[alpha_prime] != 1)
    throw DomainError("alpha_" + std::to_string(alpha_prime + 1) + " is not cominuscule in " + rs.datum().name());
  CominusculeDatum cd{alpha_prime, ParabolicSet::omit(rs.rank(), alpha_prime), {}};
  for (int i : cd.j.indices()) cd.theta_restricted.push_back(theta[i]);
  return cd;
}

Cascade cascade(const RootSystem& rs, const CominusculeDatum& cd) {
  Cascade c;
  std::vector<int> gamma(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) gamma[i] = i;
  for (;;) {
    const Root beta = rs.highest_root_of(gamma);
    c.gammas.push_back(gamma);
    c.betas.push_back(beta);
    std::vector<int> orth;
    for (int i : gamma)
      if (rs.inner(rs.simple_root(i), beta) == 0) orth.push_back(i);
    if (std::find(orth.begin(), orth.end(), cd.alpha_prime) == orth.end()) break;
    gamma = connected_component(rs, orth, cd.alpha_prime);
  }
  return c;
}

std::optional<std::string> cascade_violation(const RootSystem& rs, const CominusculeDatum& cd, const Cascade& c) {
  if (c.betas.empty() || c.betas.size() != c.gammas.size()) return "malformed cascade";
  if (c.betas[0] != rs.highest_root()) return "beta_1 is not theta";
  const int k = c.k();
  for (int i = 0; i < k; ++i) {
    const Root& b = c.betas[i];
    const std::string tag = "beta_" + std::to_string(i + 1);
    if (!rs.is_long(b)) return tag + " is not long";
    if (!outside_j(b, cd.j)) return tag + " lies in Delta_J";
    if (b != rs.highest_root_of(c.gammas[i])) return tag + " is not the highest root of Gamma_" + std::to_string(i + 1);
    if (support(b) != c.gammas[i]) return "supp " + tag + " differs from Gamma_" + std::to_string(i + 1);
    for (int j = i + 1; j < k; ++j) {
      if (rs.inner(b, c.betas[j]) != 0) return tag + " not orthogonal to beta_" + std::to_string(j + 1);
      for (int x : support(c.betas[j]))
        if (!std::binary_search(c.gammas[i].begin(), c.gammas[i].end(), x))
          return "supp beta_" + std::to_string(j + 1) + " not inside Gamma_" + std::to_string(i + 1);
    }
  }
  for (const Root& r : rs.positive_roots()) {
    if (!rs.is_long(r) || !outside_j(r, cd.j)) continue;
    if (std::all_of(c.betas.begin(), c.betas.end(), [&](const Root& b) { return rs.inner(r, b) == 0; }))
      return "cascade not maximal: " + label(r) + " is orthogonal to every beta";
  }
  return std::nullopt;
}

BasePoint base_point(const ChevalleyAlgebra& alg, const Cascade& c, int t, int s) {
  if (t < 0 || t > s || s > c.k())
    throw InvalidArgument("base_point needs 0 <= t <= s <= " + std::to_string(c.k()));
  return assemble(alg, c.betas, t, s);
}

BasePoint base_point_custom(const ChevalleyAlgebra& alg, const ParabolicSet& j, const std::vector<Root>& betas,
                            int t) {
  const auto& rs = *alg.root_system();
  const int s = static_cast<int>(betas.size());
  if (t < 0 || t > s) throw InvalidArgument("base_point_custom needs 0 <= t <= " + std::to_string(s));
  for (std::size_t i = 0; i < betas.size(); ++i) {
    const Root& b = betas[i];
    if (b.rank() != rs.rank() || !b.is_positive() || !rs.is_root(b))
      throw InvalidArgument(label(b) + " is not a positive root");
    if (!rs.is_long(b)) throw InvalidArgument(label(b) + " is not long");
    if (!outside_j(b, j)) throw InvalidArgument(label(b) + " lies in Delta_J");
    for (std::size_t k = 0; k < i; ++k)
      if (rs.inner(b, betas[k]) != 0) throw InvalidArgument(label(b) + " and " + label(betas[k]) + " not orthogonal");
  }
  return assemble(alg, betas, t, s);
}

std::vector<int> nilradical_minus(const ChevalleyAlgebra& alg, const ParabolicSet& j) {
  const auto& rs = *alg.root_system();
  std::vector<int> out;
  for (int k = 0; k < rs.num_positive(); ++k)
    if (outside_j(rs.positive_root(k), j)) out.push_back(alg.f_index(k));
  std::sort(out.begin(), out.end());
  return out;
}

VanishingResult vanishing_check(const ChevalleyAlgebra& alg, const BasePoint& bp, const ParabolicSet& j,
                                RJConvention conv) {
  const Bivector r = r_j(alg, j, conv);
  const auto n = nilradical_minus(alg, j);
  VanishingResult out;
  out.t = bp.t;
  out.s = bp.s;
  out.convention = conv;
  out.direct = wedge_component(transport(bp.ad, r), n, n);
  out.inverse = wedge_component(transport(bp.ad_inverse, r), n, n);
  return out;
}

IdentityScan check_reflection_identity(const ChevalleyAlgebra& alg, const ParabolicSet& j) {
  const auto& rs = *alg.root_system();
  IdentityScan scan;
  std::vector<Root> all;
  for (const Root& r : rs.positive_roots()) {
    all.push_back(r);
    all.push_back(-r);
  }
  for (const Root& beta : rs.positive_roots()) {
    if (!rs.is_long(beta) || !outside_j(beta, j)) continue;
    const AdMatrix w = weyl_rep_ad(alg, beta);
    const LieElement f = root_vector(alg, -beta);
    for (const Root& a : all) {
      if (a == beta) continue;
      const LieElement y = root_vector(alg, a);
      const LieElement lhs = alg.bracket(f, y);
      if (std::all_of(lhs.begin(), lhs.end(), [](const Rational& v) { return lieflag::is_zero(v); })) continue;
      ++scan.checked;
      const std::string where = "beta=" + label(beta) + " alpha=" + label(a);
      if (rs.reflect(a, beta) != a - beta) scan.failures.push_back(where + ": s_beta(alpha) != alpha - beta");
      if (lhs != negated(w.apply(y))) scan.failures.push_back(where + ": [f_beta, y_alpha] != -Ad(y_alpha)");
    }
  }
  return scan;
}

IdentityScan check_pairing_cancellation(const ChevalleyAlgebra& alg, const Cascade& c, const ParabolicSet& j) {
  const auto& rs = *alg.root_system();
  IdentityScan scan;
  auto nonzero = [](const LieElement& x) {
    return std::any_of(x.begin(), x.end(), [](const Rational& v) { return !lieflag::is_zero(v); });
  };
  const auto in_j = rs.positive_roots_in(j.indices());
  for (int bi = 0; bi < c.k(); ++bi)
    for (int bj = 0; bj < c.k(); ++bj) {
      if (bi == bj) continue;
      const LieElement fi = root_vector(alg, -c.betas[bi]);
      const LieElement fj = root_vector(alg, -c.betas[bj]);
      for (int ka : in_j) {
        const Root& a = rs.positive_root(ka);
        const LieElement x = alg.bracket(fi, root_vector(alg, a));
        const LieElement y = alg.bracket(fj, root_vector(alg, -a));
        if (!nonzero(x) || !nonzero(y)) continue;
        ++scan.checked;
        const std::string where =
            "i=" + std::to_string(bi + 1) + " j=" + std::to_string(bj + 1) + " alpha=" + label(a);
        const Root g = c.betas[bi] - a - c.betas[bj];
        const auto kg = rs.positive_index(g);
        if (!kg || std::find(in_j.begin(), in_j.end(), *kg) == in_j.end()) {
          scan.failures.push_back(where + ": beta_i - alpha - beta_j not in Delta_J^+");
          continue;
        }
        const Bivector sum = wedge(x, y) + wedge(alg.bracket(fi, root_vector(alg, g)), alg.bracket(fj, root_vector(alg, -g)));
        if (!sum.is_zero()) scan.failures.push_back(where + ": wedges do not cancel");
      }
    }
  return scan;
}

IdentityScan check_first_order_expansion(const ChevalleyAlgebra& alg, const Cascade& c, const ParabolicSet& j,
                                   RJConvention conv) {
  const auto& rs = *alg.root_system();
  IdentityScan scan;
  const Bivector r = r_j(alg, j, conv);
  const auto in_j = rs.positive_roots_in(j.indices());
  for (int t = 0; t <= c.k(); ++t)
    for (int s = t; s <= c.k(); ++s) {
      AdMatrix inv = AdMatrix::identity(alg.dimension());
      Bivector rhs = r;
      for (int jj = t; jj < s; ++jj) {
        inv = unipotent_ad(alg, c.betas[jj], true) * inv;
        const LieElement f = root_vector(alg, -c.betas[jj]);
        for (int ka : in_j) {
          const Root& a = rs.positive_root(ka);
          const LieElement e = root_vector(alg, a);
          const LieElement fa = root_vector(alg, -a);
          const Bivector term = wedge(alg.bracket(f, e), fa) + wedge(e, alg.bracket(f, fa));
          rhs = rhs - term.scaled(rj_weight(rs, a, conv));
        }
      }
      ++scan.checked;
      if (transport(inv, r) != rhs)
        scan.failures.push_back("t=" + std::to_string(t) + " s=" + std::to_string(s) + ": expansion differs");
    }
  return scan;
}

IdentityScan check_commutation(const ChevalleyAlgebra& alg, const Cascade& c) {
  IdentityScan scan;
  std::vector<AdMatrix> w, u;
  for (const Root& b : c.betas) {
    w.push_back(weyl_rep_ad(alg, b));
    u.push_back(unipotent_ad(alg, b, false));
  }
  auto commute = [&](const AdMatrix& a, const AdMatrix& b, const std::string& what) {
    ++scan.checked;
    if (!(a * b == b * a)) scan.failures.push_back(what + " do not commute");
  };
  for (int i = 0; i < c.k(); ++i)
    for (int j = 0; j < c.k(); ++j) {
      if (i == j) continue;
      const std::string ij = std::to_string(i + 1) + "," + std::to_string(j + 1);
      if (i < j) {
        commute(w[i], w[j], "w" + ij);
        commute(u[i], u[j], "u" + ij);
      }
      commute(w[i], u[j], "w,u " + ij);
    }
  return scan;
}

std::vector<std::pair<int, int>> orbit_reps(const Cascade& c) {
  std::vector<std::pair<int, int>> out;
  for (int t = 0; t <= c.k(); ++t)
    for (int s = t; s <= c.k(); ++s) out.emplace_back(t, s);
  return out;
}

std::vector<WeylGroup::Index> cascade_products(const WeylGroup& w, const Cascade& c) {
  std::vector<WeylGroup::Index> out{w.identity()};
  for (const Root& b : c.betas)
    out.push_back(w.multiply(out.back(), w.index_of(WeylElement::reflection(w.root_system(), b))));
  return out;
}

bool check_minreps(const WeylGroup& w, const Cascade& c, const ParabolicSet& j) {
  const auto prods = cascade_products(w, c);
  const std::set<WeylGroup::Index> got(prods.begin(), prods.end());
  const auto reps = double_coset_min_reps(w, j, j);
  const std::set<WeylGroup::Index> want(reps.begin(), reps.end());
  return got.size() == prods.size() && got == want;
}

std::vector<WeylGroup::Index> cascade_coset_minima(const WeylGroup& w, const Cascade& c, const ParabolicSet& j) {
  auto out = cascade_products(w, c);
  for (auto& x : out) x = double_coset_min(w, x, j, j);
  return out;
}

bool check_double_cosets(const WeylGroup& w, const Cascade& c, const ParabolicSet& j) {
  const auto mins = cascade_coset_minima(w, c, j);
  const std::set<WeylGroup::Index> got(mins.begin(), mins.end());
  const auto reps = double_coset_min_reps(w, j, j);
  const std::set<WeylGroup::Index> want(reps.begin(), reps.end());
  return got.size() == mins.size() && got == want;
}

LeafOrbit leaf_orbit(const WeylGroup& w, const Cascade& c, const ParabolicSet& j, StratumId ix) {
  const auto prods = cascade_coset_minima(w, c, j);
  auto position = [&](WeylGroup::Index d, const char* what) {
    const auto it = std::find(prods.begin(), prods.end(), d);
    if (it == prods.end()) throw std::logic_error(std::string("leaf_orbit: ") + what + " is not a cascade double coset");
    return static_cast<int>(it - prods.begin());
  };
  const auto w0j = w.longest_of(j);
  const auto m = factor_min(w, w.multiply(ix.w1, w0j), j, j);
  const auto f = factor_full(w, ix.w2, j, j);
  LeafOrbit out{position(m.d, "w_t"), position(f.d, "w_s"), m.v, f.v1, f.v2};
  if (out.t > out.s)
    throw std::logic_error("leaf_orbit: t=" + std::to_string(out.t) + " > s=" + std::to_string(out.s));
  if (w.multiply(w.multiply(out.v1, prods[out.t]), w0j) != ix.w1 ||
      w.multiply(w.multiply(out.v2, prods[out.s]), out.v3) != ix.w2)
    throw std::logic_error("leaf_orbit: factors do not reassemble the stratum");
  return out;
}

}  // namespace lieflag
