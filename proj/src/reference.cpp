#include "lieflag/reference.hpp"

#include <algorithm>
#include <functional>

namespace lieflag::reference {

namespace {

std::vector<int> reflect(const CartanDatum& d, const std::vector<int>& x, int i) {
  std::vector<int> out = x;
  int p = 0;
  for (int j = 0; j < d.rank(); ++j) p += d.cartan(i, j) * x[j];
  out[i] -= p;
  return out;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  IntMatrix c(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

IntMatrix generator(const CartanDatum& d, int i) {
  const int n = d.rank();
  IntMatrix m(n, std::vector<int>(n, 0));
  for (int c = 0; c < n; ++c) {
    std::vector<int> e(n, 0);
    e[c] = 1;
    const auto img = reflect(d, e, i);
    for (int r = 0; r < n; ++r) m[r][c] = img[r];
  }
  return m;
}

std::set<IntMatrix> generated(const CartanDatum& d, const std::vector<int>& gens) {
  const int n = d.rank();
  IntMatrix id(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) id[i][i] = 1;
  std::set<IntMatrix> seen{id};
  std::vector<IntMatrix> todo{id};
  while (!todo.empty()) {
    IntMatrix x = todo.back();
    todo.pop_back();
    for (int g : gens) {
      IntMatrix y = mat_mul(x, generator(d, g));
      if (seen.insert(y).second) todo.push_back(std::move(y));
    }
  }
  return seen;
}

bool positive_vec(const std::vector<int>& v) {
  bool nonzero = false;
  for (int x : v) {
    if (x < 0) return false;
    if (x > 0) nonzero = true;
  }
  return nonzero;
}

std::vector<int> column_image(const IntMatrix& m, const std::vector<int>& v) {
  std::vector<int> out(m.size(), 0);
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < v.size(); ++c) out[r] += m[r][c] * v[c];
  return out;
}

}  // namespace

std::set<Root> positive_roots(const CartanDatum& d) {
  const int n = d.rank();
  std::set<std::vector<int>> all;
  std::vector<std::vector<int>> todo;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    all.insert(e);
    todo.push_back(e);
  }
  while (!todo.empty()) {
    auto x = todo.back();
    todo.pop_back();
    for (int i = 0; i < n; ++i) {
      auto y = reflect(d, x, i);
      if (all.insert(y).second) todo.push_back(y);
    }
  }
  std::set<Root> out;
  for (const auto& v : all)
    if (positive_vec(v)) out.insert(Root(v));
  return out;
}

std::set<IntMatrix> group_elements(const CartanDatum& d) {
  std::vector<int> gens(d.rank());
  for (int i = 0; i < d.rank(); ++i) gens[i] = i;
  return generated(d, gens);
}

IntMatrix word_action(const CartanDatum& d, const std::vector<int>& word) {
  const int n = d.rank();
  IntMatrix m(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  for (int s : word) m = mat_mul(m, generator(d, s));
  return m;
}

int inversions(const RootSystem& rs, const IntMatrix& w) {
  int count = 0;
  for (const Root& r : rs.positive_roots())
    if (!positive_vec(column_image(w, r.coeffs()))) ++count;
  return count;
}

bool subword_bruhat(const CartanDatum& d, const IntMatrix& u, const std::vector<int>& v_reduced) {
  const std::size_t l = v_reduced.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << l); ++mask) {
    std::vector<int> sub;
    for (std::size_t k = 0; k < l; ++k)
      if (mask >> k & 1) sub.push_back(v_reduced[k]);
    if (word_action(d, sub) == u) return true;
  }
  return false;
}

std::vector<std::set<IntMatrix>> double_cosets(const CartanDatum& d, const ParabolicSet& i, const ParabolicSet& j) {
  const auto all = group_elements(d);
  const auto wi = generated(d, i.indices());
  const auto wj = generated(d, j.indices());
  std::set<IntMatrix> left = all;
  std::vector<std::set<IntMatrix>> out;
  while (!left.empty()) {
    const IntMatrix x = *left.begin();
    std::set<IntMatrix> cls;
    for (const auto& a : wi)
      for (const auto& b : wj) cls.insert(mat_mul(mat_mul(a, x), b));
    for (const auto& y : cls) left.erase(y);
    out.push_back(std::move(cls));
  }
  return out;
}

int orthogonal_long_clique(const RootSystem& rs, const ParabolicSet& j) {
  std::vector<Root> cand;
  for (const Root& r : rs.positive_roots()) {
    bool in_j = true;
    for (int s : support(r))
      if (!j.contains(s)) in_j = false;
    if (!in_j && rs.is_long(r)) cand.push_back(r);
  }
  int best = 0;
  std::vector<int> chosen;
  std::function<void(std::size_t)> grow = [&](std::size_t from) {
    best = std::max(best, static_cast<int>(chosen.size()));
    for (std::size_t k = from; k < cand.size(); ++k) {
      bool ok = true;
      for (int c : chosen)
        if (rs.inner(cand[c], cand[k]) != 0) ok = false;
      if (!ok) continue;
      chosen.push_back(static_cast<int>(k));
      grow(k + 1);
      chosen.pop_back();
    }
  };
  grow(0);
  return best;
}

int factorization_count(const WeylGroup& w, WeylGroup::Index x, const ParabolicSet& i, const ParabolicSet& j) {
  const auto& rs = *w.root_system();
  const int n = rs.rank();
  const auto wi = w.parabolic_subgroup(i);
  const auto wj = w.parabolic_subgroup(j);
  std::vector<WeylGroup::Index> minima;
  for (const auto& cls : double_cosets(rs.datum(), i, j)) {
    WeylGroup::Index best = 0;
    int best_len = -1;
    for (const auto& m : cls) {
      const int len = inversions(rs, m);
      if (best_len < 0 || len < best_len) {
        best_len = len;
        best = w.index_of(WeylElement::from_action(w.root_system(), m));
      }
    }
    minima.push_back(best);
  }
  int count = 0;
  for (auto d : minima) {
    std::vector<int> k;
    for (int jj : j.indices()) {
      const Root img = w.apply(d, Root::simple(n, jj));
      for (int ii : i.indices())
        if (img == Root::simple(n, ii)) k.push_back(ii);
    }
    for (auto v1 : wi) {
      bool minimal = true;
      for (int kk : k)
        if (!w.maps_to_positive(v1, Root::simple(n, kk))) minimal = false;
      if (!minimal) continue;
      for (auto v2 : wj)
        if (w.multiply(w.multiply(v1, d), v2) == x) ++count;
    }
  }
  return count;
}

std::vector<std::pair<WeylGroup::Index, WeylGroup::Index>> strata_pairs(const WeylGroup& w, const ParabolicSet& j) {
  const auto& rs = *w.root_system();
  const auto in_j = rs.positive_roots_in(j.indices());
  std::vector<std::pair<WeylGroup::Index, WeylGroup::Index>> out;
  for (WeylGroup::Index w1 = 0; w1 < w.size(); ++w1) {
    const IntMatrix a = w.element(w1).action();
    bool is_max = true;
    for (int k : in_j)
      if (positive_vec(column_image(a, rs.positive_root(k).coeffs()))) is_max = false;
    if (!is_max) continue;
    for (WeylGroup::Index w2 = 0; w2 < w.size(); ++w2)
      if (subword_bruhat(rs.datum(), a, w.word(w2))) out.emplace_back(w1, w2);
  }
  return out;
}

PairBrackets bracket_by_action(const ChevalleyAlgebra& alg, const ParabolicSet& j, RJConvention conv) {
  const auto& rs = *alg.root_system();
  const auto in_j = rs.positive_roots_in(j.indices());
  std::map<int, int> coord;  // e basis index -> coordinate
  for (int k = 0; k < rs.num_positive(); ++k)
    if (std::find(in_j.begin(), in_j.end(), k) == in_j.end()) {
      const int c = static_cast<int>(coord.size());
      coord[alg.e_index(k)] = c;
    }
  const Bivector r = r_j(alg, j, conv);
  std::map<int, RationalMatrix> ads;
  for (const auto& [key, c] : r.terms())
    for (int i : {key.first, key.second})
      if (!ads.count(i)) ads[i] = alg.ad(alg.basis_vector(i));
  PairBrackets out;
  for (const auto& [eb, b] : coord)
    for (const auto& [eg, g] : coord) {
      auto& q = out[{b, g}];
      for (const auto& [key, c] : r.terms()) {
        const auto& x = ads[key.first];
        const auto& y = ads[key.second];
        for (const auto& [ed, d] : coord)
          for (const auto& [ee, e] : coord) {
            const Rational v = x[ed][eb] * y[ee][eg] - y[ed][eb] * x[ee][eg];
            if (v != 0) q[{std::min(d, e), std::max(d, e)}] -= c * v;
          }
      }
      for (auto it = q.begin(); it != q.end();) it = it->second == 0 ? q.erase(it) : std::next(it);
      if (q.empty()) out.erase({b, g});
    }
  return out;
}

}  // namespace lieflag::reference
