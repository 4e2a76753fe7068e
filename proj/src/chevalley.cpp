#include "lieflag/chevalley.hpp"

#include <stdexcept>

#include "lieflag/error.hpp"

namespace lieflag {

namespace {

bool matrix_is_zero(const RationalMatrix& m) {
  for (const auto& row : m)
    for (const auto& x : row)
      if (!is_zero(x)) return false;
  return true;
}

RationalMatrix sparse_multiply(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t n = a.size();
  const std::size_t p = b.empty() ? 0 : b[0].size();
  RationalMatrix out(n, std::vector<Rational>(p));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (is_zero(a[i][k])) continue;
      for (std::size_t j = 0; j < p; ++j)
        if (!is_zero(b[k][j])) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// ChevalleyAlgebra

ChevalleyAlgebra::ChevalleyAlgebra(RootSystemPtr rs)
    : rs_(std::move(rs)), rank_(rs_->rank()), m_(rs_->num_positive()), dim_(2 * m_ + rank_) {
  weights_.resize(dim_, Root::zero(rank_));
  for (int k = 0; k < m_; ++k) {
    weights_[e_index(k)] = rs_->positive_root(k);
    weights_[f_index(k)] = -rs_->positive_root(k);
  }
}

std::shared_ptr<const ChevalleyAlgebra> ChevalleyAlgebra::build(RootSystemPtr rs) {
  std::shared_ptr<ChevalleyAlgebra> alg(new ChevalleyAlgebra(std::move(rs)));
  alg->compute_structure_constants();
  alg->fill_table();
  return alg;
}

int ChevalleyAlgebra::root_vector_index(const Root& r) const {
  if (r.is_positive()) {
    if (auto k = rs_->positive_index(r)) return e_index(*k);
  } else if (r.is_negative()) {
    if (auto k = rs_->positive_index(-r)) return f_index(*k);
  }
  throw InvalidArgument("not a root: " + to_string(r));
}

std::string ChevalleyAlgebra::basis_label(int idx) const {
  if (idx < m_) return "f" + to_string(-weights_[idx]);
  if (idx < m_ + rank_) return "h" + std::to_string(idx - m_ + 1);
  return "e" + to_string(weights_[idx]);
}

int ChevalleyAlgebra::string_bottom(const Root& a, const Root& b) const {
  int p = 0;
  Root cur = b - a;
  while (!cur.is_zero() && rs_->is_root(cur)) {
    ++p;
    cur = cur - a;
  }
  return p;
}

int ChevalleyAlgebra::structure_constant(const Root& a, const Root& b) const {
  const Root s = a + b;
  if (s.is_zero() || !rs_->is_root(s) || !rs_->is_root(a) || !rs_->is_root(b)) return 0;
  if (a.is_positive() && b.is_positive()) return pos_[*rs_->positive_index(a) * m_ + *rs_->positive_index(b)];
  if (a.is_negative() && b.is_negative()) return -structure_constant(-a, -b);
  if (a.is_negative()) return -structure_constant(b, a);
  // a > 0 > b.
  if (s.is_negative()) return structure_constant(-b, -a);
  // a + b + (-s) = 0, so N_{a,b}/<s,s> = N_{b,-s}/<a,a>, and N_{b,-s} = -N_{-b,s}.
  const Rational q = -rs_->norm2(s) / rs_->norm2(a) * structure_constant(-b, s);
  if (q.get_den() != 1) throw std::logic_error("non-integral structure constant");
  return static_cast<int>(q.get_num().get_si());
}

void ChevalleyAlgebra::compute_structure_constants() {
  pos_.assign(static_cast<std::size_t>(m_) * m_, 0);
  for (int x = 0; x < m_; ++x) {
    const Root& xi = rs_->positive_root(x);
    if (xi.height() == 1) continue;
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < m_; ++a) {
      const Root rest = xi - rs_->positive_root(a);
      if (!rest.is_positive()) continue;
      auto b = rs_->positive_index(rest);
      if (b && a < *b) pairs.emplace_back(a, *b);
    }
    // The extraspecial pair has the smallest first entry; its sign is +.
    const auto [g, d] = pairs.front();
    const Root& gamma = rs_->positive_root(g);
    const Root& delta = rs_->positive_root(d);
    const int nx = string_bottom(gamma, delta) + 1;
    pos_[g * m_ + d] = nx;
    pos_[d * m_ + g] = -nx;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const auto [a, b] = pairs[k];
      const Root& alpha = rs_->positive_root(a);
      const Root& beta = rs_->positive_root(b);
      // Four-root relation on alpha + beta - gamma - delta = 0.
      Rational sum = 0;
      const Root bg = beta - gamma;
      if (!bg.is_zero() && rs_->is_root(bg))
        sum += Rational(structure_constant(beta, -gamma) * structure_constant(alpha, -delta)) / rs_->norm2(bg);
      const Root ag = alpha - gamma;
      if (!ag.is_zero() && rs_->is_root(ag))
        sum += Rational(structure_constant(-gamma, alpha) * structure_constant(beta, -delta)) / rs_->norm2(ag);
      const Rational val = -rs_->norm2(xi) * sum / Rational(-nx);
      const int p1 = string_bottom(alpha, beta) + 1;
      if (val.get_den() != 1 || abs(val) != p1)
        throw std::logic_error("structure constant inconsistent with root strings");
      const int v = static_cast<int>(val.get_num().get_si());
      pos_[a * m_ + b] = v;
      pos_[b * m_ + a] = -v;
    }
  }
}

void ChevalleyAlgebra::fill_table() {
  table_.assign(static_cast<std::size_t>(dim_) * dim_, {});
  const auto& cartan = rs_->datum();
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      auto& out = table_[i * dim_ + j];
      const bool ri = is_root_vector(i);
      const bool rj = is_root_vector(j);
      if (!ri && !rj) continue;
      if (!ri || !rj) {
        // [h_s, e_g] = <g, alpha_s^vee> e_g.
        const int s = ri ? j - m_ : i - m_;
        const int root = ri ? i : j;
        int v = 0;
        for (int c = 0; c < rank_; ++c) v += weights_[root][c] * cartan.cartan(s, c);
        if (v != 0) out.push_back({root, ri ? -v : v});
        continue;
      }
      const Root sum = weights_[i] + weights_[j];
      if (sum.is_zero()) {
        // [e_g, e_{-g}] = g^vee = sum_c g_c <alpha_c,alpha_c>/<g,g> h_c.
        const Rational n2 = rs_->norm2(weights_[i]);
        for (int c = 0; c < rank_; ++c) {
          if (weights_[i][c] == 0) continue;
          const Rational q = weights_[i][c] * rs_->norm2(Root::simple(rank_, c)) / n2;
          if (q.get_den() != 1) throw std::logic_error("non-integral coroot");
          out.push_back({h_index(c), static_cast<int>(q.get_num().get_si())});
        }
        continue;
      }
      const int n = structure_constant(weights_[i], weights_[j]);
      if (n != 0) out.push_back({root_vector_index(sum), n});
    }
  }
}

LieElement ChevalleyAlgebra::basis_vector(int idx) const {
  LieElement v(dim_);
  v[idx] = 1;
  return v;
}

LieElement ChevalleyAlgebra::bracket(const LieElement& x, const LieElement& y) const {
  LieElement out(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (is_zero(x[i])) continue;
    for (int j = 0; j < dim_; ++j) {
      if (is_zero(y[j])) continue;
      const Rational c = x[i] * y[j];
      for (const auto& t : basis_bracket(i, j)) out[t.index] += c * t.coeff;
    }
  }
  return out;
}

Rational ChevalleyAlgebra::form(int i, int j) const {
  const bool ri = is_root_vector(i);
  const bool rj = is_root_vector(j);
  if (ri != rj) return 0;
  if (!ri) {
    const Root a = Root::simple(rank_, i - m_);
    const Root b = Root::simple(rank_, j - m_);
    return 4 * rs_->inner(a, b) / (rs_->norm2(a) * rs_->norm2(b));
  }
  if (!(weights_[i] + weights_[j]).is_zero()) return 0;
  return 2 / rs_->norm2(weights_[i]);
}

Rational ChevalleyAlgebra::form(const LieElement& x, const LieElement& y) const {
  Rational out = 0;
  for (int i = 0; i < dim_; ++i) {
    if (is_zero(x[i])) continue;
    for (int j = 0; j < dim_; ++j)
      if (!is_zero(y[j])) out += x[i] * y[j] * form(i, j);
  }
  return out;
}

RationalMatrix ChevalleyAlgebra::ad(const LieElement& x) const {
  RationalMatrix m(dim_, std::vector<Rational>(dim_));
  for (int i = 0; i < dim_; ++i) {
    if (is_zero(x[i])) continue;
    for (int j = 0; j < dim_; ++j)
      for (const auto& t : basis_bracket(i, j)) m[t.index][j] += x[i] * t.coeff;
  }
  return m;
}

// ---------------------------------------------------------------------------
// AdMatrix

AdMatrix::AdMatrix(RationalMatrix m, std::vector<std::string> provenance)
    : m_(std::move(m)), provenance_(std::move(provenance)) {}

AdMatrix AdMatrix::identity(int dim) { return AdMatrix(identity_matrix(dim), {}); }

LieElement AdMatrix::apply(const LieElement& x) const {
  const int n = dimension();
  LieElement out(n);
  for (int j = 0; j < n; ++j) {
    if (is_zero(x[j])) continue;
    for (int i = 0; i < n; ++i)
      if (!is_zero(m_[i][j])) out[i] += m_[i][j] * x[j];
  }
  return out;
}

AdMatrix AdMatrix::inverse() const {
  auto inv = lieflag::inverse(m_);
  if (!inv) throw DomainError("AdMatrix is singular");
  std::vector<std::string> prov;
  for (auto it = provenance_.rbegin(); it != provenance_.rend(); ++it) prov.push_back("(" + *it + ")^-1");
  return AdMatrix(std::move(*inv), std::move(prov));
}

AdMatrix operator*(const AdMatrix& a, const AdMatrix& b) {
  if (a.dimension() != b.dimension()) throw InvalidArgument("AdMatrix dimensions differ");
  std::vector<std::string> prov = a.provenance_;
  prov.insert(prov.end(), b.provenance_.begin(), b.provenance_.end());
  return AdMatrix(sparse_multiply(a.m_, b.m_), std::move(prov));
}

AdMatrix ad_exp(const ChevalleyAlgebra& alg, const LieElement& x, std::string label) {
  const int n = alg.dimension();
  const RationalMatrix a = alg.ad(x);
  RationalMatrix result = identity_matrix(n);
  RationalMatrix term = identity_matrix(n);
  for (int k = 1;; ++k) {
    term = sparse_multiply(a, term);
    if (matrix_is_zero(term)) break;
    if (k > n) throw DomainError("ad_exp: ad_x is not nilpotent");
    for (auto& row : term)
      for (auto& v : row) v /= k;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!is_zero(term[i][j])) result[i][j] += term[i][j];
  }
  return AdMatrix(std::move(result), {std::move(label)});
}

AdMatrix weyl_rep_ad(const ChevalleyAlgebra& alg, const Root& beta) {
  if (!beta.is_positive() || !alg.root_system()->is_root(beta))
    throw InvalidArgument("weyl_rep_ad: not a positive root " + to_string(beta));
  LieElement e = alg.basis_vector(alg.root_vector_index(beta));
  LieElement f = alg.basis_vector(alg.root_vector_index(-beta));
  for (auto& v : f) v = -v;
  const AdMatrix ee = ad_exp(alg, e);
  const AdMatrix m = ee * ad_exp(alg, f) * ee;
  return AdMatrix(m.matrix(), {"w" + to_string(beta)});
}

AdMatrix weyl_element_ad(const ChevalleyAlgebra& alg, const WeylElement& w) {
  const int n = alg.rank();
  AdMatrix out = AdMatrix::identity(alg.dimension());
  for (int s : w.word()) out = out * weyl_rep_ad(alg, Root::simple(n, s));
  return out;
}

bool preserves_bracket(const ChevalleyAlgebra& alg, const AdMatrix& m) {
  const int n = alg.dimension();
  std::vector<LieElement> cols(n);
  for (int j = 0; j < n; ++j) cols[j] = m.apply(alg.basis_vector(j));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      LieElement lhs(n);
      for (const auto& t : alg.basis_bracket(i, j))
        for (int r = 0; r < n; ++r)
          if (!is_zero(cols[t.index][r])) lhs[r] += t.coeff * cols[t.index][r];
      if (lhs != alg.bracket(cols[i], cols[j])) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Bivector

void Bivector::add(int i, int j, const Rational& c) {
  if (i == j || lieflag::is_zero(c)) return;
  Rational v = c;
  if (i > j) {
    std::swap(i, j);
    v = -v;
  }
  auto [it, inserted] = terms_.try_emplace({i, j}, v);
  if (!inserted) {
    it->second += v;
    if (lieflag::is_zero(it->second)) terms_.erase(it);
  }
}

Rational Bivector::coefficient(int i, int j) const {
  if (i == j) return 0;
  const bool flip = i > j;
  auto it = terms_.find(flip ? Key{j, i} : Key{i, j});
  if (it == terms_.end()) return 0;
  return flip ? Rational(-it->second) : it->second;
}

Bivector Bivector::operator+(const Bivector& o) const {
  Bivector out = *this;
  for (const auto& [k, c] : o.terms_) out.add(k.first, k.second, c);
  return out;
}

Bivector Bivector::operator-(const Bivector& o) const { return *this + o.scaled(-1); }

Bivector Bivector::scaled(const Rational& c) const {
  Bivector out;
  if (lieflag::is_zero(c)) return out;
  for (const auto& [k, v] : terms_) out.terms_.emplace(k, v * c);
  return out;
}

Bivector wedge(const LieElement& x, const LieElement& y) {
  Bivector out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (!is_zero(y[j])) out.add(static_cast<int>(i), static_cast<int>(j), x[i] * y[j]);
  }
  return out;
}

Bivector transport(const AdMatrix& m, const Bivector& b) {
  const auto& a = m.matrix();
  const int n = m.dimension();
  Bivector out;
  for (const auto& [key, c] : b.terms()) {
    const auto [i, j] = key;
    for (int k = 0; k < n; ++k) {
      if (is_zero(a[k][i]) && is_zero(a[k][j])) continue;
      for (int l = k + 1; l < n; ++l) {
        const Rational v = a[k][i] * a[l][j] - a[l][i] * a[k][j];
        if (!is_zero(v)) out.add(k, l, c * v);
      }
    }
  }
  return out;
}

Bivector wedge_component(const Bivector& b, const std::vector<int>& s1, const std::vector<int>& s2) {
  auto in = [](const std::vector<int>& s, int x) { return std::find(s.begin(), s.end(), x) != s.end(); };
  Bivector out;
  for (const auto& [key, c] : b.terms()) {
    const auto [i, j] = key;
    if ((in(s1, i) && in(s2, j)) || (in(s2, i) && in(s1, j))) out.add(i, j, c);
  }
  return out;
}

std::string to_string(RJConvention c) { return c == RJConvention::Unit ? "unit" : "normalized"; }

Rational rj_weight(const RootSystem& rs, const Root& a, RJConvention conv) {
  return conv == RJConvention::Unit ? Rational(1) : Rational(rs.norm2(a) / 2);
}

namespace {

Bivector weighted_sum(const ChevalleyAlgebra& alg, const std::vector<int>& roots, bool normalized) {
  const auto& rs = *alg.root_system();
  Bivector out;
  for (int k : roots) {
    const Rational c = normalized ? Rational(rs.norm2(rs.positive_root(k)) / 2) : Rational(1);
    out.add(alg.e_index(k), alg.f_index(k), c);
  }
  return out;
}

}  // namespace

Bivector r_matrix(const ChevalleyAlgebra& alg) {
  std::vector<int> all(alg.num_positive());
  for (int k = 0; k < alg.num_positive(); ++k) all[k] = k;
  return weighted_sum(alg, all, true);
}

Bivector r_j(const ChevalleyAlgebra& alg, const ParabolicSet& j, RJConvention conv) {
  return weighted_sum(alg, alg.root_system()->positive_roots_in(j.indices()), conv == RJConvention::Normalized);
}

Bivector r_check(const ChevalleyAlgebra& alg, const ParabolicSet& j, RJConvention conv) {
  const auto in_j = alg.root_system()->positive_roots_in(j.indices());
  std::vector<int> rest;
  for (int k = 0; k < alg.num_positive(); ++k)
    if (std::find(in_j.begin(), in_j.end(), k) == in_j.end()) rest.push_back(k);
  return weighted_sum(alg, rest, conv == RJConvention::Normalized);
}

}  // namespace lieflag
