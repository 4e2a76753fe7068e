#include "lieflag/brackets.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "lieflag/error.hpp"

namespace lieflag {

namespace {

Monomial mono(int a, int b) { return a <= b ? Monomial{a, b} : Monomial{b, a}; }

void accumulate(Quadratic& q, Monomial m, const Rational& c) {
  auto [it, fresh] = q.emplace(m, c);
  if (!fresh) it->second += c;
  if (is_zero(it->second)) q.erase(it);
}

void accumulate(Cubic& q, std::array<int, 3> m, const Rational& c) {
  std::sort(m.begin(), m.end());
  auto [it, fresh] = q.emplace(m, c);
  if (!fresh) it->second += c;
  if (is_zero(it->second)) q.erase(it);
}

int sign(int x) { return (x > 0) - (x < 0); }

std::string pair_label(const QuadraticBracketTable& t, int a, int b) {
  return "{" + t.names[a] + ", " + t.names[b] + "}";
}

// Adds c y_d y_e to {y_a, y_b} and -c y_d y_e to {y_b, y_a}.
void put(QuadraticBracketTable& t, int a, int b, int d, int e, const Rational& c) {
  t.add(a, b, d, e, c);
  t.add(b, a, d, e, -c);
}

QuadraticBracketTable rectangular(int p, int q) {
  QuadraticBracketTable t;
  auto id = [&](int i, int j) { return i * q + j; };
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) {
      t.names.push_back("x" + std::to_string(i + 1) + std::to_string(j + 1));
      std::vector<int> w(p + q, 0);
      w[i] = 1;
      w[p + j] = -1;
      t.weights.push_back(w);
    }
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j)
      for (int k = i; k < p; ++k)
        for (int l = 0; l < q; ++l) {
          if (k == i && l <= j) continue;
          const int a = id(i, j), b = id(k, l);
          if (k == i || l == j) put(t, a, b, a, b, 1);
          else if (l > j) put(t, a, b, id(i, l), id(k, j), 2);
        }
  return t;
}

QuadraticBracketTable euclidean(int n, bool odd) {
  QuadraticBracketTable t;
  const Rational half(1, 2);
  auto eps = [&](int i, int s) {
    std::vector<int> w(n, 0);
    w[0] = -1;
    if (i >= 0) w[i] += s;
    return w;
  };
  for (int i = 2; i <= n; ++i) {
    t.names.push_back("x" + std::to_string(i));
    t.weights.push_back(eps(i - 1, -1));
  }
  for (int i = 2; i <= n; ++i) {
    t.names.push_back("y" + std::to_string(i));
    t.weights.push_back(eps(i - 1, 1));
  }
  const int m = n - 1;
  auto x = [&](int i) { return i - 2; };
  auto y = [&](int i) { return m + i - 2; };
  const int z = 2 * m;
  if (odd) {
    t.names.push_back("z");
    t.weights.push_back(eps(-1, 0));
  }
  for (int i = 2; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      put(t, x(i), x(j), x(i), x(j), half);
      put(t, y(i), y(j), y(i), y(j), -half);
    }
  for (int i = 2; i <= n; ++i) {
    if (odd) {
      put(t, z, x(i), z, x(i), -half);
      put(t, z, y(i), z, y(i), half);
    }
    for (int j = 2; j <= n; ++j) {
      if (i != j) {
        put(t, x(i), y(j), x(i), y(j), half);
        continue;
      }
      for (int l = i + 1; l <= n; ++l) put(t, x(i), y(i), x(l), y(l), -1);
      if (odd) put(t, x(i), y(i), z, z, -half);
    }
  }
  return t;
}

// Y symmetric or antisymmetric; coordinates y_ij with i <= j (resp. i < j).
QuadraticBracketTable matrix_family(int n, bool symmetric) {
  QuadraticBracketTable t;
  std::map<std::pair<int, int>, int> id;
  for (int i = 1; i <= n; ++i)
    for (int j = symmetric ? i : i + 1; j <= n; ++j) {
      id[{i, j}] = t.size();
      t.names.push_back("y" + std::to_string(i) + std::to_string(j));
      std::vector<int> w(n, 0);
      w[i - 1] -= 1;
      w[j - 1] -= 1;
      t.weights.push_back(w);
    }
  // y_ab as (coordinate, sign); sign 0 when the entry vanishes.
  auto entry = [&](int a, int b) -> std::pair<int, int> {
    if (a == b && !symmetric) return {0, 0};
    if (a <= b) return {id.at({a, b}), 1};
    return {id.at({b, a}), symmetric ? 1 : -1};
  };
  auto term = [&](int a, int b, int p, int q, int r, int s, const Rational& c) {
    if (is_zero(c)) return;
    const auto [u, su] = entry(p, q);
    const auto [v, sv] = entry(r, s);
    if (su == 0 || sv == 0) return;
    t.add(a, b, u, v, c * su * sv);
  };
  const Rational scale = symmetric ? Rational(1) : Rational(1, 2);
  for (const auto& [ij, a] : id)
    for (const auto& [lm, b] : id) {
      const auto [i, j] = ij;
      const auto [l, m] = lm;
      if (symmetric) {
        term(a, b, i, l, j, m, scale * (sign(m - i) + sign(l - j)));
        term(a, b, i, m, j, l, scale * (sign(l - i) + sign(m - j)));
      } else {
        term(a, b, i, l, j, m, scale * (sign(l - j) + sign(m - i)));
        term(a, b, i, m, j, l, -scale * (sign(l - i) + sign(m - j)));
      }
    }
  return t;
}

QuadraticBracketTable half_spin(const Rational& pair_coefficient) {
  QuadraticBracketTable t;
  std::vector<int> subsets;
  for (int size : {1, 3, 5})
    for (int mask = 0; mask < 32; ++mask)
      if (__builtin_popcount(mask) == size) subsets.push_back(mask);
  std::sort(subsets.begin(), subsets.end(), [](int a, int b) {
    if (__builtin_popcount(a) != __builtin_popcount(b)) return __builtin_popcount(a) < __builtin_popcount(b);
    for (int i = 0; i < 5; ++i) {
      const bool ia = a >> i & 1, ib = b >> i & 1;
      if (ia != ib) return ia;
    }
    return false;
  });
  std::map<int, int> id;
  for (int mask : subsets) {
    id[mask] = t.size();
    std::string name = "y";
    std::vector<int> w(5);
    for (int i = 0; i < 5; ++i) {
      if (mask >> i & 1) name += std::to_string(i + 1);
      w[i] = (mask >> i & 1) ? 1 : -1;
    }
    t.names.push_back(name);
    t.weights.push_back(w);
  }
  auto between = [](int mask, int i, int j) {
    int c = 0;
    for (int l = std::min(i, j) + 1; l < std::max(i, j); ++l) c += mask >> l & 1;
    return c;
  };
  auto a_coef = [&](int I, int J, int i, int j) { return (between(I, i, j) + between(J, i, j)) % 2 ? -1 : 1; };
  const Rational& half = pair_coefficient;
  for (int I : subsets)
    for (int J : subsets) {
      const int a = id[I], b = id[J];
      const int ij = I & ~J, ji = J & ~I;
      for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
          if (!(ij >> i & 1) || !(ji >> j & 1) || i == j) continue;
          const int u = (I & ~(1 << i)) | (1 << j), v = (J & ~(1 << j)) | (1 << i);
          t.add(a, b, id[u], id[v], sign(j - i) * a_coef(I, J, i, j));
        }
      for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
          const int pair = (1 << i) | (1 << j);
          if ((ij & pair) == pair) t.add(a, b, id[I & ~pair], id[J | pair], -half * a_coef(I, J, i, j));
          if ((ji & pair) == pair) t.add(a, b, id[I | pair], id[J & ~pair], half * a_coef(I, J, i, j));
        }
    }
  return t;
}

// Integer solution of A u = k by column echelon form; nullopt if none exists.
struct IntegerSolve {
  std::optional<std::vector<mpz_class>> solution;
  int failed_row = -1;
};

IntegerSolve solve_integer(std::vector<std::vector<mpz_class>> a, const std::vector<mpz_class>& k, int n) {
  const int m = static_cast<int>(a.size());
  std::vector<std::vector<mpz_class>> u(n, std::vector<mpz_class>(n, 0));
  for (int i = 0; i < n; ++i) u[i][i] = 1;
  auto col_op = [&](int dst, int src, const mpz_class& f) {  // col dst -= f col src
    for (int r = 0; r < m; ++r) a[r][dst] -= f * a[r][src];
    for (int r = 0; r < n; ++r) u[r][dst] -= f * u[r][src];
  };
  auto col_swap = [&](int x, int y) {
    for (int r = 0; r < m; ++r) std::swap(a[r][x], a[r][y]);
    for (int r = 0; r < n; ++r) std::swap(u[r][x], u[r][y]);
  };
  std::vector<int> pivot_row_col(m, -1);
  int pc = 0;
  for (int r = 0; r < m && pc < n; ++r) {
    for (;;) {
      int best = -1;
      for (int c = pc; c < n; ++c)
        if (a[r][c] != 0 && (best < 0 || abs(a[r][c]) < abs(a[r][best]))) best = c;
      if (best < 0) break;
      col_swap(pc, best);
      bool done = true;
      for (int c = pc + 1; c < n; ++c) {
        if (a[r][c] == 0) continue;
        mpz_class f;
        mpz_fdiv_q(f.get_mpz_t(), a[r][c].get_mpz_t(), a[r][pc].get_mpz_t());
        col_op(c, pc, f);
        if (a[r][c] != 0) done = false;
      }
      if (done) break;
    }
    if (a[r][pc] != 0) pivot_row_col[r] = pc++;
  }
  std::vector<mpz_class> v(n, 0);
  for (int r = 0; r < m; ++r) {
    mpz_class acc = 0;
    const int lim = pivot_row_col[r] >= 0 ? pivot_row_col[r] : pc;
    for (int c = 0; c < lim; ++c) acc += a[r][c] * v[c];
    const mpz_class rest = k[r] - acc;
    if (pivot_row_col[r] >= 0) {
      const mpz_class& d = a[r][pivot_row_col[r]];
      if (rest % d != 0) return {std::nullopt, r};
      v[pivot_row_col[r]] = rest / d;
    } else if (rest != 0) {
      return {std::nullopt, r};
    }
  }
  std::vector<mpz_class> out(n, 0);
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < n; ++c) out[i] += u[i][c] * v[c];
  return {out, -1};
}

// Solution of A s = k over GF(2).
IntegerSolve solve_mod2(std::vector<std::vector<int>> a, std::vector<int> k, int n) {
  const int m = static_cast<int>(a.size());
  std::vector<int> where(n, -1);
  std::vector<int> origin(m);
  for (int r = 0; r < m; ++r) origin[r] = r;
  int row = 0;
  for (int c = 0; c < n && row < m; ++c) {
    int sel = -1;
    for (int r = row; r < m; ++r)
      if (a[r][c]) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    std::swap(a[sel], a[row]);
    std::swap(k[sel], k[row]);
    std::swap(origin[sel], origin[row]);
    for (int r = 0; r < m; ++r)
      if (r != row && a[r][c]) {
        for (int x = 0; x < n; ++x) a[r][x] ^= a[row][x];
        k[r] ^= k[row];
      }
    where[c] = row++;
  }
  for (int r = row; r < m; ++r)
    if (k[r]) return {std::nullopt, origin[r]};
  std::vector<mpz_class> out(n, 0);
  for (int c = 0; c < n; ++c)
    if (where[c] >= 0) out[c] = k[where[c]];
  return {out, -1};
}

std::map<unsigned long, int> factor(mpz_class x) {
  std::map<unsigned long, int> out;
  x = abs(x);
  for (unsigned long p = 2; x > 1; ++p) {
    if (mpz_class(p) * p > x) {
      ++out[x.get_ui()];
      break;
    }
    while (x % p == 0) {
      ++out[p];
      x /= p;
    }
  }
  return out;
}

struct Constraint {
  int a, b, d, e;
  Rational ratio;  // lambda_a lambda_b / (lambda_d lambda_e)
};

}  // namespace

Quadratic QuadraticBracketTable::bracket(int a, int b) const {
  const auto it = coeffs.find({a, b});
  return it == coeffs.end() ? Quadratic{} : it->second;
}

void QuadraticBracketTable::add(int a, int b, int d, int e, const Rational& c) {
  if (is_zero(c)) return;
  auto& q = coeffs[{a, b}];
  accumulate(q, mono(d, e), c);
  if (q.empty()) coeffs.erase({a, b});
}

std::optional<int> QuadraticBracketTable::index_of(const std::string& name) const {
  const auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) return std::nullopt;
  return static_cast<int>(it - names.begin());
}

std::optional<std::string> antisymmetry_violation(const QuadraticBracketTable& t) {
  for (const auto& [ab, q] : t.coeffs) {
    const auto [a, b] = ab;
    if (a == b) return pair_label(t, a, a) + " is nonzero";
    Quadratic sum = q;
    for (const auto& [m, c] : t.bracket(b, a)) accumulate(sum, m, c);
    if (!sum.empty()) return pair_label(t, a, b) + " != -" + pair_label(t, b, a);
  }
  return std::nullopt;
}

std::optional<std::string> homogeneity_violation(const QuadraticBracketTable& t) {
  for (const auto& [ab, q] : t.coeffs) {
    const auto [a, b] = ab;
    for (const auto& [m, c] : q) {
      const auto& wa = t.weights[a];
      for (std::size_t i = 0; i < wa.size(); ++i)
        if (wa[i] + t.weights[b][i] != t.weights[m.first][i] + t.weights[m.second][i])
          return pair_label(t, a, b) + " has term " + t.names[m.first] + "*" + t.names[m.second] + " of wrong weight";
    }
  }
  return std::nullopt;
}

bool is_hermitian(const RootSystem& rs, const ParabolicSet& j) {
  if (static_cast<int>(j.size()) != rs.rank() - 1) return false;
  for (int i = 0; i < rs.rank(); ++i)
    if (!j.contains(i)) return rs.highest_root()[i] == 1;
  return false;
}

QuadraticBracketTable bracket_table(const ChevalleyAlgebra& alg, const ParabolicSet& j, RJConvention conv) {
  const auto& rs = *alg.root_system();
  if (!is_hermitian(rs, j)) throw DomainError("parabolic " + to_string(j) + " is not Hermitian");
  const auto in_j = rs.positive_roots_in(j.indices());
  std::vector<Root> coords;
  std::map<Root, int> id;
  QuadraticBracketTable t;
  for (int k = 0; k < rs.num_positive(); ++k) {
    if (std::binary_search(in_j.begin(), in_j.end(), k)) continue;
    const Root& r = rs.positive_root(k);
    id[r] = static_cast<int>(coords.size());
    coords.push_back(r);
    t.names.push_back("y" + to_string(r));
    t.weights.push_back(r.coeffs());
  }
  for (const Root& b : coords)
    for (const Root& g : coords) {
      for (int ka : in_j) {
        const Root& a = rs.positive_root(ka);
        const Rational wt = rj_weight(rs, a, conv);
        const auto ab = id.find(a + b), ga = id.find(g - a);
        if (ab != id.end() && ga != id.end())
          t.add(id[b], id[g], ab->second, ga->second, -wt * alg.structure_constant(a, b) * alg.structure_constant(-a, g));
        const auto ba = id.find(b - a), ag = id.find(a + g);
        if (ba != id.end() && ag != id.end())
          t.add(id[b], id[g], ba->second, ag->second, wt * alg.structure_constant(-a, b) * alg.structure_constant(a, g));
      }
    }
  return t;
}

Cubic bracket_with(const QuadraticBracketTable& t, const Quadratic& p, int c) {
  Cubic out;
  for (const auto& [m, coef] : p) {
    for (const auto& [n, v] : t.bracket(m.second, c)) accumulate(out, {m.first, n.first, n.second}, coef * v);
    for (const auto& [n, v] : t.bracket(m.first, c)) accumulate(out, {m.second, n.first, n.second}, coef * v);
  }
  return out;
}

JacobiReport jacobi_check(const QuadraticBracketTable& t) {
  JacobiReport rep;
  const int n = t.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        ++rep.triples;
        Cubic sum = bracket_with(t, t.bracket(i, j), k);
        for (const auto& [m, c] : bracket_with(t, t.bracket(j, k), i)) accumulate(sum, m, c);
        for (const auto& [m, c] : bracket_with(t, t.bracket(k, i), j)) accumulate(sum, m, c);
        if (!sum.empty() && !rep.failure) {
          rep.failure = std::array<int, 3>{i, j, k};
          rep.residual = sum;
        }
      }
  return rep;
}

std::string to_string(GoldenFamily f) {
  switch (f) {
    case GoldenFamily::Rectangular: return "rectangular";
    case GoldenFamily::OddEuclidean: return "odd-euclidean";
    case GoldenFamily::Symmetric: return "symmetric";
    case GoldenFamily::EvenEuclidean: return "even-euclidean";
    case GoldenFamily::Antisymmetric: return "antisymmetric";
    case GoldenFamily::HalfSpin: return "half-spin";
  }
  return "";
}

GoldenFamily parse_golden_family(const std::string& s) {
  for (auto f : {GoldenFamily::Rectangular, GoldenFamily::OddEuclidean, GoldenFamily::Symmetric,
                 GoldenFamily::EvenEuclidean, GoldenFamily::Antisymmetric, GoldenFamily::HalfSpin})
    if (to_string(f) == s) return f;
  throw InvalidArgument("unknown family '" + s + "'");
}

QuadraticBracketTable golden_table(GoldenFamily family, int size, int size2) {
  switch (family) {
    case GoldenFamily::Rectangular:
      if (size < 1 || size2 < 1) throw InvalidArgument("rectangular family needs p, q >= 1");
      return rectangular(size, size2);
    case GoldenFamily::OddEuclidean:
      if (size < 2) throw InvalidArgument("odd Euclidean family needs N >= 2");
      return euclidean(size, true);
    case GoldenFamily::EvenEuclidean:
      if (size < 4) throw InvalidArgument("even Euclidean family needs N >= 4");
      return euclidean(size, false);
    case GoldenFamily::Symmetric:
      if (size < 1) throw InvalidArgument("symmetric family needs N >= 1");
      return matrix_family(size, true);
    case GoldenFamily::Antisymmetric:
      if (size < 4) throw InvalidArgument("antisymmetric family needs N >= 4");
      return matrix_family(size, false);
    case GoldenFamily::HalfSpin:
      if (size != 5) throw InvalidArgument("half-spin family exists only for size 5");
      return half_spin(Rational(1, 2));
  }
  throw InvalidArgument("unknown family");
}

QuadraticBracketTable half_spin_table(const Rational& pair_coefficient) { return half_spin(pair_coefficient); }

QuadraticBracketTable scale_table(const QuadraticBracketTable& t, const Rational& c) {
  if (c == 0) throw InvalidArgument("scale must be nonzero");
  QuadraticBracketTable out = t;
  for (auto& [ab, q] : out.coeffs)
    for (auto& [m, v] : q) v *= c;
  return out;
}

std::optional<std::pair<GoldenFamily, std::pair<int, int>>> golden_for(const RootSystem& rs, int alpha_prime) {
  const int n = rs.rank();
  const int m = alpha_prime + 1;
  switch (rs.datum().series()) {
    case Series::A: return std::make_pair(GoldenFamily::Rectangular, std::make_pair(n - m + 1, m));
    case Series::B:
      if (m == 1) return std::make_pair(GoldenFamily::OddEuclidean, std::make_pair(n, 0));
      break;
    case Series::C:
      if (m == n) return std::make_pair(GoldenFamily::Symmetric, std::make_pair(n, 0));
      break;
    case Series::D:
      if (m == 1) return std::make_pair(GoldenFamily::EvenEuclidean, std::make_pair(n, 0));
      if (m >= n - 1) return std::make_pair(GoldenFamily::Antisymmetric, std::make_pair(n, 0));
      break;
    case Series::E:
      if (n == 6 && (m == 1 || m == 6)) return std::make_pair(GoldenFamily::HalfSpin, std::make_pair(5, 0));
      break;
    default: break;
  }
  return std::nullopt;
}

QuadraticBracketTable transform(const QuadraticBracketTable& t, const std::vector<int>& sigma,
                                const std::vector<Rational>& lambda, const std::vector<std::string>& names,
                                const std::vector<std::vector<int>>& weights) {
  QuadraticBracketTable out;
  out.names = names;
  out.weights = weights;
  for (const auto& [ab, q] : t.coeffs)
    for (const auto& [m, c] : q)
      out.add(sigma[ab.first], sigma[ab.second], sigma[m.first], sigma[m.second],
              c * lambda[ab.first] * lambda[ab.second] / (lambda[m.first] * lambda[m.second]));
  return out;
}

MatchReport match_tables(const QuadraticBracketTable& computed, const QuadraticBracketTable& golden,
                         long max_bijections) {
  MatchReport rep;
  const int n = computed.size();
  if (golden.size() != n) {
    rep.failure = "coordinate counts differ: " + std::to_string(n) + " vs " + std::to_string(golden.size());
    return rep;
  }
  // Rescaling invariants of a pair: the coefficient of y_a y_b and the number of terms.
  auto invariant = [](const QuadraticBracketTable& t, int a, int b) {
    const Quadratic q = t.bracket(a, b);
    const auto it = q.find(mono(a, b));
    return std::make_pair(it == q.end() ? Rational(0) : it->second, q.size());
  };
  auto signature = [&](const QuadraticBracketTable& t, int a) {
    std::vector<std::pair<Rational, std::size_t>> s;
    for (int b = 0; b < n; ++b)
      if (b != a) s.push_back(invariant(t, a, b));
    std::sort(s.begin(), s.end());
    return s;
  };
  std::vector<std::vector<int>> candidates(n);
  for (int a = 0; a < n; ++a) {
    const auto sa = signature(computed, a);
    for (int x = 0; x < n; ++x)
      if (signature(golden, x) == sa) candidates[a].push_back(x);
    if (candidates[a].empty()) {
      rep.failure = "no golden coordinate shares the bracket invariants of " + computed.names[a];
      return rep;
    }
  }

  std::vector<int> sigma(n, -1);
  std::vector<bool> used(n, false);
  std::string first_failure;

  auto consistent = [&](int a) {
    for (int b = 0; b < n; ++b) {
      if (sigma[b] < 0 || b == a) continue;
      for (auto [p, q] : {std::make_pair(a, b), std::make_pair(b, a)}) {
        if (invariant(computed, p, q) != invariant(golden, sigma[p], sigma[q])) return false;
        const Quadratic g = golden.bracket(sigma[p], sigma[q]);
        for (const auto& [m, c] : computed.bracket(p, q))
          if (sigma[m.first] >= 0 && sigma[m.second] >= 0 && !g.count(mono(sigma[m.first], sigma[m.second])))
            return false;
      }
    }
    return true;
  };

  auto solve_lambda = [&]() -> std::optional<std::vector<Rational>> {
    std::vector<Constraint> cons;
    for (const auto& [ab, q] : computed.coeffs) {
      const Quadratic g = golden.bracket(sigma[ab.first], sigma[ab.second]);
      if (g.size() != q.size()) {
        if (first_failure.empty()) first_failure = pair_label(computed, ab.first, ab.second) + ": term counts differ";
        return std::nullopt;
      }
      for (const auto& [m, c] : q) {
        const auto it = g.find(mono(sigma[m.first], sigma[m.second]));
        if (it == g.end()) {
          if (first_failure.empty())
            first_failure = pair_label(computed, ab.first, ab.second) + ": term " + computed.names[m.first] + "*" +
                            computed.names[m.second] + " has no golden counterpart";
          return std::nullopt;
        }
        cons.push_back({ab.first, ab.second, m.first, m.second, it->second / c});
      }
    }
    const int rows = static_cast<int>(cons.size());
    std::vector<std::vector<int>> a2(rows, std::vector<int>(n, 0));
    std::vector<int> k2(rows, 0);
    std::set<unsigned long> primes;
    for (int r = 0; r < rows; ++r) {
      const auto& c = cons[r];
      for (int v : {c.a, c.b, c.d, c.e}) a2[r][v] ^= 1;
      k2[r] = sgn(c.ratio) < 0;
      for (const auto& [p, e] : factor(c.ratio.get_num())) primes.insert(p);
      for (const auto& [p, e] : factor(c.ratio.get_den())) primes.insert(p);
    }
    auto describe = [&](int r) {
      const auto& c = cons[r];
      return pair_label(computed, c.a, c.b) + " term " + computed.names[c.d] + "*" + computed.names[c.e] +
             " needs ratio " + to_string(c.ratio);
    };
    const auto signs = solve_mod2(a2, k2, n);
    if (!signs.solution) {
      if (first_failure.empty()) first_failure = "sign constraints inconsistent at " + describe(signs.failed_row);
      return std::nullopt;
    }
    std::vector<Rational> lambda(n);
    for (int v = 0; v < n; ++v) lambda[v] = (*signs.solution)[v] == 1 ? -1 : 1;
    std::vector<std::vector<mpz_class>> az(rows, std::vector<mpz_class>(n, 0));
    for (int r = 0; r < rows; ++r) {
      const auto& c = cons[r];
      az[r][c.a] += 1;
      az[r][c.b] += 1;
      az[r][c.d] -= 1;
      az[r][c.e] -= 1;
    }
    for (unsigned long p : primes) {
      std::vector<mpz_class> kz(rows);
      for (int r = 0; r < rows; ++r) {
        const auto fn = factor(cons[r].ratio.get_num());
        const auto fd = factor(cons[r].ratio.get_den());
        kz[r] = (fn.count(p) ? fn.at(p) : 0) - (fd.count(p) ? fd.at(p) : 0);
      }
      const auto ex = solve_integer(az, kz, n);
      if (!ex.solution) {
        if (first_failure.empty())
          first_failure = "no rational rescaling for prime " + std::to_string(p) + " at " + describe(ex.failed_row);
        return std::nullopt;
      }
      for (int v = 0; v < n; ++v) {
        const mpz_class e = (*ex.solution)[v];
        mpz_class pw;
        mpz_pow_ui(pw.get_mpz_t(), mpz_class(p).get_mpz_t(), mpz_class(abs(e)).get_ui());
        lambda[v] *= e >= 0 ? Rational(pw) : Rational(1) / Rational(pw);
      }
    }
    return lambda;
  };

  std::function<bool(int)> search = [&](int a) -> bool {
    if (a == n) {
      ++rep.bijections_tried;
      auto lambda = solve_lambda();
      if (!lambda) return rep.bijections_tried >= max_bijections;
      const auto image = transform(computed, sigma, *lambda, golden.names, golden.weights);
      if (image.coeffs != golden.coeffs) {
        if (first_failure.empty()) first_failure = "rescaled table differs from golden on re-expansion";
        return rep.bijections_tried >= max_bijections;
      }
      rep.success = true;
      rep.sigma = sigma;
      rep.lambda = *lambda;
      const auto plain = transform(computed, sigma, std::vector<Rational>(n, Rational(1)), golden.names, golden.weights);
      rep.literal = plain.coeffs == golden.coeffs;
      return true;
    }
    for (int x : candidates[a]) {
      if (used[x]) continue;
      sigma[a] = x;
      used[x] = true;
      if (consistent(a) && search(a + 1)) return true;
      used[x] = false;
      sigma[a] = -1;
    }
    return false;
  };
  search(0);
  if (!rep.success) {
    if (rep.bijections_tried == 0)
      rep.failure = "no bijection preserves bracket supports and diagonal coefficients";
    else
      rep.failure = first_failure + " (" + std::to_string(rep.bijections_tried) + " bijections tried)";
  }
  return rep;
}

MatchReport match_tables_up_to_scale(const QuadraticBracketTable& computed, const QuadraticBracketTable& golden,
                                     long max_bijections) {
  MatchReport first = match_tables(computed, golden, max_bijections);
  if (first.success || computed.coeffs.empty() || golden.coeffs.empty()) return first;
  const Rational c0 = abs(computed.coeffs.begin()->second.begin()->second);
  std::set<Rational> magnitudes;
  for (const auto& [ab, q] : golden.coeffs)
    for (const auto& [m, v] : q) magnitudes.insert(abs(v) / c0);
  std::vector<Rational> scales;
  for (const Rational& c : magnitudes)
    if (c != 1) scales.push_back(c);
  for (const Rational& c : magnitudes) scales.push_back(-c);
  for (const Rational& c : scales) {
    MatchReport rep = match_tables(scale_table(computed, c), golden, max_bijections);
    if (!rep.success) continue;
    rep.scale = c;
    rep.literal = false;
    return rep;
  }
  first.failure += "; no global factor helps";
  return first;
}

}  // namespace lieflag
