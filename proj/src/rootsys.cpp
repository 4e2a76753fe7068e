#include "lieflag/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <numeric>

#include "lieflag/error.hpp"
#include "lieflag/linalg.hpp"

namespace lieflag {

namespace {

void link(IntMatrix& m, int i, int j) {
  m[i][j] = -1;
  m[j][i] = -1;
}

IntMatrix cartan_matrix_for(Series s, int n) {
  IntMatrix m(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 2;
  switch (s) {
    case Series::A:
      for (int i = 0; i + 1 < n; ++i) link(m, i, i + 1);
      break;
    case Series::B:
      for (int i = 0; i + 1 < n; ++i) link(m, i, i + 1);
      m[n - 1][n - 2] = -2;  // alpha_n short
      break;
    case Series::C:
      for (int i = 0; i + 1 < n; ++i) link(m, i, i + 1);
      m[n - 2][n - 1] = -2;  // alpha_n long
      break;
    case Series::D:
      for (int i = 0; i + 2 < n; ++i) link(m, i, i + 1);
      link(m, n - 3, n - 1);
      break;
    case Series::E:
      link(m, 0, 2);
      link(m, 1, 3);
      for (int i = 2; i + 1 < n; ++i) link(m, i, i + 1);
      break;
    case Series::F:
      link(m, 0, 1);
      link(m, 1, 2);
      link(m, 2, 3);
      m[2][1] = -2;
      break;
    case Series::G:
      link(m, 0, 1);
      m[0][1] = -3;  // alpha_1 short
      break;
  }
  return m;
}

bool rank_ok(Series s, int n) {
  switch (s) {
    case Series::A: return n >= 1;
    case Series::B: return n >= 2;
    case Series::C: return n >= 2;
    case Series::D: return n >= 4;
    case Series::E: return n >= 6 && n <= 8;
    case Series::F: return n == 4;
    case Series::G: return n == 2;
  }
  return false;
}

}  // namespace

CartanDatum CartanDatum::make(Series series, int rank) {
  if (!rank_ok(series, rank))
    throw InvalidArgument("invalid Cartan type " + std::string(1, static_cast<char>(series)) +
                          std::to_string(rank));
  return CartanDatum(series, rank, cartan_matrix_for(series, rank));
}

CartanDatum CartanDatum::make(char series, int rank) {
  const char s = static_cast<char>(std::toupper(static_cast<unsigned char>(series)));
  if (s < 'A' || s > 'G') throw InvalidArgument(std::string("unknown series ") + series);
  return make(static_cast<Series>(s), rank);
}

std::string CartanDatum::name() const {
  return std::string(1, static_cast<char>(series_)) + std::to_string(rank_);
}

// ---------------------------------------------------------------------------

Root Root::simple(int rank, int i) {
  std::vector<int> c(rank, 0);
  c[i] = 1;
  return Root(std::move(c));
}

int Root::height() const { return std::accumulate(coeffs_.begin(), coeffs_.end(), 0); }

bool Root::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](int c) { return c == 0; });
}

bool Root::is_positive() const {
  return !is_zero() && std::all_of(coeffs_.begin(), coeffs_.end(), [](int c) { return c >= 0; });
}

bool Root::is_negative() const {
  return !is_zero() && std::all_of(coeffs_.begin(), coeffs_.end(), [](int c) { return c <= 0; });
}

Root Root::operator-() const { return scaled(-1); }

Root Root::operator+(const Root& o) const {
  std::vector<int> c(coeffs_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coeffs_[i];
  return Root(std::move(c));
}

Root Root::operator-(const Root& o) const {
  std::vector<int> c(coeffs_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.coeffs_[i];
  return Root(std::move(c));
}

Root Root::scaled(int k) const {
  std::vector<int> c(coeffs_);
  for (auto& x : c) x *= k;
  return Root(std::move(c));
}

std::size_t RootHash::operator()(const Root& r) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (int c : r.coeffs()) h = (h ^ static_cast<std::size_t>(c + 64)) * 0x100000001b3ULL;
  return h;
}

int height(const Root& r, int j) {
  if (j < 0 || j >= r.rank()) throw InvalidArgument("simple-root index out of range");
  return r[j];
}

std::vector<int> support(const Root& r) {
  std::vector<int> s;
  for (int i = 0; i < r.rank(); ++i)
    if (r[i] != 0) s.push_back(i);
  return s;
}

std::string to_string(const Root& r) {
  std::string out = "[";
  for (int i = 0; i < r.rank(); ++i) {
    if (i) out += ",";
    out += std::to_string(r[i]);
  }
  return out + "]";
}

// ---------------------------------------------------------------------------

std::shared_ptr<const RootSystem> RootSystem::build(const CartanDatum& datum) {
  std::shared_ptr<RootSystem> rs(new RootSystem(datum));
  rs->generate();
  return rs;
}

void RootSystem::generate() {
  const int n = rank();
  const auto& a = datum_.cartan_matrix();

  // Symmetrizer: <alpha_i, alpha_j> = d_i a(i,j) with d_i = <alpha_i, alpha_i>/2.
  std::vector<Rational> d(n);
  std::vector<bool> seen(n, false);
  d[0] = 1;
  seen[0] = true;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int i = queue.front();
    queue.pop_front();
    for (int j = 0; j < n; ++j) {
      if (seen[j] || a[i][j] == 0 || i == j) continue;
      d[j] = d[i] * a[i][j] / a[j][i];
      seen[j] = true;
      queue.push_back(j);
    }
  }
  const Rational dmax = *std::max_element(d.begin(), d.end());
  for (auto& x : d) x /= dmax;
  form_.assign(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) form_[i][j] = d[i] * a[i][j];
  max_norm2_ = 2;
  form_inverse_ = *inverse(form_);

  // Grow Delta^+ level by level using root strings through the simple roots.
  std::vector<Root> all;
  for (int i = 0; i < n; ++i) {
    all.push_back(Root::simple(n, i));
    index_.emplace(all.back(), i);
  }
  std::size_t level_begin = 0;
  while (level_begin < all.size()) {
    const std::size_t level_end = all.size();
    for (std::size_t k = level_begin; k < level_end; ++k) {
      const Root beta = all[k];
      for (int i = 0; i < n; ++i) {
        const Root ai = Root::simple(n, i);
        int p = 0;
        while (index_.count(beta - ai.scaled(p + 1))) ++p;
        int pairing_value = 0;
        for (int j = 0; j < n; ++j) pairing_value += a[i][j] * beta[j];
        const int q = p - pairing_value;
        if (q > 0) {
          Root next = beta + ai;
          if (!index_.count(next)) {
            index_.emplace(next, static_cast<int>(all.size()));
            all.push_back(std::move(next));
          }
        }
      }
    }
    level_begin = level_end;
  }

  std::sort(all.begin(), all.end(), [](const Root& x, const Root& y) {
    if (x.height() != y.height()) return x.height() < y.height();
    return x.coeffs() > y.coeffs();
  });
  positive_ = std::move(all);
  index_.clear();
  for (int k = 0; k < num_positive(); ++k) index_.emplace(positive_[k], k);
}

std::optional<int> RootSystem::positive_index(const Root& r) const {
  auto it = index_.find(r);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool RootSystem::is_root(const Root& r) const {
  if (r.rank() != rank()) return false;
  return index_.count(r) || index_.count(-r);
}

Rational RootSystem::inner(const Root& a, const Root& b) const {
  Rational s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank(); ++j)
      if (b[j] != 0) s += a[i] * b[j] * form_[i][j];
  }
  return s;
}

std::vector<Rational> RootSystem::coroot(const Root& a) const {
  const Rational scale = Rational(2) / norm2(a);
  std::vector<Rational> out(rank());
  for (int i = 0; i < rank(); ++i) out[i] = scale * a[i];
  return out;
}

int RootSystem::pairing(const Root& b, const Root& a) const {
  const Rational v = 2 * inner(b, a) / norm2(a);
  if (v.get_den() != 1) throw DomainError("non-integral pairing " + to_string(b) + "," + to_string(a));
  return static_cast<int>(v.get_num().get_si());
}

Root RootSystem::reflect(const Root& b, const Root& a) const { return b - a.scaled(pairing(b, a)); }

std::vector<int> RootSystem::positive_roots_in(std::span<const int> simple_subset) const {
  std::vector<bool> allowed(rank(), false);
  for (int i : simple_subset) allowed[i] = true;
  std::vector<int> out;
  for (int k = 0; k < num_positive(); ++k) {
    bool ok = true;
    for (int i = 0; i < rank() && ok; ++i)
      if (positive_[k][i] != 0 && !allowed[i]) ok = false;
    if (ok) out.push_back(k);
  }
  return out;
}

Root RootSystem::highest_root_of(std::span<const int> connected_subset) const {
  const auto idx = positive_roots_in(connected_subset);
  if (idx.empty()) throw InvalidArgument("highest_root_of: empty subset");
  return positive_[idx.back()];
}

std::vector<int> connected_component(const RootSystem& rs, std::span<const int> subset, int node) {
  std::vector<bool> in(rs.rank(), false);
  for (int i : subset) in[i] = true;
  if (!in[node]) return {};
  std::vector<bool> seen(rs.rank(), false);
  std::vector<int> stack{node};
  seen[node] = true;
  std::vector<int> out;
  while (!stack.empty()) {
    const int i = stack.back();
    stack.pop_back();
    out.push_back(i);
    for (int j = 0; j < rs.rank(); ++j) {
      if (in[j] && !seen[j] && rs.adjacent(i, j)) {
        seen[j] = true;
        stack.push_back(j);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

ClassicalRealization ClassicalRealization::of(const RootSystem& rs, EpsilonOrder order) {
  const int n = rs.rank();
  const Series s = rs.datum().series();
  if (order == EpsilonOrder::Ascending && s != Series::A)
    throw InvalidArgument("ascending epsilon order is defined for type A only");
  ClassicalRealization cr;
  auto unit = [&](int dim, int i) {
    std::vector<Rational> v(dim);
    v[i] = 1;
    return v;
  };
  auto diff = [&](int dim, int i, int j) {
    auto v = unit(dim, i);
    v[j] -= 1;
    return v;
  };
  switch (s) {
    case Series::A:
      cr.dim_ = n + 1;
      for (int i = 0; i < n; ++i)
        cr.simple_images_.push_back(order == EpsilonOrder::Descending ? diff(n + 1, i, i + 1)
                                                                       : diff(n + 1, i + 1, i));
      break;
    case Series::B:
    case Series::C:
    case Series::D:
      cr.dim_ = n;
      for (int i = 0; i + 1 < n; ++i) cr.simple_images_.push_back(diff(n, i, i + 1));
      if (s == Series::B) {
        cr.simple_images_.push_back(unit(n, n - 1));
      } else if (s == Series::C) {
        auto v = unit(n, n - 1);
        v[n - 1] = 2;
        cr.simple_images_.push_back(v);
      } else {
        auto v = unit(n, n - 1);
        v[n - 2] = 1;
        cr.simple_images_.push_back(v);
      }
      break;
    default:
      throw InvalidArgument("no classical realization for series " + rs.datum().name());
  }
  return cr;
}

std::vector<Rational> ClassicalRealization::to_epsilon(const Root& r) const {
  std::vector<Rational> v(dim_);
  for (int i = 0; i < r.rank(); ++i) {
    if (r[i] == 0) continue;
    for (int k = 0; k < dim_; ++k) v[k] += r[i] * simple_images_[i][k];
  }
  return v;
}

std::optional<Root> ClassicalRealization::from_epsilon(std::span<const Rational> v) const {
  if (static_cast<int>(v.size()) != dim_) return std::nullopt;
  const int n = static_cast<int>(simple_images_.size());
  RationalMatrix m(dim_, std::vector<Rational>(n));
  for (int k = 0; k < dim_; ++k)
    for (int i = 0; i < n; ++i) m[k][i] = simple_images_[i][k];
  auto x = solve(m, std::vector<Rational>(v.begin(), v.end()));
  if (!x) return std::nullopt;
  std::vector<int> c(n);
  for (int i = 0; i < n; ++i) {
    if ((*x)[i].get_den() != 1) return std::nullopt;
    c[i] = static_cast<int>((*x)[i].get_num().get_si());
  }
  return Root(std::move(c));
}

std::vector<Rational> parse_epsilon(std::string_view text, int dimension) {
  std::vector<Rational> v(dimension);
  std::size_t pos = 0;
  auto fail = [&]() { throw InvalidArgument("malformed epsilon expression: " + std::string(text)); };
  auto skip_ws = [&]() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos == text.size()) fail();
  bool first = true;
  while (pos < text.size()) {
    int sign = 1;
    if (!first && text[pos] != '+' && text[pos] != '-') fail();
    first = false;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip_ws();
    }
    int coeff = 0;
    bool has_coeff = false;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      coeff = coeff * 10 + (text[pos] - '0');
      has_coeff = true;
      ++pos;
    }
    if (!has_coeff) coeff = 1;
    if (pos >= text.size() || (text[pos] != 'e' && text[pos] != 'E')) fail();
    ++pos;
    int index = 0;
    bool has_index = false;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      index = index * 10 + (text[pos] - '0');
      has_index = true;
      ++pos;
    }
    if (!has_index || index < 1 || index > dimension) fail();
    v[index - 1] += sign * coeff;
    skip_ws();
  }
  return v;
}

}  // namespace lieflag
