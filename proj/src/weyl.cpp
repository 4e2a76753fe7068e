#include "lieflag/weyl.hpp"

#include <algorithm>
#include <stdexcept>

#include "lieflag/error.hpp"
#include "lieflag/linalg.hpp"

namespace lieflag {

// ---------------------------------------------------------------------------
// ParabolicSet

ParabolicSet::ParabolicSet(int rank, std::vector<int> indices) : rank_(rank), indices_(std::move(indices)) {
  for (int i : indices_)
    if (i < 0 || i >= rank_) throw InvalidArgument("parabolic index out of range: " + std::to_string(i + 1));
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
}

ParabolicSet ParabolicSet::full(int rank) {
  std::vector<int> all(rank);
  for (int i = 0; i < rank; ++i) all[i] = i;
  return ParabolicSet(rank, std::move(all));
}

ParabolicSet ParabolicSet::omit(int rank, int omitted) {
  if (omitted < 0 || omitted >= rank) throw InvalidArgument("omitted index out of range");
  std::vector<int> rest;
  for (int i = 0; i < rank; ++i)
    if (i != omitted) rest.push_back(i);
  return ParabolicSet(rank, std::move(rest));
}

bool ParabolicSet::contains(int i) const { return std::binary_search(indices_.begin(), indices_.end(), i); }

std::string to_string(const ParabolicSet& j) {
  std::string out = "{";
  for (std::size_t k = 0; k < j.indices().size(); ++k) {
    if (k) out += ",";
    out += std::to_string(j.indices()[k] + 1);
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// WeylElement

namespace {

IntMatrix identity_action(int n) {
  IntMatrix m(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  IntMatrix out(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

// Right multiplication by s_i: column c becomes col_c - a(i,c) col_i.
void right_reflect(IntMatrix& m, const CartanDatum& d, int i) {
  const int n = d.rank();
  for (int c = 0; c < n; ++c) {
    const int a = d.cartan(i, c);
    if (c == i || a == 0) continue;
    for (int r = 0; r < n; ++r) m[r][c] -= a * m[r][i];
  }
  for (int r = 0; r < n; ++r) m[r][i] = -m[r][i];
}

// w^{-1} = B^{-1} w^T B for the invariant Gram matrix B.
IntMatrix inverse_action(const RootSystem& rs, const IntMatrix& w) {
  const int n = rs.rank();
  const auto& b = rs.form();
  RationalMatrix wt(n, std::vector<Rational>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) wt[r][c] = w[c][r];
  const RationalMatrix prod = multiply(multiply(rs.form_inverse(), wt), b);
  IntMatrix out(n, std::vector<int>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out[r][c] = static_cast<int>(prod[r][c].get_num().get_si());
  return out;
}

bool column_negative(const IntMatrix& m, int c) {
  for (std::size_t r = 0; r < m.size(); ++r)
    if (m[r][c] != 0) return m[r][c] < 0;
  return false;
}

}  // namespace

WeylElement::WeylElement(RootSystemPtr rs, IntMatrix action) : rs_(std::move(rs)), action_(std::move(action)) {
  // Greedy smallest left descent: s_i w < w iff w^{-1}(alpha_i) < 0.
  IntMatrix inv = inverse_action(*rs_, action_);
  const int n = rs_->rank();
  for (;;) {
    int s = -1;
    for (int i = 0; i < n && s < 0; ++i)
      if (column_negative(inv, i)) s = i;
    if (s < 0) break;
    word_.push_back(s);
    right_reflect(inv, rs_->datum(), s);
  }
}

WeylElement WeylElement::identity(RootSystemPtr rs) {
  const int n = rs->rank();
  return WeylElement(std::move(rs), identity_action(n));
}

WeylElement WeylElement::simple_reflection(RootSystemPtr rs, int i) {
  if (i < 0 || i >= rs->rank()) throw InvalidArgument("simple reflection index out of range");
  IntMatrix m = identity_action(rs->rank());
  right_reflect(m, rs->datum(), i);
  return WeylElement(std::move(rs), std::move(m));
}

WeylElement WeylElement::from_word(RootSystemPtr rs, std::span<const int> word) {
  IntMatrix m = identity_action(rs->rank());
  for (int i : word) {
    if (i < 0 || i >= rs->rank()) throw InvalidArgument("word letter out of range");
    right_reflect(m, rs->datum(), i);
  }
  return WeylElement(std::move(rs), std::move(m));
}

WeylElement WeylElement::reflection(RootSystemPtr rs, const Root& beta) {
  if (!rs->is_root(beta)) throw InvalidArgument("reflection: not a root " + to_string(beta));
  const int n = rs->rank();
  IntMatrix m = identity_action(n);
  for (int c = 0; c < n; ++c) {
    const int p = rs->pairing(Root::simple(n, c), beta);
    for (int r = 0; r < n; ++r) m[r][c] -= p * beta[r];
  }
  return WeylElement(std::move(rs), std::move(m));
}

WeylElement WeylElement::from_action(RootSystemPtr rs, IntMatrix action) {
  return WeylElement(std::move(rs), std::move(action));
}

Root WeylElement::apply(const Root& r) const {
  const int n = static_cast<int>(action_.size());
  std::vector<int> out(n, 0);
  for (int c = 0; c < n; ++c) {
    if (r[c] == 0) continue;
    for (int row = 0; row < n; ++row) out[row] += action_[row][c] * r[c];
  }
  return Root(std::move(out));
}

bool operator==(const WeylElement& a, const WeylElement& b) {
  return a.rs_->datum() == b.rs_->datum() && a.action_ == b.action_;
}

WeylElement multiply(const WeylElement& u, const WeylElement& v) {
  if (!(u.root_system()->datum() == v.root_system()->datum()))
    throw InvalidArgument("multiply: elements of different root systems");
  return WeylElement::from_action(u.root_system(), matmul(u.action(), v.action()));
}

WeylElement operator*(const WeylElement& u, const WeylElement& v) { return multiply(u, v); }

WeylElement invert(const WeylElement& u) {
  return WeylElement::from_action(u.root_system(), inverse_action(*u.root_system(), u.action()));
}

int inversion_count(const WeylElement& u) {
  int count = 0;
  for (const Root& r : u.root_system()->positive_roots())
    if (u.apply(r).is_negative()) ++count;
  return count;
}

bool bruhat_leq(const WeylElement& u_in, const WeylElement& v_in) {
  if (!(u_in.root_system()->datum() == v_in.root_system()->datum()))
    throw InvalidArgument("bruhat_leq: elements of different root systems");
  const auto& rs = u_in.root_system();
  WeylElement u = u_in;
  std::vector<int> vword = v_in.word();
  std::size_t pos = 0;
  for (;;) {
    const int lv = static_cast<int>(vword.size() - pos);
    if (u.length() > lv) return false;
    if (u.length() == lv) return u == WeylElement::from_word(rs, std::span(vword).subspan(pos));
    const int s = vword[pos];
    WeylElement su = WeylElement::simple_reflection(rs, s) * u;
    if (su.length() < u.length()) u = std::move(su);
    ++pos;
  }
}

WeylElement longest_element(const RootSystemPtr& rs, const ParabolicSet& j) {
  WeylElement w = WeylElement::identity(rs);
  for (;;) {
    int ascent = -1;
    for (int i : j.indices()) {
      if (w.apply(Root::simple(rs->rank(), i)).is_positive()) {
        ascent = i;
        break;
      }
    }
    if (ascent < 0) return w;
    w = w * WeylElement::simple_reflection(rs, ascent);
  }
}

bool in_parabolic(const WeylElement& u, const ParabolicSet& j) {
  return std::all_of(u.word().begin(), u.word().end(), [&](int s) { return j.contains(s); });
}

bool is_min_rep(const WeylElement& u, const ParabolicSet& j) {
  const auto& rs = *u.root_system();
  for (int k : rs.positive_roots_in(j.indices()))
    if (!u.apply(rs.positive_root(k)).is_positive()) return false;
  return true;
}

bool is_max_rep(const WeylElement& u, const ParabolicSet& j) {
  const auto& rs = *u.root_system();
  for (int k : rs.positive_roots_in(j.indices()))
    if (!u.apply(rs.positive_root(k)).is_negative()) return false;
  return true;
}

std::uint64_t weyl_group_order(const CartanDatum& datum) {
  const int n = datum.rank();
  std::uint64_t fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  switch (datum.series()) {
    case Series::A: return fact * (n + 1);
    case Series::B:
    case Series::C: return (std::uint64_t{1} << n) * fact;
    case Series::D: return (std::uint64_t{1} << (n - 1)) * fact;
    case Series::E: return n == 6 ? 51840ULL : n == 7 ? 2903040ULL : 696729600ULL;
    case Series::F: return 1152;
    case Series::G: return 12;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// WeylGroup

std::string WeylGroup::key(const std::int8_t* action) const {
  return std::string(reinterpret_cast<const char*>(action), static_cast<std::size_t>(rank_ * rank_));
}

WeylGroup::WeylGroup(RootSystemPtr rs, std::uint64_t cap) : rs_(std::move(rs)), rank_(rs_->rank()) {
  const std::uint64_t order = weyl_group_order(rs_->datum());
  if (order > cap)
    throw CapExceeded("|W(" + rs_->datum().name() + ")| = " + std::to_string(order) + " exceeds cap " +
                      std::to_string(cap));
  const int n = rank_;
  const int n2 = n * n;
  const auto& cartan = rs_->datum();
  actions_.reserve(order * n2);
  length_.reserve(order);
  rmul_.reserve(order * n);

  std::vector<std::int8_t> buf(n2, 0);
  for (int i = 0; i < n; ++i) buf[i * n + i] = 1;
  actions_.insert(actions_.end(), buf.begin(), buf.end());
  length_.push_back(0);
  lookup_.emplace(key(buf.data()), 0);
  std::vector<Index> parent{0};
  std::vector<int> parent_gen{-1};

  for (Index w = 0; w < length_.size(); ++w) {
    for (int s = 0; s < n; ++s) {
      // Column c of w s_s is col_c - a(s,c) col_s.
      std::copy_n(actions_.begin() + static_cast<std::ptrdiff_t>(w) * n2, n2, buf.begin());
      for (int c = 0; c < n; ++c) {
        const int a = cartan.cartan(s, c);
        if (c == s || a == 0) continue;
        for (int r = 0; r < n; ++r) buf[r * n + c] = static_cast<std::int8_t>(buf[r * n + c] - a * buf[r * n + s]);
      }
      for (int r = 0; r < n; ++r) buf[r * n + s] = static_cast<std::int8_t>(-buf[r * n + s]);
      auto [it, inserted] = lookup_.try_emplace(key(buf.data()), static_cast<Index>(length_.size()));
      if (inserted) {
        actions_.insert(actions_.end(), buf.begin(), buf.end());
        length_.push_back(length_[w] + 1);
        parent.push_back(w);
        parent_gen.push_back(s);
      }
      rmul_.push_back(it->second);
    }
  }

  const std::size_t size = length_.size();
  if (size != order) throw std::logic_error("Weyl group enumeration produced wrong order");
  lmul_.assign(size * n, 0);
  for (Index w = 0; w < size; ++w) {
    const std::int8_t* act = actions_.data() + static_cast<std::ptrdiff_t>(w) * n2;
    for (int s = 0; s < n; ++s) {
      // Row s of s_s w is row_s - sum_j a(s,j) row_j.
      std::copy_n(act, n2, buf.begin());
      for (int c = 0; c < n; ++c) {
        int v = 0;
        for (int j = 0; j < n; ++j) v += cartan.cartan(s, j) * act[j * n + c];
        buf[s * n + c] = static_cast<std::int8_t>(act[s * n + c] - v);
      }
      lmul_[w * n + s] = lookup_.at(key(buf.data()));
    }
  }
  inverse_.assign(size, 0);
  for (Index w = 1; w < size; ++w) inverse_[w] = left_mul(parent_gen[w], inverse_[parent[w]]);
  longest_ = static_cast<Index>(size - 1);
}

WeylGroup::Index WeylGroup::multiply(Index u, Index v) const {
  for (int s : word(v)) u = right_mul(u, s);
  return u;
}

WeylGroup::Index WeylGroup::longest_of(const ParabolicSet& j) const {
  Index w = identity();
  for (;;) {
    bool grew = false;
    for (int s : j.indices()) {
      if (!is_right_descent(w, s)) {
        w = right_mul(w, s);
        grew = true;
      }
    }
    if (!grew) return w;
  }
}

std::vector<int> WeylGroup::word(Index w) const {
  std::vector<int> out;
  while (length(w) > 0) {
    for (int s = 0; s < rank_; ++s) {
      if (is_left_descent(s, w)) {
        out.push_back(s);
        w = left_mul(s, w);
        break;
      }
    }
  }
  return out;
}

WeylGroup::Index WeylGroup::from_word(std::span<const int> word) const {
  Index w = identity();
  for (int s : word) {
    if (s < 0 || s >= rank_) throw InvalidArgument("word letter out of range");
    w = right_mul(w, s);
  }
  return w;
}

WeylGroup::Index WeylGroup::index_of(const WeylElement& w) const {
  if (!(w.root_system()->datum() == rs_->datum())) throw InvalidArgument("index_of: foreign root system");
  std::vector<std::int8_t> buf(rank_ * rank_);
  for (int r = 0; r < rank_; ++r)
    for (int c = 0; c < rank_; ++c) buf[r * rank_ + c] = static_cast<std::int8_t>(w.action()[r][c]);
  return lookup_.at(key(buf.data()));
}

WeylElement WeylGroup::element(Index w) const {
  IntMatrix m(rank_, std::vector<int>(rank_));
  const std::int8_t* act = actions_.data() + static_cast<std::ptrdiff_t>(w) * rank_ * rank_;
  for (int r = 0; r < rank_; ++r)
    for (int c = 0; c < rank_; ++c) m[r][c] = act[r * rank_ + c];
  return WeylElement::from_action(rs_, std::move(m));
}

Root WeylGroup::apply(Index w, const Root& r) const {
  const std::int8_t* act = actions_.data() + static_cast<std::ptrdiff_t>(w) * rank_ * rank_;
  std::vector<int> out(rank_, 0);
  for (int c = 0; c < rank_; ++c) {
    if (r[c] == 0) continue;
    for (int row = 0; row < rank_; ++row) out[row] += act[row * rank_ + c] * r[c];
  }
  return Root(std::move(out));
}

bool WeylGroup::maps_to_positive(Index w, const Root& r) const {
  const std::int8_t* act = actions_.data() + static_cast<std::ptrdiff_t>(w) * rank_ * rank_;
  for (int row = 0; row < rank_; ++row) {
    int v = 0;
    for (int c = 0; c < rank_; ++c) v += act[row * rank_ + c] * r[c];
    if (v != 0) return v > 0;
  }
  return false;
}

bool WeylGroup::in_parabolic(Index w, const ParabolicSet& j) const {
  for (int s : word(w))
    if (!j.contains(s)) return false;
  return true;
}

bool WeylGroup::bruhat_leq(Index u, Index v) const {
  for (;;) {
    if (length(u) > length(v)) return false;
    if (length(u) == length(v)) return u == v;
    int s = 0;
    while (!is_left_descent(s, v)) ++s;
    if (is_left_descent(s, u)) u = left_mul(s, u);
    v = left_mul(s, v);
  }
}

std::vector<WeylGroup::Index> WeylGroup::parabolic_subgroup(const ParabolicSet& j) const {
  std::vector<Index> out{identity()};
  std::vector<bool> seen(size(), false);
  seen[identity()] = true;
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (int s : j.indices()) {
      const Index next = right_mul(out[k], s);
      if (!seen[next]) {
        seen[next] = true;
        out.push_back(next);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Cosets

namespace {

bool sends_all(const WeylGroup& w, WeylGroup::Index x, const std::vector<int>& roots, bool positive) {
  const auto& rs = *w.root_system();
  for (int k : roots)
    if (w.maps_to_positive(x, rs.positive_root(k)) != positive) return false;
  return true;
}

void sort_by_length_then_word(const WeylGroup& w, std::vector<WeylGroup::Index>& v) {
  std::vector<std::pair<std::pair<int, std::vector<int>>, WeylGroup::Index>> keyed;
  keyed.reserve(v.size());
  for (auto x : v) keyed.push_back({{w.length(x), w.word(x)}, x});
  std::sort(keyed.begin(), keyed.end());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = keyed[k].second;
}

}  // namespace

std::vector<WeylGroup::Index> min_coset_reps(const WeylGroup& w, const ParabolicSet& j) {
  const auto roots = w.root_system()->positive_roots_in(j.indices());
  std::vector<WeylGroup::Index> out;
  for (WeylGroup::Index x = 0; x < w.size(); ++x)
    if (sends_all(w, x, roots, true)) out.push_back(x);
  return out;
}

std::vector<WeylGroup::Index> max_coset_reps(const WeylGroup& w, const ParabolicSet& j) {
  const auto roots = w.root_system()->positive_roots_in(j.indices());
  std::vector<WeylGroup::Index> out;
  for (WeylGroup::Index x = 0; x < w.size(); ++x)
    if (sends_all(w, x, roots, false)) out.push_back(x);
  return out;
}

CosetTables coset_tables(const WeylGroup& w, const ParabolicSet& j) {
  auto mins = min_coset_reps(w, j);
  const auto maxs = max_coset_reps(w, j);
  const auto wj = w.parabolic_subgroup(j);
  if (mins.size() * wj.size() != w.size() || maxs.size() != mins.size())
    throw std::logic_error("coset_tables: representative count differs from |W|/|W_J|");

  const auto w0j = w.longest_of(j);
  const auto w0 = w.longest();
  std::vector<bool> is_max(w.size(), false);
  for (auto x : maxs) is_max[x] = true;
  std::vector<bool> hit_right(w.size(), false);
  std::vector<bool> hit_left(w.size(), false);
  for (auto v : mins) {
    const auto right = w.multiply(v, w0j);
    const auto left = w.multiply(w0, v);
    if (!is_max[right] || hit_right[right] || w.length(right) != w.length(v) + w.length(w0j))
      throw std::logic_error("coset_tables: v -> v w0^J is not a bijection onto W^J_max");
    if (!is_max[left] || hit_left[left] || w.length(left) != w.length(w0) - w.length(v))
      throw std::logic_error("coset_tables: v -> w0 v is not a bijection onto W^J_max");
    hit_right[right] = hit_left[left] = true;
  }

  sort_by_length_then_word(w, mins);
  CosetTables t{j, {}, {}, w.element(w0j), w.element(w0)};
  t.min_reps.reserve(mins.size());
  t.max_reps.reserve(mins.size());
  for (auto v : mins) {
    t.min_reps.push_back(w.element(v));
    t.max_reps.push_back(w.element(w.multiply(v, w0j)));
  }
  return t;
}

std::vector<WeylGroup::Index> double_coset_min_reps(const WeylGroup& w, const ParabolicSet& i,
                                                    const ParabolicSet& j) {
  std::vector<WeylGroup::Index> out;
  for (WeylGroup::Index x = 0; x < w.size(); ++x) {
    bool minimal = true;
    for (int s : i.indices())
      if (w.is_left_descent(s, x)) minimal = false;
    for (int s : j.indices())
      if (w.is_right_descent(x, s)) minimal = false;
    if (minimal) out.push_back(x);
  }
  return out;
}

std::vector<WeylElement> double_coset_min_reps(const RootSystemPtr& rs, const ParabolicSet& i,
                                               const ParabolicSet& j, std::uint64_t cap) {
  WeylGroup w(rs, cap);
  auto reps = double_coset_min_reps(w, i, j);
  sort_by_length_then_word(w, reps);
  std::vector<WeylElement> out;
  for (auto x : reps) out.push_back(w.element(x));
  return out;
}

WeylGroup::Index double_coset_min(const WeylGroup& w, WeylGroup::Index x, const ParabolicSet& i,
                                  const ParabolicSet& j) {
  for (;;) {
    bool moved = false;
    for (int s : i.indices()) {
      if (w.is_left_descent(s, x)) {
        x = w.left_mul(s, x);
        moved = true;
      }
    }
    for (int s : j.indices()) {
      if (w.is_right_descent(x, s)) {
        x = w.right_mul(x, s);
        moved = true;
      }
    }
    if (!moved) return x;
  }
}

ParabolicSet intersect_image(const WeylGroup& w, WeylGroup::Index x, const ParabolicSet& i,
                             const ParabolicSet& j) {
  const int n = w.rank();
  std::vector<int> out;
  for (int s : j.indices()) {
    const Root img = w.apply(x, Root::simple(n, s));
    for (int t : i.indices())
      if (img == Root::simple(n, t)) out.push_back(t);
  }
  return ParabolicSet(n, std::move(out));
}

namespace {

bool is_min_in(const WeylGroup& w, WeylGroup::Index x, const ParabolicSet& k) {
  for (int s : k.indices())
    if (w.is_right_descent(x, s)) return false;
  return true;
}

}  // namespace

MinFactorization factor_min(const WeylGroup& w, WeylGroup::Index x, const ParabolicSet& i,
                            const ParabolicSet& j) {
  if (!is_min_in(w, x, j)) throw DomainError("factor_min: element is not in W^J_min");
  const auto d = double_coset_min(w, x, i, j);
  const auto v = w.multiply(x, w.inverse(d));
  if (!w.in_parabolic(v, i) || !is_min_in(w, v, intersect_image(w, d, i, j)) ||
      w.length(x) != w.length(v) + w.length(d))
    throw std::logic_error("factor_min: factor constraints violated");
  return {v, d};
}

FullFactorization factor_full(const WeylGroup& w, WeylGroup::Index x, const ParabolicSet& i,
                              const ParabolicSet& j) {
  auto u = x;
  for (bool moved = true; moved;) {
    moved = false;
    for (int s : j.indices()) {
      if (w.is_right_descent(u, s)) {
        u = w.right_mul(u, s);
        moved = true;
      }
    }
  }
  const auto v2 = w.multiply(w.inverse(u), x);
  const auto [v1, d] = factor_min(w, u, i, j);
  return {v1, d, v2};
}

}  // namespace lieflag
