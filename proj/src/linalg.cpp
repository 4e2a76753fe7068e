#include "lieflag/linalg.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>

namespace lieflag {

namespace {

// Gauss-Jordan in place; returns pivot columns.
std::vector<int> reduce(RationalMatrix& m, int ncols) {
  std::vector<int> pivots;
  int row = 0;
  const int nrows = static_cast<int>(m.size());
  for (int col = 0; col < ncols && row < nrows; ++col) {
    int pivot = -1;
    for (int r = row; r < nrows; ++r) {
      if (!is_zero(m[r][col])) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[row], m[pivot]);
    const Rational lead = m[row][col];
    for (auto& x : m[row]) x /= lead;
    for (int r = 0; r < nrows; ++r) {
      if (r == row || is_zero(m[r][col])) continue;
      const Rational factor = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c) m[r][c] -= factor * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int matrix_rank(RationalMatrix m) {
  if (m.empty()) return 0;
  return static_cast<int>(reduce(m, static_cast<int>(m.front().size())).size());
}

std::optional<std::vector<Rational>> solve(const RationalMatrix& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("solve: dimension mismatch");
  const int ncols = a.empty() ? 0 : static_cast<int>(a.front().size());
  RationalMatrix aug = a;
  for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(b[r]);
  const auto pivots = reduce(aug, ncols);
  for (std::size_t r = pivots.size(); r < aug.size(); ++r) {
    if (!is_zero(aug[r][ncols])) return std::nullopt;
  }
  std::vector<Rational> x(ncols);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][ncols];
  return x;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  const int n = static_cast<int>(m.size());
  RationalMatrix aug(n);
  for (int r = 0; r < n; ++r) {
    aug[r] = m[r];
    aug[r].resize(2 * n);
    aug[r][n + r] = 1;
  }
  const auto pivots = reduce(aug, n);
  if (static_cast<int>(pivots.size()) < n) return std::nullopt;
  RationalMatrix inv(n, std::vector<Rational>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) inv[r][c] = aug[r][n + c];
  return inv;
}

RationalMatrix identity_matrix(int n) {
  RationalMatrix id(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t n = a.size();
  const std::size_t k = b.size();
  const std::size_t m = b.empty() ? 0 : b.front().size();
  RationalMatrix out(n, std::vector<Rational>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (is_zero(a[i][t])) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][t] * b[t][j];
    }
  return out;
}

}  // namespace lieflag
