#include "idiag/linalg.hpp"

#include <utility>

namespace idiag::linalg {

std::vector<std::size_t> row_reduce(Matrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(Matrix m) { return row_reduce(m).size(); }

Rational determinant(Matrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  const std::size_t n = m.size();
  Matrix aug(n, Vector(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, Vector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

std::vector<Vector> nullspace(Matrix m, std::size_t cols) {
  auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector x(cols, 0);
    x[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m[r][free];
    basis.push_back(std::move(x));
  }
  return basis;
}

int affine_dimension(const std::vector<Vector>& points) {
  if (points.empty()) return -1;
  Matrix diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) {
    Vector d(points[i].size());
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = points[i][k] - points[0][k];
    diffs.push_back(std::move(d));
  }
  return static_cast<int>(rank(std::move(diffs)));
}

Matrix identity(std::size_t n) {
  Matrix m(n, Vector(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Vector multiply(const Matrix& m, const Vector& x) {
  Vector y(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) y[i] = dot(m[i], x);
  return y;
}

}  // namespace idiag::linalg
