#include "wron/linalg.hpp"

#include <stdexcept>

namespace wron {

Rational determinant(RatMat m) {
  size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant: not square");
  Rational det = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

int rank(RatMat m) {
  if (m.empty()) return 0;
  size_t rows = m.size(), cols = m[0].size();
  size_t rk = 0;
  for (size_t col = 0; col < cols && rk < rows; ++col) {
    size_t piv = rk;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rk]);
    for (size_t r = rk + 1; r < rows; ++r) {
      if (m[r][col] == 0) continue;
      Rational f = m[r][col] / m[rk][col];
      for (size_t c = col; c < cols; ++c) m[r][c] -= f * m[rk][c];
    }
    ++rk;
  }
  return static_cast<int>(rk);
}

std::optional<LinearSolution> solve_linear(const RatMat& a, const RatVec& b) {
  size_t rows = a.size();
  if (b.size() != rows) throw std::invalid_argument("solve_linear: shape mismatch");
  size_t cols = rows == 0 ? 0 : a[0].size();

  RatMat m(rows, RatVec(cols + 1));
  for (size_t r = 0; r < rows; ++r) {
    if (a[r].size() != cols) throw std::invalid_argument("solve_linear: ragged matrix");
    for (size_t c = 0; c < cols; ++c) m[r][c] = a[r][c];
    m[r][cols] = b[r];
  }

  std::vector<size_t> pivot_col;
  size_t rk = 0;
  for (size_t col = 0; col < cols && rk < rows; ++col) {
    size_t piv = rk;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rk]);
    Rational inv = 1 / m[rk][col];
    for (size_t c = col; c <= cols; ++c) m[rk][c] *= inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == rk || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (size_t c = col; c <= cols; ++c) m[r][c] -= f * m[rk][c];
    }
    pivot_col.push_back(col);
    ++rk;
  }
  for (size_t r = rk; r < rows; ++r)
    if (m[r][cols] != 0) return std::nullopt;

  LinearSolution sol;
  sol.particular.assign(cols, 0);
  for (size_t i = 0; i < rk; ++i) sol.particular[pivot_col[i]] = m[i][cols];

  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivot_col) is_pivot[c] = true;
  for (size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(cols, 0);
    v[free] = 1;
    for (size_t i = 0; i < rk; ++i) v[pivot_col[i]] = -m[i][free];
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

}  // namespace wron
