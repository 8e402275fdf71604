#include "linalg.hpp"

#include <utility>

namespace newton_certify::detail {

RowEchelon row_reduce(RationalMatrix m, int cols) {
  RowEchelon out;
  std::size_t row = 0;
  for (int c = 0; c < cols && row < m.size(); ++c) {
    std::size_t pivot = row;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    const Rational lead = m[row][c];
    for (auto& v : m[row]) v /= lead;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (int k = 0; k < cols; ++k) m[r][k] -= f * m[row][k];
    }
    out.pivot_columns.push_back(c);
    ++row;
  }
  m.resize(row);
  out.rows = std::move(m);
  return out;
}

RationalMatrix nullspace(const RationalMatrix& m, int cols) {
  RowEchelon e = row_reduce(m, cols);
  std::vector<char> is_pivot(cols, 0);
  for (int c : e.pivot_columns) is_pivot[c] = 1;
  RationalMatrix basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < e.rows.size(); ++r) v[e.pivot_columns[r]] = -e.rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational det(RationalMatrix m) {
  const std::size_t n = m.size();
  Rational d = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      d = -d;
    }
    d *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      const Rational f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return d;
}

}  // namespace newton_certify::detail
