#include "newton_certify/lp.hpp"

#include <stdexcept>

#include "newton_certify/error.hpp"

namespace newton_certify::lp {

FeasibilityResult find_nonnegative_solution(const std::vector<std::vector<Rational>>& rows,
                                            const std::vector<Rational>& rhs) {
  const std::size_t m = rows.size();
  if (rhs.size() != m) throw Error("LP: right-hand side length mismatch");
  const std::size_t k = m == 0 ? 0 : rows[0].size();
  for (const auto& r : rows)
    if (r.size() != k) throw Error("LP: ragged constraint matrix");

  // Tableau columns: k structural, m artificial, then the right-hand side.
  const std::size_t width = k + m + 1;
  const std::size_t rhs_col = k + m;
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(width));
  std::vector<int> flip(m, 1);
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    flip[i] = rhs[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < k; ++j) t[i][j] = flip[i] < 0 ? Rational(-rows[i][j]) : rows[i][j];
    t[i][k + i] = 1;
    t[i][rhs_col] = flip[i] < 0 ? Rational(-rhs[i]) : rhs[i];
    basis[i] = k + i;
  }
  // Reduced costs of "minimize the sum of artificials".
  std::vector<Rational> cost(width);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) cost[j] -= t[i][j];
    cost[rhs_col] -= t[i][rhs_col];
  }

  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < rhs_col; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter == width) break;

    std::size_t leave = m;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][rhs_col] / t[i][enter];
      if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = std::move(ratio);
      }
    }
    // The phase-I objective is bounded below by zero.
    if (leave == m) throw std::logic_error("LP: unbounded phase-I objective");

    const Rational pivot = t[leave][enter];
    for (auto& v : t[leave]) v /= pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational factor = t[i][enter];
      for (std::size_t j = 0; j < width; ++j)
        if (t[leave][j] != 0) t[i][j] -= factor * t[leave][j];
    }
    if (cost[enter] != 0) {
      const Rational factor = cost[enter];
      for (std::size_t j = 0; j < width; ++j)
        if (t[leave][j] != 0) cost[j] -= factor * t[leave][j];
    }
    basis[leave] = enter;
  }

  FeasibilityResult result;
  result.feasible = cost[rhs_col] == 0;
  if (result.feasible) {
    result.solution.assign(k, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
      if (basis[i] < k) result.solution[basis[i]] = t[i][rhs_col];
  } else {
    // Phase-I duals are y_i = 1 - (reduced cost of artificial i); the Farkas
    // vector for the original rows is -D y.
    result.farkas.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      Rational y = 1 - cost[k + i];
      result.farkas[i] = flip[i] < 0 ? y : Rational(-y);
    }
  }
  return result;
}

}  // namespace newton_certify::lp
