#pragma once

#include <vector>

#include "newton_certify/rational.hpp"

namespace newton_certify::detail {

using RationalMatrix = std::vector<std::vector<Rational>>;

struct RowEchelon {
  RationalMatrix rows;            // reduced row echelon form, zero rows dropped
  std::vector<int> pivot_columns; // ascending
};

RowEchelon row_reduce(RationalMatrix m, int cols);

/// Basis of {x : m x = 0}.
RationalMatrix nullspace(const RationalMatrix& m, int cols);

/// Exact determinant of a small square matrix.
Rational det(RationalMatrix m);

}  // namespace newton_certify::detail
