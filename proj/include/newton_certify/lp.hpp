#pragma once

#include <vector>

#include "newton_certify/rational.hpp"

namespace newton_certify::lp {

struct FeasibilityResult {
  bool feasible = false;
  /// A basic solution x >= 0 of A x = b when feasible.
  std::vector<Rational> solution;
  /// When infeasible, y with y^T A >= 0 componentwise and y^T b < 0.
  std::vector<Rational> farkas;
};

/// Decides whether {x >= 0 : A x = b} is nonempty, by the phase-I simplex
/// method over the rationals with Bland's anti-cycling rule. `rows` holds A
/// row by row; every row must have the same length.
FeasibilityResult find_nonnegative_solution(const std::vector<std::vector<Rational>>& rows,
                                            const std::vector<Rational>& rhs);

}  // namespace newton_certify::lp
