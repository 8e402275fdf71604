#pragma once

#include <optional>
#include <vector>

#include "newton_certify/polytope.hpp"

namespace newton_certify {

/// A lattice polytope M inside 2*Delta is minimal when it contains the
/// barycenter O and no lattice polytope strictly inside M does. The
/// zero-dimensional polytope counts as minimal.
///
/// Checked as: O is in M, and for every vertex v of M the hull of the other
/// lattice points of M misses O.
bool is_minimal(const LatticePolytope& m);

/// A minimal lattice polytope M' inside m, found by expressing O over the
/// lattice points of m and repeatedly dropping zero-weight points
/// (lexicographically smallest first) and merging pairs of diagonal points
/// 2e_i, 2e_j into their midpoint e_i + e_j.
///
/// The result is a simplex with at most n lattice points, at most one of them
/// diagonal. Throws Error if m is not inside 2*Delta or misses O.
LatticePolytope minimal_subpolytope(const LatticePolytope& m);

/// v = e_i + e_j is special in m with respect to `index` (one of i, j) when no
/// other lattice point of m has a nonzero coordinate at `index`. Without an
/// index the smaller of i, j is used; for minimal m both choices agree.
/// Throws Error unless v is a lattice point of m inside 2*Delta.
bool is_special_vertex(const LatticePolytope& m, const LatticePoint& v,
                       std::optional<int> index = std::nullopt);

struct SpecialReduction {
  /// Hull of the remaining lattice points, in the coordinates that survive.
  LatticePolytope polytope;
  /// 0-based coordinates removed from the ambient space, ascending.
  std::vector<int> dropped;
};

/// Removes a special vertex e_i + e_j from a minimal polytope and projects
/// the rest onto {x_i = x_j = 0}. The result is minimal in the smaller
/// simplex; it is zero-dimensional when no coordinates survive.
/// Throws Error when m is not minimal or v is not special.
SpecialReduction reduce_special(const LatticePolytope& m, const LatticePoint& v);

}  // namespace newton_certify
