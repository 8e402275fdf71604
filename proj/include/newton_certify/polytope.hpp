#pragma once

#include <optional>
#include <vector>

#include "newton_certify/polynomial.hpp"
#include "newton_certify/rational.hpp"

namespace newton_certify {

/// Point of Z^n_{>=0}.
using LatticePoint = std::vector<int>;
using RationalPoint = std::vector<Rational>;

RationalPoint to_rational(const LatticePoint& p);

/// conv(generators), plus the orthant R^n_{>=0} when orthant_recession is set.
///
/// Generators are kept sorted and deduplicated. The zero-dimensional polytope
/// (n == 0, no generators) is the base case of the special-vertex reduction
/// and is the only value allowed to have an empty generator set.
class LatticePolytope {
 public:
  LatticePolytope(int n, std::vector<LatticePoint> generators, bool orthant_recession = false);

  static LatticePolytope zero_dimensional() { return LatticePolytope(); }

  int n() const noexcept { return n_; }
  const std::vector<LatticePoint>& generators() const noexcept { return generators_; }
  bool orthant_recession() const noexcept { return orthant_recession_; }

  friend bool operator==(const LatticePolytope&, const LatticePolytope&) = default;

 private:
  LatticePolytope() = default;

  int n_ = 0;
  std::vector<LatticePoint> generators_;
  bool orthant_recession_ = false;
};

/// sum_l weights[l] * points[l] + recession, with nonnegative weights summing
/// to one and a nonnegative recession vector. Validated on construction.
class ConvexCombination {
 public:
  ConvexCombination(std::vector<LatticePoint> points, std::vector<Rational> weights,
                    RationalPoint recession = {});

  const std::vector<LatticePoint>& points() const noexcept { return points_; }
  const std::vector<Rational>& weights() const noexcept { return weights_; }
  /// Empty for combinations without a recession part.
  const RationalPoint& recession() const noexcept { return recession_; }

  /// Recomputes the represented point.
  RationalPoint point() const;

 private:
  std::vector<LatticePoint> points_;
  std::vector<Rational> weights_;
  RationalPoint recession_;
};

/// The closed half-space <coeffs, x> >= rhs.
struct Halfspace {
  std::vector<Rational> coeffs;
  Rational rhs;

  Rational evaluate(const RationalPoint& x) const;
  bool contains(const RationalPoint& x) const { return evaluate(x) >= rhs; }
  bool contains(const LatticePoint& x) const { return contains(to_rational(x)); }
};

/// Outcome of a membership query. Exactly one of the two members is set: a
/// witness combination when the point is inside, otherwise a half-space that
/// contains the polytope (including its recession cone) but not the point.
struct Membership {
  std::optional<ConvexCombination> witness;
  std::optional<Halfspace> separation;

  bool contained() const noexcept { return witness.has_value(); }
};

/// Exact membership test by rational LP. Both possible outputs are verified by
/// substitution before they are returned. Throws Error on dimension mismatch.
Membership contains_point(const LatticePolytope& m, const RationalPoint& q);

/// Convex hull of the support of p, reduced to its vertices.
LatticePolytope newton_polytope(const SparsePolynomial& p);

/// Support hull plus the nonnegative orthant. Dominated generators and
/// generators that are not vertices of the polyhedron are dropped.
LatticePolytope newton_polyhedron(const SparsePolynomial& f);

/// Removes generators lying in the hull (plus recession cone) of the others.
LatticePolytope vertex_reduced(const LatticePolytope& m);

/// (2/n, ..., 2/n), the barycenter of the simplex 2*Delta.
RationalPoint barycenter(int n);

/// e_i + e_j, i.e. the exponent of x_i x_j (0-based indices).
LatticePoint simplex_point(int n, int i, int j);

/// True when p is nonnegative with coordinate sum 2.
bool in_double_simplex(const LatticePoint& p);

/// True when m has no recession cone and every generator lies in 2*Delta.
bool inside_double_simplex(const LatticePolytope& m);

/// All lattice points e_i + e_j contained in m, in ascending lexicographic
/// order. For polytopes inside 2*Delta this uses the fact that e_i + e_j is a
/// convex combination of lattice points of 2*Delta only as itself or as the
/// midpoint of 2e_i and 2e_j; otherwise each candidate is tested by LP.
std::vector<LatticePoint> double_simplex_lattice_points(const LatticePolytope& m);

}  // namespace newton_certify
