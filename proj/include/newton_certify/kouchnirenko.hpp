#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "newton_certify/error.hpp"
#include "newton_certify/polynomial.hpp"
#include "newton_certify/polytope.hpp"

namespace newton_certify {

/// The complement of a Newton polyhedron in the orthant is unbounded: some
/// coordinate axis never meets the polyhedron.
class UnboundedRegionError : public Error {
 public:
  using Error::Error;
};

/// closure(R^n_{>=0} \ N): the cone from the origin over the compact faces of
/// N, triangulated. Each simplex lists n + 1 vertices, the origin first.
struct UnderDiagramRegion {
  int n;
  /// N itself, reduced to its vertices.
  LatticePolytope polyhedron;
  std::vector<std::vector<RationalPoint>> simplices;
};

/// True when every coordinate axis carries a generator of N, i.e. some
/// generator vanishes in all coordinates but one.
bool has_bounded_complement(const LatticePolytope& polyhedron);

/// Throws Error unless `polyhedron` has the orthant as recession cone, and
/// UnboundedRegionError when the complement is unbounded.
UnderDiagramRegion under_diagram_region(const LatticePolytope& polyhedron);

/// Pulling triangulation of conv(points): cone from the lexicographically
/// smallest point over the triangulated facets that avoid it. Works in the
/// affine hull, so lower-dimensional point sets are fine. Every simplex has
/// affine-dimension + 1 vertices.
std::vector<std::vector<RationalPoint>> pulling_triangulation(std::vector<RationalPoint> points);

/// |det(v_1 - v_0, ..., v_d - v_0)| / d! for a full-dimensional simplex in R^d.
Rational simplex_volume(const std::vector<RationalPoint>& simplex);

/// V[i] for i = 0..n: the sum of the i-volumes of the region cut by every
/// i-dimensional coordinate subspace. V[0] = 1 (the origin).
std::vector<Rational> volumes(const UnderDiagramRegion& region);

/// Milnor number of f at 0, or infinite (no value) when the region under the
/// Newton diagram is unbounded. Valid for f nondegenerate in Kouchnirenko's
/// sense, which is not checked here.
struct MilnorNumber {
  std::optional<std::int64_t> value;

  bool infinite() const noexcept { return !value.has_value(); }
};

/// n! V_n - (n-1)! V_{n-1} + ... + (-1)^{n-1} V_1 + (-1)^n, asserted to be a
/// nonnegative integer. Throws Error if f has a constant or linear term.
MilnorNumber milnor_number(const SparsePolynomial& f);

/// Alternating sum over a volume vector as returned by volumes().
Rational alternating_volume_sum(const std::vector<Rational>& v);

/// Terms of f whose exponent minimizes <w, k>, i.e. f restricted to the face
/// of N(f) with inner normal w. Throws Error unless every w_i > 0.
SparsePolynomial face_restriction(const SparsePolynomial& f, const std::vector<Rational>& w);

}  // namespace newton_certify
