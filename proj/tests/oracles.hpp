#pragma once

// Slow, independent reference implementations used only by the tests.

#include <cstdint>
#include <vector>

#include "newton_certify/polytope.hpp"
#include "newton_certify/rational.hpp"
#include "newton_certify/stencil.hpp"

namespace oracle {

using newton_certify::GaussianRational;
using newton_certify::LatticePoint;
using newton_certify::Rational;
using newton_certify::RationalPoint;

/// sum over S_n of sign(sigma) prod_i a[i][sigma(i)].
GaussianRational permutation_determinant(const std::vector<std::vector<GaussianRational>>& a);

/// Membership of q in conv(points) (+ orthant) by eliminating the equality
/// constraints and then Fourier-Motzkin on the remaining nonnegativity
/// constraints.
bool fourier_motzkin_contains(const std::vector<LatticePoint>& points, const RationalPoint& q,
                              bool orthant = false);

/// Membership of q in conv(points) by Caratheodory: q lies in the hull of
/// some affinely independent subset, found by solving each square system.
bool caratheodory_contains(const std::vector<LatticePoint>& points, const RationalPoint& q);

/// All e_i + e_j in lexicographically ascending order.
std::vector<LatticePoint> double_simplex_points(int n);

/// Subset of double_simplex_points(n) selected by the bits of mask.
std::vector<LatticePoint> support_from_mask(int n, std::uint32_t mask);

/// Tries every permutation.
bool has_perfect_matching(const newton_certify::Stencil& s);

/// Largest matching by trying every partial assignment.
int maximum_matching_size(const newton_certify::Stencil& s);

/// Lattice points of 2*Delta inside conv(points), by Caratheodory.
std::vector<LatticePoint> lattice_points_in_hull(int n, const std::vector<LatticePoint>& points);

/// Definition-level check: O in conv(L) and every subset of the lattice
/// points L of conv(points) whose hull contains O contains every vertex.
bool is_minimal_by_enumeration(int n, const std::vector<LatticePoint>& points);

/// Area of closure(R^2_{>=0} \ (conv(g) + R^2_{>=0})) by counting cells of a
/// (1/m)-grid whose centers lie outside the polyhedron. Requires pure powers
/// on both axes.
Rational grid_area(const std::vector<LatticePoint>& g, int m);

/// Length of the region on axis `axis` by the same cell count.
Rational grid_axis_length(const std::vector<LatticePoint>& g, int axis, int m);

/// A + B + max(A, B) for axis intercepts A, B: a rational lower bound on the
/// perimeter of the 2-D region, since the diagram is at least as long as the
/// chord joining the intercepts.
Rational perimeter_lower_bound(const std::vector<LatticePoint>& g);

}  // namespace oracle
