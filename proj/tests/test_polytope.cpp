#include <doctest.h>

#include <random>

#include "newton_certify/error.hpp"
#include "newton_certify/polynomial.hpp"
#include "newton_certify/polytope.hpp"
#include "oracles.hpp"

using namespace newton_certify;

namespace {

RationalPoint q(std::initializer_list<Rational> xs) { return RationalPoint(xs); }

void check_membership_certificate(const LatticePolytope& m, const RationalPoint& point, const Membership& r) {
  REQUIRE(r.witness.has_value() != r.separation.has_value());
  if (r.witness) {
    CHECK(r.witness->point() == point);
    for (const auto& p : r.witness->points())
      CHECK(std::find(m.generators().begin(), m.generators().end(), p) != m.generators().end());
  } else {
    for (const auto& g : m.generators()) CHECK(r.separation->contains(g));
    if (m.orthant_recession())
      for (const auto& c : r.separation->coeffs) CHECK(c >= 0);
    CHECK_FALSE(r.separation->contains(point));
  }
}

}  // namespace

TEST_CASE("newton_polytope examples") {
  CHECK(newton_polytope(parse_polynomial("x1^2 + x1*x2 + x2^2", 2)).generators() ==
        std::vector<LatticePoint>{{0, 2}, {2, 0}});
  CHECK(newton_polytope(parse_polynomial("x1*x2", 2)).generators() == std::vector<LatticePoint>{{1, 1}});
  LatticePolytope t = newton_polytope(parse_polynomial("x1*x2 + x1*x3 + x2*x3", 3));
  CHECK(t.generators() == std::vector<LatticePoint>{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  CHECK_FALSE(t.orthant_recession());
  CHECK_THROWS_AS(newton_polytope(SparsePolynomial(2)), Error);
}

TEST_CASE("newton_polyhedron examples") {
  LatticePolytope a = newton_polyhedron(parse_polynomial("x1^2 + x2^3", 2));
  CHECK(a.generators() == std::vector<LatticePoint>{{0, 3}, {2, 0}});
  CHECK(a.orthant_recession());
  CHECK(newton_polyhedron(parse_polynomial("x1^2 + x1^2*x2", 2)).generators() ==
        std::vector<LatticePoint>{{2, 0}});
  // (5,0) and (0,7) are not dominated by (1,1) and stay vertices.
  CHECK(newton_polyhedron(parse_polynomial("x1*x2 + x1^5 + x2^7", 2)).generators() ==
        std::vector<LatticePoint>{{0, 7}, {1, 1}, {5, 0}});
  // (2,2) is undominated but lies above the segment (4,0)-(0,4).
  CHECK(newton_polyhedron(parse_polynomial("x1^4 + x1^2*x2^2 + x2^4", 2)).generators() ==
        std::vector<LatticePoint>{{0, 4}, {4, 0}});
  CHECK_THROWS_AS(newton_polyhedron(SparsePolynomial(1)), Error);
}

TEST_CASE("newton polytope of a product with disjoint variables") {
  // (x1^2 + x2) * (x3^3 + x4^2): support is the product of supports.
  SparsePolynomial f = parse_polynomial("x1^2*x3^3 + x1^2*x4^2 + x2*x3^3 + x2*x4^2", 4);
  CHECK(newton_polytope(f).generators() ==
        std::vector<LatticePoint>{{0, 1, 0, 2}, {0, 1, 3, 0}, {2, 0, 0, 2}, {2, 0, 3, 0}});
}

TEST_CASE("barycenter") {
  CHECK(barycenter(2) == q({1, 1}));
  const Rational two_thirds = Rational(2) / 3, half = Rational(1) / 2;
  CHECK(barycenter(3) == q({two_thirds, two_thirds, two_thirds}));
  CHECK(barycenter(4) == q({half, half, half, half}));
}

TEST_CASE("contains_point examples") {
  SUBCASE("midpoint of a segment") {
    LatticePolytope m(2, {{2, 0}, {0, 2}});
    Membership r = contains_point(m, q({1, 1}));
    REQUIRE(r.contained());
    CHECK(r.witness->weights() == std::vector<Rational>{Rational(1) / 2, Rational(1) / 2});
    check_membership_certificate(m, q({1, 1}), r);
  }
  SUBCASE("barycenter of a triangle") {
    LatticePolytope m(3, {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
    Membership r = contains_point(m, barycenter(3));
    REQUIRE(r.contained());
    CHECK(r.witness->weights() == std::vector<Rational>(3, Rational(1) / 3));
  }
  SUBCASE("single point misses O") {
    LatticePolytope m(2, {{2, 0}});
    Membership r = contains_point(m, q({1, 1}));
    CHECK_FALSE(r.contained());
    check_membership_certificate(m, q({1, 1}), r);
  }
  SUBCASE("orthant recession") {
    LatticePolytope m(2, {{3, 0}, {0, 3}}, true);
    Membership inside = contains_point(m, q({2, 2}));
    REQUIRE(inside.contained());
    CHECK(inside.witness->point() == q({2, 2}));
    check_membership_certificate(m, q({1, 1}), contains_point(m, q({1, 1})));
    CHECK_FALSE(contains_point(m, q({1, 1})).contained());
  }
  SUBCASE("dimension mismatch") { CHECK_THROWS_AS(contains_point(LatticePolytope(2, {{1, 1}}), q({1})), Error); }
}

TEST_CASE("convex combinations are validated") {
  CHECK_THROWS_AS(ConvexCombination({{1, 0}, {0, 1}}, {Rational(1) / 2, Rational(1) / 3}), Error);
  CHECK_THROWS_AS(ConvexCombination({{1, 0}, {0, 1}}, {Rational(3) / 2, Rational(-1) / 2}), Error);
  ConvexCombination c({{2, 0}, {0, 2}}, {Rational(1) / 4, Rational(3) / 4}, {1, 0});
  CHECK(c.point() == q({Rational(3) / 2, Rational(3) / 2}));
}

TEST_CASE("contains_point agrees with Fourier-Motzkin, exhaustive n <= 4") {
  for (int n = 2; n <= 4; ++n) {
    const std::uint32_t count = 1u << (n * (n + 1) / 2);
    const RationalPoint o = barycenter(n);
    for (std::uint32_t mask = 1; mask < count; ++mask) {
      const std::vector<LatticePoint> pts = oracle::support_from_mask(n, mask);
      LatticePolytope m(n, pts);
      Membership r = contains_point(m, o);
      CHECK(r.contained() == oracle::fourier_motzkin_contains(pts, o));
      check_membership_certificate(m, o, r);
    }
  }
}

TEST_CASE("contains_point agrees with Fourier-Motzkin, random n = 5, 6") {
  std::mt19937_64 rng(17);
  for (int n = 5; n <= 6; ++n) {
    const std::vector<LatticePoint> all = oracle::double_simplex_points(n);
    const RationalPoint o = barycenter(n);
    int inside = 0;
    for (int trial = 0; trial < 150; ++trial) {
      std::vector<LatticePoint> pts;
      std::sample(all.begin(), all.end(), std::back_inserter(pts), 2 + trial % 7, rng);
      LatticePolytope m(n, pts);
      Membership r = contains_point(m, o);
      CHECK(r.contained() == oracle::fourier_motzkin_contains(pts, o));
      check_membership_certificate(m, o, r);
      inside += r.contained();
    }
    CHECK(inside > 0);
  }
}

TEST_CASE("contains_point with recession agrees with Fourier-Motzkin") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> coord(0, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 2;
    std::vector<LatticePoint> pts(1 + trial % 4, LatticePoint(n));
    for (auto& p : pts)
      for (auto& x : p) x = coord(rng);
    RationalPoint point(n);
    for (auto& x : point) x = Rational(coord(rng)) / 2;
    LatticePolytope m(n, pts, true);
    Membership r = contains_point(m, point);
    CHECK(r.contained() == oracle::fourier_motzkin_contains(pts, point, true));
    check_membership_certificate(m, point, r);
  }
}

TEST_CASE("lattice points of 2*Delta inside a polytope") {
  CHECK(double_simplex_lattice_points(LatticePolytope(2, {{2, 0}, {0, 2}})) ==
        std::vector<LatticePoint>{{0, 2}, {1, 1}, {2, 0}});
  for (int n = 2; n <= 4; ++n)
    for (std::uint32_t mask = 1; mask < (1u << (n * (n + 1) / 2)); mask += 3) {
      const auto pts = oracle::support_from_mask(n, mask);
      CHECK(double_simplex_lattice_points(LatticePolytope(n, pts)) == oracle::lattice_points_in_hull(n, pts));
    }
  // Orthant polyhedra go through the general test.
  CHECK(double_simplex_lattice_points(LatticePolytope(2, {{1, 0}}, true)) ==
        std::vector<LatticePoint>{{1, 1}, {2, 0}});
}

TEST_CASE("vertex reduction") {
  LatticePolytope m(2, {{0, 2}, {1, 1}, {2, 0}});
  CHECK(vertex_reduced(m).generators() == std::vector<LatticePoint>{{0, 2}, {2, 0}});
  LatticePolytope r(2, {{1, 1}, {2, 2}, {3, 0}}, true);
  CHECK(vertex_reduced(r).generators() == std::vector<LatticePoint>{{1, 1}, {3, 0}});
}
