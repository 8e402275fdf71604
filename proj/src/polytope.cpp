#include "newton_certify/polytope.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "newton_certify/error.hpp"
#include "newton_certify/lp.hpp"

namespace newton_certify {

RationalPoint to_rational(const LatticePoint& p) { return RationalPoint(p.begin(), p.end()); }

LatticePolytope::LatticePolytope(int n, std::vector<LatticePoint> generators, bool orthant_recession)
    : n_(n), generators_(std::move(generators)), orthant_recession_(orthant_recession) {
  if (n < 1) throw Error("polytope dimension must be positive");
  if (generators_.empty()) throw Error("polytope needs at least one generator");
  for (const auto& g : generators_) {
    if (static_cast<int>(g.size()) != n)
      throw Error("generator has length " + std::to_string(g.size()) + ", expected " +
                  std::to_string(n));
    for (int c : g)
      if (c < 0) throw Error("generator outside the nonnegative orthant");
  }
  std::sort(generators_.begin(), generators_.end());
  generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());
}

ConvexCombination::ConvexCombination(std::vector<LatticePoint> points, std::vector<Rational> weights,
                                     RationalPoint recession)
    : points_(std::move(points)), weights_(std::move(weights)), recession_(std::move(recession)) {
  if (points_.empty()) throw Error("convex combination needs at least one point");
  if (points_.size() != weights_.size()) throw Error("convex combination: one weight per point");
  const std::size_t d = points_[0].size();
  for (const auto& p : points_)
    if (p.size() != d) throw Error("convex combination: points of different dimension");
  Rational total = 0;
  for (const auto& w : weights_) {
    if (w < 0) throw Error("convex combination: negative weight");
    total += w;
  }
  if (total != 1) throw Error("convex combination: weights sum to " + total.str());
  if (!recession_.empty()) {
    if (recession_.size() != d) throw Error("convex combination: recession vector dimension");
    for (const auto& r : recession_)
      if (r < 0) throw Error("convex combination: negative recession component");
  }
}

RationalPoint ConvexCombination::point() const {
  RationalPoint out = recession_.empty() ? RationalPoint(points_[0].size(), Rational(0)) : recession_;
  for (std::size_t l = 0; l < points_.size(); ++l)
    for (std::size_t r = 0; r < out.size(); ++r) out[r] += weights_[l] * points_[l][r];
  return out;
}

Rational Halfspace::evaluate(const RationalPoint& x) const {
  if (x.size() != coeffs.size()) throw Error("half-space: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += coeffs[i] * x[i];
  return s;
}

Membership contains_point(const LatticePolytope& m, const RationalPoint& q) {
  const int n = m.n();
  if (static_cast<int>(q.size()) != n)
    throw Error("point has dimension " + std::to_string(q.size()) + ", polytope has " +
                std::to_string(n));
  Membership out;
  if (n == 0) {
    // The zero-dimensional polytope is the single point ().
    out.witness.emplace(std::vector<LatticePoint>{LatticePoint{}}, std::vector<Rational>{1});
    return out;
  }
  const auto& gens = m.generators();
  const std::size_t k = gens.size();
  const std::size_t cols = k + (m.orthant_recession() ? n : 0);

  std::vector<std::vector<Rational>> rows(n + 1, std::vector<Rational>(cols));
  std::vector<Rational> rhs(n + 1);
  for (int r = 0; r < n; ++r) {
    for (std::size_t l = 0; l < k; ++l) rows[r][l] = gens[l][r];
    if (m.orthant_recession()) rows[r][k + r] = 1;
    rhs[r] = q[r];
  }
  for (std::size_t l = 0; l < k; ++l) rows[n][l] = 1;
  rhs[n] = 1;

  lp::FeasibilityResult res = lp::find_nonnegative_solution(rows, rhs);
  if (res.feasible) {
    std::vector<LatticePoint> pts;
    std::vector<Rational> weights;
    for (std::size_t l = 0; l < k; ++l) {
      if (res.solution[l] == 0) continue;
      pts.push_back(gens[l]);
      weights.push_back(res.solution[l]);
    }
    RationalPoint recession;
    if (m.orthant_recession()) recession.assign(res.solution.begin() + k, res.solution.end());
    ConvexCombination witness(std::move(pts), std::move(weights), std::move(recession));
    if (witness.point() != q) throw std::logic_error("membership witness does not reproduce the point");
    out.witness = std::move(witness);
    return out;
  }

  Halfspace sep;
  sep.coeffs.assign(res.farkas.begin(), res.farkas.begin() + n);
  sep.rhs = -res.farkas[n];
  for (const auto& g : gens)
    if (!sep.contains(g)) throw std::logic_error("separating half-space misses a generator");
  if (m.orthant_recession())
    for (const auto& c : sep.coeffs)
      if (c < 0) throw std::logic_error("separating half-space is not closed under the orthant");
  if (sep.contains(q)) throw std::logic_error("separating half-space contains the query point");
  out.separation = std::move(sep);
  return out;
}

LatticePolytope vertex_reduced(const LatticePolytope& m) {
  if (m.n() == 0) return m;
  std::vector<LatticePoint> current = m.generators();
  for (std::size_t idx = 0; idx < current.size() && current.size() > 1;) {
    std::vector<LatticePoint> others;
    others.reserve(current.size() - 1);
    for (std::size_t l = 0; l < current.size(); ++l)
      if (l != idx) others.push_back(current[l]);
    LatticePolytope rest(m.n(), others, m.orthant_recession());
    if (contains_point(rest, to_rational(current[idx])).contained()) {
      current.erase(current.begin() + static_cast<std::ptrdiff_t>(idx));
    } else {
      ++idx;
    }
  }
  return LatticePolytope(m.n(), std::move(current), m.orthant_recession());
}

LatticePolytope newton_polytope(const SparsePolynomial& p) {
  if (p.is_zero()) throw Error("the zero polynomial has no Newton polytope");
  return vertex_reduced(LatticePolytope(p.n_vars(), p.support(), false));
}

LatticePolytope newton_polyhedron(const SparsePolynomial& f) {
  if (f.is_zero()) throw Error("the zero polynomial has no Newton polyhedron");
  std::vector<LatticePoint> support = f.support();
  std::vector<LatticePoint> undominated;
  for (const auto& g : support) {
    bool dominated = false;
    for (const auto& h : support) {
      if (h == g) continue;
      bool le = true;
      for (std::size_t i = 0; i < g.size() && le; ++i) le = h[i] <= g[i];
      if (le) {
        dominated = true;
        break;
      }
    }
    if (!dominated) undominated.push_back(g);
  }
  return vertex_reduced(LatticePolytope(f.n_vars(), std::move(undominated), true));
}

RationalPoint barycenter(int n) {
  if (n < 1) throw Error("barycenter needs n >= 1");
  return RationalPoint(n, Rational(2, n));
}

LatticePoint simplex_point(int n, int i, int j) {
  if (i < 0 || j < 0 || i >= n || j >= n) throw Error("simplex point index out of range");
  LatticePoint p(n, 0);
  ++p[i];
  ++p[j];
  return p;
}

bool in_double_simplex(const LatticePoint& p) {
  int sum = 0;
  for (int c : p) {
    if (c < 0) return false;
    sum += c;
  }
  return sum == 2;
}

bool inside_double_simplex(const LatticePolytope& m) {
  if (m.orthant_recession()) return false;
  return std::all_of(m.generators().begin(), m.generators().end(), in_double_simplex);
}

std::vector<LatticePoint> double_simplex_lattice_points(const LatticePolytope& m) {
  const int n = m.n();
  std::vector<LatticePoint> out;
  if (inside_double_simplex(m)) {
    std::set<LatticePoint> gens(m.generators().begin(), m.generators().end());
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        LatticePoint p = simplex_point(n, i, j);
        bool in = gens.count(p) > 0 ||
                  (i != j && gens.count(simplex_point(n, i, i)) && gens.count(simplex_point(n, j, j)));
        if (in) out.push_back(std::move(p));
      }
    }
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        LatticePoint p = simplex_point(n, i, j);
        if (contains_point(m, to_rational(p)).contained()) out.push_back(std::move(p));
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace newton_certify
