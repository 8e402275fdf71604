#include "newton_certify/minimal.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "newton_certify/error.hpp"

namespace newton_certify {

namespace {

void require_inside_double_simplex(const LatticePolytope& m) {
  if (!inside_double_simplex(m)) throw Error("polytope is not contained in 2*Delta");
}

bool is_diagonal(const LatticePoint& p) {
  return std::any_of(p.begin(), p.end(), [](int c) { return c == 2; });
}

std::vector<int> support_indices(const LatticePoint& p) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(p.size()); ++i)
    if (p[i] > 0) out.push_back(i);
  return out;
}

}  // namespace

bool is_minimal(const LatticePolytope& m) {
  if (m.n() == 0) return true;
  require_inside_double_simplex(m);
  const RationalPoint o = barycenter(m.n());
  if (!contains_point(m, o).contained()) return false;
  const std::vector<LatticePoint> lattice = double_simplex_lattice_points(m);
  const LatticePolytope reduced = vertex_reduced(m);
  for (const auto& v : reduced.generators()) {
    std::vector<LatticePoint> rest;
    for (const auto& p : lattice)
      if (p != v) rest.push_back(p);
    if (rest.empty()) continue;
    if (contains_point(LatticePolytope(m.n(), rest), o).contained()) return false;
  }
  return true;
}

LatticePolytope minimal_subpolytope(const LatticePolytope& m) {
  require_inside_double_simplex(m);
  const int n = m.n();
  const RationalPoint o = barycenter(n);
  std::vector<LatticePoint> current = double_simplex_lattice_points(m);

  for (bool first = true;; first = false) {
    Membership mem = contains_point(LatticePolytope(n, current), o);
    if (!mem.contained()) {
      if (first) throw Error("polytope does not contain the barycenter O");
      throw std::logic_error("minimal_subpolytope lost the barycenter");
    }
    const ConvexCombination& w = *mem.witness;
    // `current` is sorted, so the first unused point is the lexicographically
    // smallest zero-weight point.
    auto unused = std::find_if(current.begin(), current.end(), [&](const LatticePoint& p) {
      return std::find(w.points().begin(), w.points().end(), p) == w.points().end();
    });
    if (unused != current.end()) {
      current.erase(unused);
      continue;
    }

    // All weights positive. Two diagonal points 2e_i, 2e_j would make e_i + e_j
    // a hidden lattice point; shift weight onto it.
    std::vector<std::size_t> diagonal;
    for (std::size_t l = 0; l < w.points().size(); ++l)
      if (is_diagonal(w.points()[l])) diagonal.push_back(l);
    if (diagonal.size() < 2) break;

    const LatticePoint& a = w.points()[diagonal[0]];
    const LatticePoint& b = w.points()[diagonal[1]];
    const Rational& wa = w.weights()[diagonal[0]];
    const Rational& wb = w.weights()[diagonal[1]];
    LatticePoint mid(n);
    for (int r = 0; r < n; ++r) mid[r] = (a[r] + b[r]) / 2;
    std::vector<LatticePoint> next;
    for (std::size_t l = 0; l < w.points().size(); ++l) {
      const LatticePoint& p = w.points()[l];
      if (p == a && wa <= wb) continue;
      if (p == b && wb <= wa) continue;
      next.push_back(p);
    }
    next.push_back(std::move(mid));
    std::sort(next.begin(), next.end());
    current = std::move(next);
  }
  return LatticePolytope(n, current);
}

bool is_special_vertex(const LatticePolytope& m, const LatticePoint& v, std::optional<int> index) {
  require_inside_double_simplex(m);
  if (static_cast<int>(v.size()) != m.n()) throw Error("vertex dimension mismatch");
  const std::vector<LatticePoint> lattice = double_simplex_lattice_points(m);
  if (std::find(lattice.begin(), lattice.end(), v) == lattice.end())
    throw Error("point is not a lattice point of the polytope");
  const std::vector<int> idx = support_indices(v);
  const int i = index.value_or(idx.front());
  if (std::find(idx.begin(), idx.end(), i) == idx.end())
    throw Error("index is not a coordinate of the vertex");
  return std::none_of(lattice.begin(), lattice.end(),
                      [&](const LatticePoint& p) { return p != v && p[i] > 0; });
}

SpecialReduction reduce_special(const LatticePolytope& m, const LatticePoint& v) {
  if (!is_minimal(m)) throw Error("polytope is not minimal");
  if (!is_special_vertex(m, v)) throw Error("vertex is not special");
  const std::vector<int> dropped = support_indices(v);
  const std::set<int> drop(dropped.begin(), dropped.end());
  const int n = m.n();
  const int reduced_n = n - static_cast<int>(dropped.size());

  std::vector<LatticePoint> rest;
  for (const auto& p : double_simplex_lattice_points(m)) {
    if (p == v) continue;
    LatticePoint q;
    for (int r = 0; r < n; ++r) {
      if (drop.count(r)) {
        // Minimality plus specialness rule this out.
        if (p[r] != 0) throw std::logic_error("special vertex shares a coordinate");
      } else {
        q.push_back(p[r]);
      }
    }
    rest.push_back(std::move(q));
  }
  if (reduced_n == 0) {
    if (!rest.empty()) throw std::logic_error("points left in the zero-dimensional reduction");
    return {LatticePolytope::zero_dimensional(), dropped};
  }
  if (rest.empty()) throw std::logic_error("special reduction left no points");
  return {LatticePolytope(reduced_n, std::move(rest)), dropped};
}

}  // namespace newton_certify
