#include "newton_certify/kouchnirenko.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "linalg.hpp"

namespace newton_certify {

namespace {

using detail::RationalMatrix;

Rational dot(const std::vector<Rational>& a, const RationalPoint& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RationalPoint minus(const RationalPoint& a, const RationalPoint& b) {
  RationalPoint d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

// Calls visit(indices) for every k-subset of {0..n-1}.
template <typename Visit>
void for_each_subset(int n, int k, Visit&& visit) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  for (;;) {
    visit(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

struct Hyperplane {
  std::vector<Rational> normal;
  Rational offset;
};

// Hyperplane through the d points pts[idx] of R^d, if they are affinely
// independent.
std::optional<Hyperplane> hyperplane_through(const std::vector<RationalPoint>& pts,
                                             const std::vector<int>& idx, int d) {
  RationalMatrix diffs;
  for (std::size_t k = 1; k < idx.size(); ++k) diffs.push_back(minus(pts[idx[k]], pts[idx[0]]));
  RationalMatrix ns = detail::nullspace(diffs, d);
  if (ns.size() != 1) return std::nullopt;
  Hyperplane h{ns[0], 0};
  h.offset = dot(h.normal, pts[idx[0]]);
  return h;
}

// Supporting hyperplanes of conv(pts) in R^d spanned by d of the points, as
// sorted index sets of the points on them; facets when pts is
// full-dimensional. Inner normals are reported through `normals` when
// requested. A hyperplane containing every point has no inner side; it is
// then oriented to have a nonnegative normal when possible.
std::vector<std::vector<int>> facets_full_dimensional(const std::vector<RationalPoint>& pts, int d,
                                                      std::vector<Hyperplane>* normals = nullptr) {
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> out;
  for_each_subset(static_cast<int>(pts.size()), d, [&](const std::vector<int>& idx) {
    auto h = hyperplane_through(pts, idx, d);
    if (!h) return;
    bool any_pos = false;
    bool any_neg = false;
    std::vector<int> on;
    for (int l = 0; l < static_cast<int>(pts.size()); ++l) {
      Rational s = dot(h->normal, pts[l]) - h->offset;
      if (s > 0) any_pos = true;
      if (s < 0) any_neg = true;
      if (s == 0) on.push_back(l);
    }
    if (any_pos && any_neg) return;
    bool flip = any_neg;
    if (!any_pos && !any_neg)
      flip = std::none_of(h->normal.begin(), h->normal.end(), [](const Rational& c) { return c > 0; });
    if (flip) {
      for (auto& c : h->normal) c = -c;
      h->offset = -h->offset;
    }
    if (!seen.insert(on).second) return;
    out.push_back(on);
    if (normals) normals->push_back(*h);
  });
  return out;
}

void require_singular_point(const SparsePolynomial& f) {
  for (const auto& [k, c] : f.terms())
    if (total_degree(k) < 2)
      throw Error(total_degree(k) == 0 ? "polynomial has a nonzero constant term"
                                       : "polynomial has a nonzero linear term");
}

}  // namespace

std::vector<std::vector<RationalPoint>> pulling_triangulation(std::vector<RationalPoint> points) {
  if (points.empty()) throw Error("cannot triangulate an empty point set");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  const int ambient = static_cast<int>(points[0].size());
  const RationalPoint& p0 = points[0];

  RationalMatrix diffs;
  for (std::size_t l = 1; l < points.size(); ++l) diffs.push_back(minus(points[l], p0));
  detail::RowEchelon e = detail::row_reduce(diffs, ambient);
  const int d = static_cast<int>(e.pivot_columns.size());
  if (d == 0) return {{p0}};

  // The pivot coordinates map the affine hull bijectively onto R^d.
  std::vector<RationalPoint> projected;
  for (const auto& p : points) {
    RationalPoint q;
    for (int c : e.pivot_columns) q.push_back(p[c]);
    projected.push_back(std::move(q));
  }

  std::vector<std::vector<RationalPoint>> out;
  for (const auto& facet : facets_full_dimensional(projected, d)) {
    if (facet.front() == 0) continue;  // contains the pulled point
    std::vector<RationalPoint> facet_points;
    for (int l : facet) facet_points.push_back(points[l]);
    for (auto& s : pulling_triangulation(std::move(facet_points))) {
      s.insert(s.begin(), p0);
      out.push_back(std::move(s));
    }
  }
  return out;
}

Rational simplex_volume(const std::vector<RationalPoint>& simplex) {
  const std::size_t d = simplex.size() - 1;
  RationalMatrix m;
  for (std::size_t k = 1; k <= d; ++k) {
    if (simplex[k].size() != d) throw Error("simplex is not full-dimensional in its ambient space");
    m.push_back(minus(simplex[k], simplex[0]));
  }
  Rational v = abs(detail::det(std::move(m)));
  for (std::size_t k = 2; k <= d; ++k) v /= static_cast<long>(k);
  return v;
}

bool has_bounded_complement(const LatticePolytope& polyhedron) {
  const int n = polyhedron.n();
  for (int axis = 0; axis < n; ++axis) {
    bool hit = std::any_of(polyhedron.generators().begin(), polyhedron.generators().end(),
                           [&](const LatticePoint& g) {
                             for (int r = 0; r < n; ++r)
                               if (r != axis && g[r] != 0) return false;
                             return true;
                           });
    if (!hit) return false;
  }
  return true;
}

UnderDiagramRegion under_diagram_region(const LatticePolytope& polyhedron) {
  if (!polyhedron.orthant_recession()) throw Error("expected a Newton polyhedron (orthant recession)");
  if (!has_bounded_complement(polyhedron))
    throw UnboundedRegionError("region under the Newton diagram is unbounded");
  const int n = polyhedron.n();
  UnderDiagramRegion region{n, vertex_reduced(polyhedron), {}};
  const auto& gens = region.polyhedron.generators();
  const LatticePoint origin(n, 0);
  if (std::find(gens.begin(), gens.end(), origin) != gens.end()) return region;

  std::vector<RationalPoint> pts;
  for (const auto& g : gens) pts.push_back(to_rational(g));
  std::vector<Hyperplane> normals;
  const auto facets = facets_full_dimensional(pts, n, &normals);
  for (std::size_t f = 0; f < facets.size(); ++f) {
    // Compact facets are exactly those with a strictly positive inner normal.
    bool compact = std::all_of(normals[f].normal.begin(), normals[f].normal.end(),
                               [](const Rational& c) { return c > 0; });
    if (!compact) continue;
    std::vector<RationalPoint> face;
    for (int l : facets[f]) face.push_back(pts[l]);
    for (auto& s : pulling_triangulation(std::move(face))) {
      if (static_cast<int>(s.size()) != n) throw std::logic_error("compact facet of wrong dimension");
      s.insert(s.begin(), RationalPoint(n, Rational(0)));
      region.simplices.push_back(std::move(s));
    }
  }
  return region;
}

std::vector<Rational> volumes(const UnderDiagramRegion& region) {
  const int n = region.n;
  std::vector<Rational> v(n + 1, Rational(0));
  v[0] = 1;
  for (const auto& s : region.simplices) v[n] += simplex_volume(s);
  for (int i = 1; i < n; ++i) {
    for_each_subset(n, i, [&](const std::vector<int>& coords) {
      std::vector<LatticePoint> restricted;
      for (const auto& g : region.polyhedron.generators()) {
        bool inside = true;
        for (int r = 0; r < n && inside; ++r)
          inside = g[r] == 0 || std::find(coords.begin(), coords.end(), r) != coords.end();
        if (!inside) continue;
        LatticePoint p;
        for (int c : coords) p.push_back(g[c]);
        restricted.push_back(std::move(p));
      }
      UnderDiagramRegion sub = under_diagram_region(LatticePolytope(i, std::move(restricted), true));
      for (const auto& s : sub.simplices) v[i] += simplex_volume(s);
    });
  }
  return v;
}

Rational alternating_volume_sum(const std::vector<Rational>& v) {
  const int n = static_cast<int>(v.size()) - 1;
  Rational total = 0;
  Rational factorial = 1;
  for (int i = 0; i <= n; ++i) {
    if (i > 0) factorial *= i;
    Rational term = factorial * v[i];
    total += (n - i) % 2 == 0 ? term : Rational(-term);
  }
  return total;
}

MilnorNumber milnor_number(const SparsePolynomial& f) {
  require_singular_point(f);
  const LatticePolytope polyhedron = newton_polyhedron(f);
  if (!has_bounded_complement(polyhedron)) return {};
  const Rational mu = alternating_volume_sum(volumes(under_diagram_region(polyhedron)));
  if (!is_integer(mu) || mu < 0) throw std::logic_error("Milnor number is not a nonnegative integer: " + mu.str());
  return {static_cast<std::int64_t>(boost::multiprecision::numerator(mu))};
}

SparsePolynomial face_restriction(const SparsePolynomial& f, const std::vector<Rational>& w) {
  if (static_cast<int>(w.size()) != f.n_vars()) throw Error("weight vector has the wrong length");
  for (const auto& c : w)
    if (c <= 0) throw Error("weights must be strictly positive");
  SparsePolynomial out(f.n_vars());
  if (f.is_zero()) return out;
  std::optional<Rational> best;
  for (const auto& [k, c] : f.terms()) {
    Rational v = dot(w, to_rational(k));
    if (!best || v < *best) best = v;
  }
  for (const auto& [k, c] : f.terms())
    if (dot(w, to_rational(k)) == *best) out.add_term(k, c);
  return out;
}

}  // namespace newton_certify
