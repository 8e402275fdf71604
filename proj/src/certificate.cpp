#include "newton_certify/certificate.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "newton_certify/error.hpp"
#include "newton_certify/minimal.hpp"

namespace newton_certify {

namespace {

void require_permutation(const Permutation& p, int n) {
  if (static_cast<int>(p.size()) != n) throw Error("permutation has the wrong length");
  std::vector<char> hit(n, 0);
  for (int v : p) {
    if (v < 0 || v >= n || hit[v]) throw Error("not a permutation");
    hit[v] = 1;
  }
}

void require_certifiable(const LatticePolytope& m) {
  if (m.n() == 0) throw Error("cannot certify the zero-dimensional polytope");
  if (!inside_double_simplex(m)) throw Error("polytope is not contained in 2*Delta");
}

bool contains_index(const std::vector<int>& v, int x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

CoverCertificate cover_certificate(const Stencil& s) {
  CoverCertificate c;
  c.cover = min_vertex_cover(s);
  c.halfspace = separating_halfspace(c.cover, s.n());
  return c;
}

// Every row of the stencil has exactly two ones: the cells form disjoint
// cycles alternating between row and column neighbours, and every other cell
// of each cycle gives a permutation.
Permutation alternating_cycle_matching(const Stencil& s) {
  const int n = s.n();
  std::vector<std::pair<int, int>> row_cells(n, {-1, -1});
  std::vector<std::pair<int, int>> col_cells(n, {-1, -1});
  for (int i = 0; i < n; ++i) {
    int count = 0;
    for (int j = 0; j < n; ++j) {
      if (!s(i, j)) continue;
      (count == 0 ? row_cells[i].first : row_cells[i].second) = j;
      (col_cells[j].first < 0 ? col_cells[j].first : col_cells[j].second) = i;
      ++count;
    }
    if (count != 2) throw std::logic_error("stencil row without exactly two ones in the base case");
  }
  Permutation sigma(n, -1);
  std::vector<char> visited(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int start_col : {row_cells[i].first, row_cells[i].second}) {
      if (visited[static_cast<std::size_t>(i) * n + start_col]) continue;
      int r = i;
      int c = start_col;
      bool take = true;
      bool row_step = true;
      do {
        visited[static_cast<std::size_t>(r) * n + c] = 1;
        if (take) sigma[r] = c;
        if (row_step) {
          c = row_cells[r].first == c ? row_cells[r].second : row_cells[r].first;
        } else {
          r = col_cells[c].first == r ? col_cells[c].second : col_cells[c].first;
        }
        row_step = !row_step;
        take = !take;
      } while (r != i || c != start_col);
      if (!take) throw std::logic_error("odd cycle in the stencil cell graph");
    }
  }
  return sigma;
}

void assign_from_minimal(const LatticePolytope& m, const std::vector<int>& labels, Permutation& sigma) {
  if (m.n() == 0) return;
  const std::vector<LatticePoint> lattice = double_simplex_lattice_points(m);
  for (const auto& v : lattice) {
    for (int idx = 0; idx < m.n(); ++idx) {
      if (v[idx] == 0 || !is_special_vertex(m, v, idx)) continue;
      int i = -1;
      int j = -1;
      for (int r = 0; r < m.n(); ++r) {
        if (v[r] == 2) i = j = r;
        if (v[r] == 1) (i < 0 ? i : j) = r;
      }
      sigma[labels[i]] = labels[j];
      sigma[labels[j]] = labels[i];
      SpecialReduction red = reduce_special(m, v);
      std::vector<int> rest;
      for (int r = 0; r < m.n(); ++r)
        if (!contains_index(red.dropped, r)) rest.push_back(labels[r]);
      assign_from_minimal(red.polytope, rest, sigma);
      return;
    }
  }
  Permutation local = alternating_cycle_matching(stencil_of(m));
  for (int r = 0; r < m.n(); ++r) sigma[labels[r]] = labels[local[r]];
}

}  // namespace

bool verify_certificate(const LatticePolytope& m, const Certificate& c) {
  require_certifiable(m);
  const int n = m.n();
  const Stencil s = stencil_of(m);
  if (const auto* mc = std::get_if<MatchingCertificate>(&c)) {
    if (static_cast<int>(mc->sigma.size()) != n) return false;
    std::vector<char> hit(n, 0);
    for (int i = 0; i < n; ++i) {
      int j = mc->sigma[i];
      if (j < 0 || j >= n || hit[j] || !s(i, j)) return false;
      hit[j] = 1;
    }
    return true;
  }
  const auto& cc = std::get<CoverCertificate>(c);
  if (static_cast<int>(cc.cover.size()) >= n) return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (s(i, j) && !contains_index(cc.cover.rows, i) && !contains_index(cc.cover.cols, j)) return false;
  const Halfspace& h = cc.halfspace;
  if (static_cast<int>(h.coeffs.size()) != n || h.rhs != 2) return false;
  for (int l = 0; l < n; ++l) {
    int expected = contains_index(cc.cover.rows, l) + contains_index(cc.cover.cols, l);
    if (h.coeffs[l] != expected) return false;
  }
  for (const auto& g : m.generators())
    if (!h.contains(g)) return false;
  for (const auto& p : double_simplex_lattice_points(m))
    if (!h.contains(p)) return false;
  return !h.contains(barycenter(n));
}

Certificate certify(const LatticePolytope& m) {
  require_certifiable(m);
  const Stencil s = stencil_of(m);
  const bool o_inside = contains_point(m, barycenter(m.n())).contained();
  Certificate out;
  if (auto sigma = find_matching(s)) {
    if (!o_inside) throw std::logic_error("perfect matching found but O lies outside the polytope");
    out = MatchingCertificate{std::move(*sigma)};
  } else {
    if (o_inside) throw std::logic_error("no perfect matching although O lies in the polytope");
    out = cover_certificate(s);
  }
  if (!verify_certificate(m, out)) throw std::logic_error("certificate failed verification");
  return out;
}

Permutation matching_from_minimal(const LatticePolytope& minimal) {
  Permutation sigma(minimal.n(), -1);
  std::vector<int> labels(minimal.n());
  std::iota(labels.begin(), labels.end(), 0);
  assign_from_minimal(minimal, labels, sigma);
  require_permutation(sigma, minimal.n());
  return sigma;
}

Certificate certify_via_minimal(const LatticePolytope& m) {
  require_certifiable(m);
  Certificate out;
  if (contains_point(m, barycenter(m.n())).contained()) {
    out = MatchingCertificate{matching_from_minimal(minimal_subpolytope(m))};
  } else {
    out = cover_certificate(stencil_of(m));
  }
  if (!verify_certificate(m, out)) throw std::logic_error("certificate failed verification");
  return out;
}

ConvexCombination witness_O_from_matching(const Permutation& sigma, int n) {
  if (n < 1) throw Error("dimension must be positive");
  require_permutation(sigma, n);
  std::vector<LatticePoint> pts;
  for (int i = 0; i < n; ++i) pts.push_back(simplex_point(n, i, sigma[i]));
  ConvexCombination c(std::move(pts), std::vector<Rational>(n, Rational(1, n)));
  if (c.point() != barycenter(n)) throw std::logic_error("matching witness does not reproduce O");
  return c;
}

int permutation_sign(const Permutation& p) {
  const int n = static_cast<int>(p.size());
  require_permutation(p, n);
  std::vector<char> seen(n, 0);
  int sign = 1;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

bool sign_consistency(const Permutation& sigma0, int n) {
  if (n < 1) throw Error("dimension must be positive");
  if (n > 8) throw Error("sign_consistency enumerates S_n and is limited to n <= 8");
  require_permutation(sigma0, n);
  auto pairs = [n](const Permutation& p) {
    std::vector<std::pair<int, int>> out(n);
    for (int i = 0; i < n; ++i) out[i] = {std::min(i, p[i]), std::max(i, p[i])};
    std::sort(out.begin(), out.end());
    return out;
  };
  const auto target = pairs(sigma0);
  const int sign0 = permutation_sign(sigma0);
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    if (pairs(p) == target && permutation_sign(p) != sign0) return false;
  } while (std::next_permutation(p.begin(), p.end()));
  return true;
}

long long draw_nonzero(std::mt19937_64& rng, long long bound) {
  if (bound < 1) throw Error("bound must be positive");
  const std::uint64_t span = 2 * static_cast<std::uint64_t>(bound) + 1;
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % span;
  for (;;) {
    std::uint64_t x = rng();
    if (x >= limit) continue;
    long long v = static_cast<long long>(x % span) - bound;
    if (v != 0) return v;
  }
}

QuadraticForm sample_generic_form(const Stencil& s, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  QuadraticForm b(s.n());
  for (int i = 0; i < s.n(); ++i)
    for (int j = i; j < s.n(); ++j)
      if (s(i, j)) b.set(i, j, GaussianRational{draw_nonzero(rng, 1'000'000)});
  return b;
}

QuadraticForm sample_generic_form(const LatticePolytope& m, std::uint64_t seed) {
  return sample_generic_form(stencil_of(m), seed);
}

}  // namespace newton_certify
