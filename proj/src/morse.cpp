#include "newton_certify/morse.hpp"

#include <random>
#include <set>
#include <stdexcept>

#include "newton_certify/error.hpp"
#include "newton_certify/quadratic_form.hpp"

namespace newton_certify {

MorseVerdict classify_support(const LatticePolytope& m) {
  if (m.n() == 0) throw Error("cannot classify the zero-dimensional polytope");
  std::vector<LatticePoint> points = double_simplex_lattice_points(m);
  if (points.empty()) {
    CoverCertificate empty;
    empty.halfspace = separating_halfspace(empty.cover, m.n());
    return {MorseKind::NeverMorse, empty, {}};
  }
  Certificate cert = certify(LatticePolytope(m.n(), points));
  MorseKind kind = is_matching(cert) ? MorseKind::GenericallyMorse : MorseKind::NeverMorse;
  return {kind, std::move(cert), std::move(points)};
}

bool is_morse(const SparsePolynomial& f) { return !determinant(hessian_at_zero(f)).is_zero(); }

std::vector<GenericSample> genericity_gap_demo(const LatticePolytope& m,
                                               const std::vector<std::uint64_t>& seeds) {
  MorseVerdict verdict = classify_support(m);
  if (verdict.kind != MorseKind::GenericallyMorse)
    throw Error("support is not generically Morse");
  const int n = m.n();
  const LatticePolytope quadratic(n, verdict.restricted);

  std::set<LatticePoint> higher;
  for (const auto& g : m.generators()) {
    if (total_degree(g) >= 3) higher.insert(g);
    if (!m.orthant_recession()) continue;
    for (int l = 0; l < n; ++l) {
      LatticePoint h = g;
      ++h[l];
      if (total_degree(h) >= 3) higher.insert(std::move(h));
    }
  }

  std::vector<GenericSample> out;
  for (std::uint64_t seed : seeds) {
    SparsePolynomial f = to_polynomial(sample_generic_form(quadratic, seed));
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    for (const auto& h : higher) f.add_term(h, GaussianRational{draw_nonzero(rng, 1'000'000)});
    GaussianRational det = determinant(hessian_at_zero(f));
    bool morse = !det.is_zero();
    if (!morse) throw std::logic_error("generic sample with a degenerate Hessian");
    out.push_back({seed, std::move(f), std::move(det), morse});
  }
  return out;
}

}  // namespace newton_certify
