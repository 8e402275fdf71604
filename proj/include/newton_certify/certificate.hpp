#pragma once

#include <cstdint>
#include <random>
#include <variant>
#include <vector>

#include "newton_certify/polytope.hpp"
#include "newton_certify/quadratic_form.hpp"
#include "newton_certify/stencil.hpp"

namespace newton_certify {

/// Proof that det B is not identically zero on the forms supported in M:
/// bits(i, sigma(i)) = 1 for all i.
struct MatchingCertificate {
  Permutation sigma;
};

/// Proof that every form supported in M is degenerate: a cover with
/// |I| + |J| < n and the half-space it induces, which holds on M but not at O.
struct CoverCertificate {
  VertexCover cover;
  Halfspace halfspace;
};

using Certificate = std::variant<MatchingCertificate, CoverCertificate>;

inline bool is_matching(const Certificate& c) { return std::holds_alternative<MatchingCertificate>(c); }

/// Re-checks a certificate against m by substitution. Returns false on any
/// violated condition.
bool verify_certificate(const LatticePolytope& m, const Certificate& c);

/// Decides generic nondegeneracy of forms supported in m (m inside 2*Delta,
/// nonempty) through the Koenig route: a perfect matching of the stencil, or
/// a small vertex cover. The outcome is cross-checked against the LP
/// membership of O and the certificate is verified before returning.
Certificate certify(const LatticePolytope& m);

/// Same decision through minimal polytopes: pick a minimal M' inside m,
/// peel special vertices off it, and finish with the alternating-cycle
/// matching on the remaining stencil, in which every row has exactly two
/// ones. When O is not in m, falls back to the Koenig cover.
Certificate certify_via_minimal(const LatticePolytope& m);

/// Matching read off a minimal polytope by the special-vertex recursion.
Permutation matching_from_minimal(const LatticePolytope& minimal);

/// O = sum_i (1/n) (e_i + e_sigma(i)); verified exactly.
ConvexCombination witness_O_from_matching(const Permutation& sigma, int n);

/// +1 or -1.
int permutation_sign(const Permutation& p);

/// Enumerates every permutation with the same multiset of unordered pairs
/// {i, sigma(i)} as sigma0 and reports whether all share sign(sigma0), so that
/// the monomial prod_i B_{i, sigma0(i)} survives in det B. Throws Error for
/// n > 8.
bool sign_consistency(const Permutation& sigma0, int n);

/// Symmetric form, zero exactly where stencil_of(m) is zero, other entries
/// drawn from mt19937_64(seed) as nonzero integers in [-10^6, 10^6] (upper
/// triangle, row-major order).
QuadraticForm sample_generic_form(const LatticePolytope& m, std::uint64_t seed);
QuadraticForm sample_generic_form(const Stencil& s, std::uint64_t seed);

/// Nonzero integer in [-bound, bound], by rejection on the raw generator
/// output so the stream is the same on every platform.
long long draw_nonzero(std::mt19937_64& rng, long long bound);

}  // namespace newton_certify
