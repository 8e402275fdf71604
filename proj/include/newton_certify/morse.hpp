#pragma once

#include <cstdint>
#include <vector>

#include "newton_certify/certificate.hpp"
#include "newton_certify/polynomial.hpp"
#include "newton_certify/polytope.hpp"

namespace newton_certify {

enum class MorseKind { NeverMorse, GenericallyMorse };

/// NeverMorse carries a cover certificate, GenericallyMorse a matching. The
/// certificate refers to `restricted`, the hull of the lattice points of the
/// classified polytope inside 2*Delta (absent when there are none; the cover
/// is then empty and the half-space is 0 >= 2).
struct MorseVerdict {
  MorseKind kind;
  Certificate evidence;
  std::vector<LatticePoint> restricted;
};

/// Classifies the singularity at 0 of a generic f with N(f) inside m, from
/// the quadratic part alone: m is cut down to its lattice points in 2*Delta
/// and certified. Throws Error for the zero-dimensional polytope.
MorseVerdict classify_support(const LatticePolytope& m);

/// det of the Hessian at 0 is nonzero. Throws Error if f has a constant or
/// linear term.
bool is_morse(const SparsePolynomial& f);

struct GenericSample {
  std::uint64_t seed;
  SparsePolynomial f;
  GaussianRational hessian_determinant;
  bool morse;
};

/// For each seed: a generic form supported on m's lattice points in 2*Delta
/// plus seeded higher-order terms supported in m, checked with is_morse. A
/// non-Morse sample is an internal error (std::logic_error). Throws Error
/// unless classify_support(m) is GenericallyMorse.
std::vector<GenericSample> genericity_gap_demo(const LatticePolytope& m,
                                               const std::vector<std::uint64_t>& seeds);

}  // namespace newton_certify
