#pragma once

#include <nlohmann/json.hpp>

#include "newton_certify/certificate.hpp"
#include "newton_certify/kouchnirenko.hpp"
#include "newton_certify/morse.hpp"
#include "newton_certify/polytope.hpp"
#include "newton_certify/stencil.hpp"

// Surface formats. Indices are 1-based; rationals are JSON integers when
// integral and "p/q" strings otherwise. Key order is fixed so output is
// byte-for-byte reproducible.
namespace newton_certify::json_io {

using Json = nlohmann::ordered_json;

Json rational(const Rational& r);
Rational parse_rational(const Json& j);

/// {"n": 3, "generators": [[1,1,0],[1,0,1]], "orthant_recession": false}
Json polytope(const LatticePolytope& m);
LatticePolytope parse_polytope(const Json& j);

/// {"points": [...], "weights": [...]} plus "recession" when present.
Json convex_combination(const ConvexCombination& c);

/// {"coeffs": [...], "rhs": r}, meaning <coeffs, x> >= rhs.
Json halfspace(const Halfspace& h);

/// {"kind":"matching","sigma":[2,3,1]} or
/// {"kind":"cover","I":[1],"J":[1],"halfspace":{"coeffs":[2,0,0],"rhs":2}}
Json certificate(const Certificate& c);
Certificate parse_certificate(const Json& j);

/// {"n": 2, "bits": [[1,0],[0,0]]}
Json stencil(const Stencil& s);

/// {"kind": "generically_morse" | "never_morse", "certificate": {...}}
Json verdict(const MorseVerdict& v);

/// {"mu": 4, "conditional": true} or {"mu": "infinite", "conditional": true}
Json milnor(const MilnorNumber& mu);

}  // namespace newton_certify::json_io
