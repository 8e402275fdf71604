"""Exact Newton polytope certificates for quadratic forms and Morse singularities.

Polytopes are passed around as JSON-compatible dicts:
``{"n": 3, "generators": [[1, 1, 0], [1, 0, 1]], "orthant_recession": False}``.
"""

import json

from . import _core
from ._core import Error, ParseError

__all__ = [
    "Error",
    "ParseError",
    "certify",
    "certify_via_minimal",
    "classify_support",
    "contains_o",
    "face",
    "is_morse",
    "milnor",
    "minimal_subpolytope",
    "newton",
    "polytope",
    "render",
    "run_cli",
    "sample_generic_form",
    "stencil",
    "verify_certificate",
]


def _dump(polytope):
    return polytope if isinstance(polytope, str) else json.dumps(polytope)


def render(poly, n):
    """Canonical form of a polynomial in x1..xn."""
    return _core.render(poly, n)


def polytope(n, points, orthant=False):
    """Normalized polytope dict (vertices only, sorted)."""
    return json.loads(_core.polytope(n, [list(p) for p in points], orthant))


def newton(poly, n, polyhedron=False):
    return json.loads(_core.newton(poly, n, polyhedron))


def contains_o(polytope):
    """Membership of O = (2/n, ..., 2/n), with a witness or a separating half-space."""
    return json.loads(_core.contains_o(_dump(polytope)))


def stencil(polytope):
    return json.loads(_core.stencil(_dump(polytope)))


def certify(polytope):
    return json.loads(_core.certify(_dump(polytope)))


def certify_via_minimal(polytope):
    return json.loads(_core.certify_via_minimal(_dump(polytope)))


def verify_certificate(polytope, certificate):
    return _core.verify_certificate(_dump(polytope), json.dumps(certificate))


def minimal_subpolytope(polytope):
    return json.loads(_core.minimal_subpolytope(_dump(polytope)))


def classify_support(polytope):
    return json.loads(_core.classify_support(_dump(polytope)))


def is_morse(poly, n):
    return _core.is_morse(poly, n)


def milnor(poly, n):
    """{"mu": int | "infinite", "conditional": True}."""
    return json.loads(_core.milnor(poly, n))


def face(poly, n, w):
    return _core.face(poly, n, [str(x) for x in w])


def sample_generic_form(polytope, seed):
    """Symmetric integer matrix as a list of rows of strings."""
    return _core.sample_generic_form(_dump(polytope), seed)


def run_cli(args, default_seed=0):
    """Runs the command-line front end in-process; returns (exit_code, document)."""
    code, out = _core.run_cli(list(args), default_seed)
    return code, json.loads(out) if out.strip().startswith("{") else out
