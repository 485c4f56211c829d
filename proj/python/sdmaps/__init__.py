"""Verification of SD maps f((x+y)/(x-y)) = (f(x)+f(y))/(f(x)-f(y))."""

import json

from . import _core
from ._core import (
    InternalInconsistency,
    NotPrime,
    ParseError,
    PreconditionError,
    SdError,
    integer_induction as _integer_induction,
    is_sd_power_map,
    published_symbolic_values,
    symbolic_sequence,
    u_constraint_survivors,
)

__all__ = [
    "InternalInconsistency",
    "NotPrime",
    "ParseError",
    "PreconditionError",
    "SdError",
    "classify",
    "integer_induction",
    "is_sd_power_map",
    "lattice_fix",
    "published_symbolic_values",
    "run_cli",
    "sign_contradiction",
    "symbolic_sequence",
    "u_constraint_survivors",
    "verify_automorphism_sd",
    "verify_complex",
]


def run_cli(*args):
    """Run the command line in-process. Returns (exit_code, stdout, stderr)."""
    return _core.run_cli([str(a) for a in args])


def classify(p, max_prime=10007):
    return json.loads(_core.classify(p, max_prime))


def integer_induction(n):
    return json.loads(_integer_induction(n))


def verify_automorphism_sd(d, map="identity", samples=500, seed=1):
    return json.loads(_core.verify_automorphism_sd(str(d), map, samples, seed))


def sign_contradiction(d, branch):
    return json.loads(_core.sign_contradiction(str(d), branch))


def lattice_fix(d, map="identity", m_bound=3, n_bound=3, order="row-major"):
    return json.loads(_core.lattice_fix(str(d), map, m_bound, n_bound, order))


def verify_complex(tol=1e-9, samples=1000, seed=1):
    return json.loads(_core.verify_complex(tol, samples, seed))
