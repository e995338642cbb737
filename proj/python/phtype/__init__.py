"""Pseudo H-type Lie algebras: exact construction, tables and isomorphism certificates."""

import json
from fractions import Fraction

from . import _phtype
from ._phtype import (
    Algebra,
    UnsupportedSignature,
    base_algebra,
    build_sum,
    catalog_ids,
    construct,
    extend,
    min_module_dim,
    render_j_table,
    render_table,
    verify_admissible,
    verify_axioms,
    verify_clifford,
    verify_htype,
    adjoint_rank,
    run_acceptance,
)

__all__ = [
    "Algebra",
    "UnsupportedSignature",
    "base_algebra",
    "build_sum",
    "catalog_ids",
    "construct",
    "extend",
    "min_module_dim",
    "render_j_table",
    "render_table",
    "verify_admissible",
    "verify_axioms",
    "verify_clifford",
    "verify_htype",
    "adjoint_rank",
    "run_acceptance",
    "to_dict",
    "from_dict",
    "gram_det",
    "canonical_iso",
    "check",
    "sbg",
]


def to_dict(a):
    return json.loads(a.to_json())


def from_dict(d):
    return _phtype.from_json(json.dumps(d))


def gram_det(a, x):
    return Fraction(_phtype.gram_det(a, list(x)))


def canonical_iso(a):
    text = _phtype.canonical_iso(a)
    return None if text is None else json.loads(text)


def check(r1, s1, r2, s2, automorphism=False, anti=False, seed=1):
    """Returns (certificate dict, exit code) with 0 iso, 1 not iso, 2 inconclusive."""
    text, code = _phtype.check(r1, s1, r2, s2, automorphism, anti, seed)
    return json.loads(text), code


def sbg(a, samples=100, seed=1):
    return json.loads(_phtype.sbg(a, samples, seed))
