"""Adjacency spectra, closed-blowup lower bounds on c_k and extremal search."""

import json

from ._core import (
    DEFAULT_SEED,
    ConsistencyError,
    InfeasibleParameters,
    NumericError,
    ParseError,
    TableMismatch,
    eigenvalues,
    graph6_decode,
    graph6_encode,
    nikiforov_upper,
    reference_lower,
)
from . import _core

__all__ = [
    "DEFAULT_SEED",
    "ConsistencyError",
    "InfeasibleParameters",
    "NumericError",
    "ParseError",
    "TableMismatch",
    "certify",
    "eigenvalues",
    "exhaustive",
    "graph6_decode",
    "graph6_encode",
    "nikiforov_upper",
    "recheck",
    "reference_lower",
    "search",
    "spectrum",
    "table",
    "verify",
]


def spectrum(expr, numeric=False):
    """Spectrum of a graph expression as {"name", "n", "exact", "spectrum"}.

    Exact values are strings such as "sqrt(5)"; numeric ones are floats.
    """
    return json.loads(_core._spectrum_json(expr, numeric))


def certify(expr, k):
    """Limit-ratio certificate for c_k from the closed blowups of `expr`."""
    return json.loads(_core._certify_json(expr, k))


def recheck(certificate):
    """Re-derive a certificate dict; raises ConsistencyError on disagreement."""
    return json.loads(_core._recheck_json(json.dumps(certificate)))


def table(k_min=4, k_max=24):
    return json.loads(_core._table_json(k_min, k_max))


def exhaustive(k, n):
    return json.loads(_core._exhaustive_json(k, n))


def search(k, n, method="anneal", seed=DEFAULT_SEED, budget=100000, restarts=1):
    return json.loads(_core._search_json(k, n, method, seed, budget, restarts))


def verify():
    return json.loads(_core._verify_json())
