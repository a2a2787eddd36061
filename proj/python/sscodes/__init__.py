"""Separable and strongly separable codes.

Codes, caps and observations are passed as the text of their file formats.
Results come back as dicts; codeword indices in them are 1-based.
"""

import json

from . import _core
from ._core import InvalidArgument, ParseError, ResourceLimit

__all__ = [
    "InvalidArgument",
    "ParseError",
    "ResourceLimit",
    "verify",
    "bounds",
    "search",
    "trace",
    "build_ssc",
    "capset",
    "canonical_form",
]


def verify(code, property, t, method=None, threads=1):
    return json.loads(_core.verify_json(code, property, t, method, threads))


def bounds(t, n, q, certified=None):
    return json.loads(_core.bounds_json(t, n, q, certified))


def search(t, n, q, property, budget=50_000_000):
    return json.loads(_core.search_json(t, n, q, property, budget))


def trace(code, observation, t):
    return json.loads(_core.trace_json(code, observation, t))


def build_ssc(q1, n, cap=None):
    """Returns {"code": code file text, "provenance": {...}}."""
    return json.loads(_core.build_ssc_json(q1, n, cap))


def capset(q1, n, method="canonical", seed=0, budget=50_000_000):
    """method: "exact", "canonical", "parabola" or "random"."""
    return json.loads(_core.capset_json(q1, n, method, seed, budget))


def canonical_form(code):
    return _core.canonical_form(code)
