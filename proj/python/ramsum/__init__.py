"""Ramanujan sums, weighted averages of them, and identity verification.

Rational results are returned as fractions.Fraction, big integers as int.
"""

import json

from ._core import *  # noqa: F401,F403
from ._core import DomainError, RangeError, BudgetError, InternalError, SchemaError
from ._core import run_suite_json


def run_suite(identities=(), **options):
    """Run a verification sweep and return the report as a dict.

    identities: iterable of tags; empty means every identity on its default
    grid. Options: k_max, r_max, m_max, n_max, arity_max, tuple_k_max,
    random_functions, pairs, tolerance, seed, threads, timing.
    """
    return json.loads(run_suite_json(list(identities), **options))


__all__ = [name for name in dir() if not name.startswith("_")]
