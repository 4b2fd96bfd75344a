"""Exact tangent spaces of Hilbert schemes of points in three-space."""

import json
from fractions import Fraction

from . import _core
from ._core import (
    InfiniteQuotientError,
    InputError,
    NoHeftError,
    NotHomogeneousError,
    colength,
    commuting,
    groebner_basis,
    min_gens,
    tangent_dimension,
)

__all__ = [
    "InfiniteQuotientError",
    "InputError",
    "NoHeftError",
    "NotHomogeneousError",
    "colength",
    "commuting",
    "groebner_basis",
    "min_gens",
    "parity_scan",
    "superpotential",
    "tangent_dimension",
    "theory_checks",
    "verify",
    "verify_counterexample",
]


def verify_counterexample(order="grevlex"):
    return json.loads(_core.verify_counterexample(order))


def verify(vars, generators, degrees=None, order="grevlex", torus_row=None):
    return json.loads(_core.verify(list(vars), list(generators), degrees, order, torus_row))


def parity_scan(max_n):
    return json.loads(_core.parity_scan(max_n))


def superpotential(x, y, z):
    return Fraction(_core.superpotential(x, y, z))


def theory_checks(random_cases=25, seed=20231028):
    return json.loads(_core.theory_checks(random_cases, seed))
