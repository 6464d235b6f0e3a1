"""Ideals of the four kinds of degree-2, genus -1 subschemes of P^3.

I: two skew lines.  II: a double line on a smooth quadric.  III: two
incident lines with an embedded point at the intersection.  IV: a planar
double line with an embedded point.  Each has Hilbert polynomial 2n + 2.
"""
from __future__ import annotations

from .errors import InputError
from .exact import QPoly, hilbert_function

SCHEME_VARS = ("x0", "x1", "x2", "x3")
SCHEME_TYPES = ("I", "II", "III", "IV")


def scheme_ideal(kind: str) -> list[QPoly]:
    x0, x1, x2, x3 = QPoly.gens(SCHEME_VARS)
    ideals = {
        "I": [x0 * x2, x0 * x3, x1 * x2, x1 * x3],
        "II": [x0**2, x0 * x1, x1**2, x0 * x2 + x1 * x3],
        "III": [x0**2, x0 * x1, x0 * x2, x1 * x2],
        "IV": [x0**2, x0 * x1, x1**2, x0 * x2],
    }
    try:
        return ideals[kind]
    except KeyError:
        raise InputError(f"unknown scheme type {kind!r}; expected one of {', '.join(SCHEME_TYPES)}") from None


def hilbert_values(kind: str, degrees) -> list[int]:
    gens = scheme_ideal(kind)
    return [hilbert_function(gens, n) for n in degrees]
