"""The two explicit curve families that attain the bounds."""

from __future__ import annotations

from ..poly import BiPoly
from .curves import FactoredCurve


def extremal_conic(i: int) -> BiPoly:
    """x + i*x^2 + y^2."""
    return BiPoly({(1, 0): 1, (2, 0): i, (0, 2): 1})


def gen_extremal(d: int) -> FactoredCurve:
    """Conics x + i*x^2 + y^2 (i = 1..floor(d/2)), preceded by x when d is odd.

    The product has degree d and Milnor number (d-1)^2 - floor(d/2).
    """
    if d < 2:
        raise ValueError(f"degree must be at least 2, got {d}")
    factors = [extremal_conic(i) for i in range(1, d // 2 + 1)]
    if d % 2:
        factors.insert(0, BiPoly.x())
    return FactoredCurve(tuple(factors))


def gen_irreducible_max(d: int) -> BiPoly:
    """x^(d-1) + y^d, irreducible with Milnor number (d-1)(d-2)."""
    if d < 2:
        raise ValueError(f"degree must be at least 2, got {d}")
    return BiPoly({(d - 1, 0): 1, (0, d): 1})
