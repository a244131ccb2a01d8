"""Local invariants of plane curves at the origin."""

from __future__ import annotations

from dataclasses import dataclass

from .extnat import INFINITY, ExtNat
from .gcd import certified_coprime, gcd_bivariate, squarefree_part_binary
from .kernels import fulton
from .poly import BinaryForm, BiPoly


@dataclass(frozen=True)
class TangentData:
    cone: BinaryForm
    distinct_count: int
    order: int


def _require_nonzero(*polys: BiPoly) -> None:
    for p in polys:
        if p.is_zero():
            raise ValueError("the zero polynomial is not a curve")


def _require_through_origin(*polys: BiPoly) -> None:
    _require_nonzero(*polys)
    for p in polys:
        if not p.vanishes_at_origin():
            raise ValueError(f"curve {p} does not pass through the origin")


def intersection_multiplicity(f: BiPoly, g: BiPoly) -> ExtNat:
    """Local intersection number i_0(f, g) of two curves at the origin.

    Returns ∞ when f and g share a component through the origin, otherwise
    the dimension of the local quotient by (f, g), computed by Fulton's
    reduction on primitive integer multiples of the inputs.
    """
    _require_nonzero(f, g)
    if not f.vanishes_at_origin() or not g.vanishes_at_origin():
        return ExtNat(0)
    if not certified_coprime(f, g) and gcd_bivariate(f, g).vanishes_at_origin():
        return INFINITY
    return ExtNat(fulton(f.integer_terms(), g.integer_terms(), f.degree * g.degree))


def milnor_number(f: BiPoly) -> ExtNat:
    """Milnor number of the curve f = 0 at the origin.

    Zero when the origin is a smooth point or not on the curve; ∞ for a
    non-isolated singularity (the partials share a component through 0).
    """
    if f.is_zero() or f.is_constant():
        raise ValueError("Milnor number needs a nonconstant polynomial")
    if not f.vanishes_at_origin():
        return ExtNat(0)
    fx, fy = f.partial("x"), f.partial("y")
    if fx.is_zero() or fy.is_zero():
        other = fy if fx.is_zero() else fx
        return INFINITY if other.vanishes_at_origin() else ExtNat(0)
    return intersection_multiplicity(fx, fy)


def tangent_data(f: BiPoly) -> TangentData:
    _require_through_origin(f)
    cone = f.lowest_form()
    return TangentData(cone, squarefree_part_binary(cone).degree, cone.degree)


def distinct_tangent_count(f: BiPoly) -> int:
    return tangent_data(f).distinct_count


def shares_common_tangent(f: BiPoly, g: BiPoly) -> bool:
    _require_through_origin(f, g)
    return not gcd_bivariate(f.lowest_form().form, g.lowest_form().form).is_constant()


def is_transverse(f: BiPoly, g: BiPoly) -> bool:
    return not shares_common_tangent(f, g)


def is_tangent_line(f: BiPoly, line: BiPoly) -> bool:
    """True iff the line through 0 meets f = 0 there with multiplicity > ord_0 f.

    A line that is a component of the curve has i_0 = ∞ and counts as tangent.
    """
    if line.is_zero() or line.degree != 1 or not line.is_homogeneous():
        raise ValueError(f"{line} is not a nonzero homogeneous linear form")
    _require_through_origin(f)
    return intersection_multiplicity(f, line) > f.order()
