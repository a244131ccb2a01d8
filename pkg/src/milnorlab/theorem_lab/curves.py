"""Curves given as explicit products of components through the origin."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable

from ..extnat import ExtNat
from ..gcd import are_coprime, gcd_bivariate, is_squarefree
from ..local import intersection_multiplicity, milnor_number, tangent_data, TangentData
from ..poly import BiPoly

VERIFIED_LINEAR = "verified_linear"
VERIFIED_CONIC = "verified_conic"
ASSUMED = "assumed"
REDUCIBLE = "reducible"


class NonIsolatedSingularity(ValueError):
    """The factors share a component or repeat one, so mu_0 is infinite."""


def conic_matrix(f: BiPoly) -> list[list[Fraction]]:
    """Symmetric 3x3 matrix of a polynomial of degree <= 2 (homogenized)."""
    c = f.coeff
    h = Fraction(1, 2)
    return [
        [c(2, 0), h * c(1, 1), h * c(1, 0)],
        [h * c(1, 1), c(0, 2), h * c(0, 1)],
        [h * c(1, 0), h * c(0, 1), c(0, 0)],
    ]


def _det3(m: list[list[Fraction]]) -> Fraction:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def is_irreducible_conic(f: BiPoly) -> bool:
    """A degree-2 polynomial is irreducible over C iff its conic matrix has rank 3."""
    return f.degree == 2 and _det3(conic_matrix(f)) != 0


def irreducibility_status(f: BiPoly) -> str:
    """How much is known about irreducibility of ``f`` over C.

    Lines and conics are decided exactly.  Higher degrees are ``assumed``
    unless an obvious splitting is found: a homogeneous form of degree >= 2,
    or a cubic q + c (q, c forms of degree 2, 3) whose parts share a line.
    """
    d = f.degree
    if d is None or d == 0:
        raise ValueError("constant polynomial has no irreducibility status")
    if d == 1:
        return VERIFIED_LINEAR
    if d == 2:
        return VERIFIED_CONIC if is_irreducible_conic(f) else REDUCIBLE
    if f.is_homogeneous():
        return REDUCIBLE
    if d == 3 and f.vanishes_at_origin() and f.order() == 2:
        q, c = f.homogeneous_part(2), f.homogeneous_part(3)
        if not gcd_bivariate(q, c).is_constant():
            return REDUCIBLE
    return ASSUMED


def has_one_local_component(f: BiPoly) -> bool:
    """Certify that exactly one component of f = 0 (over C) passes through 0.

    True for a smooth point, an irreducible conic, and a cubic of order 2
    that is not split by a common line of its graded parts (a rational cubic
    through 0 that splits over C must contain a line through 0).  False
    means "not certified".
    """
    if not f.vanishes_at_origin() or f.is_zero():
        return False
    if f.order() == 1:
        return True
    status = irreducibility_status(f)
    if status in (VERIFIED_LINEAR, VERIFIED_CONIC):
        return True
    return f.degree == 3 and f.order() == 2 and status != REDUCIBLE


def split_units(polys: Iterable[BiPoly]) -> tuple[list[BiPoly], list[BiPoly]]:
    """Separate factors through the origin from units of the local ring."""
    through, units = [], []
    for p in polys:
        (through if p.vanishes_at_origin() else units).append(p)
    return through, units


@dataclass(frozen=True)
class FactoredCurve:
    """f = f_1 * ... * f_m with every f_i nonconstant and f_i(0, 0) = 0.

    Factors must be squarefree and pairwise coprime, which is exactly the
    condition for mu_0(f) to be finite.  Local invariants are computed on
    first use and cached.
    """

    factors: tuple[BiPoly, ...]

    def __post_init__(self):
        factors = tuple(self.factors)
        object.__setattr__(self, "factors", factors)
        if not factors:
            raise ValueError("a factored curve needs at least one factor")
        for p in factors:
            if p.is_zero() or p.is_constant():
                raise ValueError(f"factor {p} is constant")
            if not p.vanishes_at_origin():
                raise ValueError(f"factor {p} does not pass through the origin")
            if not is_squarefree(p):
                raise NonIsolatedSingularity(f"factor {p} has a repeated component")
        for a, b in combinations(factors, 2):
            if not are_coprime(a, b):
                raise NonIsolatedSingularity(f"factors {a} and {b} share a component")

    @classmethod
    def from_polys(cls, polys: Iterable[BiPoly]) -> FactoredCurve:
        """Build from arbitrary factors, dropping those not through the origin."""
        through, _ = split_units(polys)
        return cls(tuple(through))

    @property
    def m(self) -> int:
        return len(self.factors)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(p.degree for p in self.factors)

    @property
    def d(self) -> int:
        return sum(self.degrees)

    @cached_property
    def product(self) -> BiPoly:
        out = BiPoly.constant(1)
        for p in self.factors:
            out = out * p
        return out

    @cached_property
    def milnor(self) -> ExtNat:
        return milnor_number(self.product)

    @cached_property
    def factor_milnors(self) -> tuple[ExtNat, ...]:
        return tuple(milnor_number(p) for p in self.factors)

    @cached_property
    def pairwise_i0(self) -> dict[tuple[int, int], ExtNat]:
        return {
            (i, j): intersection_multiplicity(self.factors[i], self.factors[j])
            for i, j in combinations(range(self.m), 2)
        }

    @cached_property
    def tangents(self) -> tuple[TangentData, ...]:
        return tuple(tangent_data(p) for p in self.factors)

    @cached_property
    def statuses(self) -> tuple[str, ...]:
        return tuple(irreducibility_status(p) for p in self.factors)

    def __str__(self) -> str:
        return " * ".join(f"({p})" for p in self.factors)
