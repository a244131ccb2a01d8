"""Closed-form upper bounds for the Milnor number of a degree-d curve."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


def bezout_bound(d: int) -> int:
    return (d - 1) ** 2


def nonhomogeneous_bound(d: int) -> int:
    """(d-1)^2 - floor(d/2): the maximum for curves with ord_0 f < d."""
    return (d - 1) ** 2 - d // 2


def components_bound(d: int, m: int) -> int:
    """(d-1)^2 - d + m for a curve with m components through the origin."""
    return (d - 1) ** 2 - d + m


def lambda_bound(d: int, m: int, lambda_count: int) -> int:
    return (d - 1) ** 2 - d + m - 2 * lambda_count


def irreducible_bound(d: int) -> int:
    """(d-1)(d-2): Milnor number cap for an irreducible curve of degree d."""
    return (d - 1) * (d - 2)


def double_point_bound(d: int) -> int:
    """Gusein-Zade--Nekhoroshev cap for curves of order 2 at the origin."""
    q = d // 2
    return (d - 1) ** 2 - q * (q - 1)


def approximate_roots_bound(d: int, order: int) -> int:
    """Abhyankar--Moh cap for a unibranch germ whose tangent meets it d times."""
    d1 = gcd(order, d)
    return (d - 1) ** 2 - (d // d1 - 1) * (d - order)


@dataclass(frozen=True)
class BoundSet:
    """Every bound for one curve, applicable or not.

    ``lemma25`` is None when the number of components through the origin is
    unknown (a raw polynomial).  The applicability flags for the two
    remark bounds travel with them.
    """

    degree: int
    order: int
    bezout: int
    thm11: int
    lemma25: int | None
    gz: int
    am: int
    gz_applicable: bool
    am_applicable: bool

    @classmethod
    def compute(cls, d: int, order: int, m: int | None = None, am_applicable: bool = False) -> BoundSet:
        return cls(
            degree=d,
            order=order,
            bezout=bezout_bound(d),
            thm11=nonhomogeneous_bound(d),
            lemma25=None if m is None else components_bound(d, m),
            gz=double_point_bound(d),
            am=approximate_roots_bound(d, order) if order >= 1 else bezout_bound(d),
            gz_applicable=order == 2,
            am_applicable=am_applicable,
        )

    def as_dict(self) -> dict:
        return {
            "bezout": self.bezout,
            "thm11": self.thm11,
            "lemma25": self.lemma25,
            "gz": self.gz,
            "am": self.am,
        }
