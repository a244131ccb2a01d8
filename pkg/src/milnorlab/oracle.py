"""Brute-force local quotient dimensions by exact linear algebra.

This is the independent check on :mod:`milnorlab.local`.  It never uses
Fulton's reduction: dim O/(f, g) is read off from the rank of the truncated
multiples of f and g inside the space of polynomials of degree < N.
"""

from __future__ import annotations

from .extnat import INFINITY, ExtNat
from .gcd import gcd_bivariate
from .kernels import sparse_rank
from .poly import BiPoly


class OracleCapExceeded(RuntimeError):
    """The truncation level hit its hard cap before the dimension stabilized."""


def monomial_basis(N: int) -> list[tuple[int, int]]:
    """Monomials of total degree < N, by degree then lex with x > y."""
    return [(k - j, j) for k in range(N) for j in range(k + 1)]


def truncated_quotient_dimension(f: BiPoly, g: BiPoly, N: int) -> int:
    """dim_Q of Q[x, y] / ((f, g) + m^N), where m = (x, y)."""
    if N < 1:
        raise ValueError("truncation level must be at least 1")
    if f.is_zero() or g.is_zero():
        raise ValueError("generators must be nonzero")
    basis = monomial_basis(N)
    index = {e: n for n, e in enumerate(basis)}
    rows = []
    for p in (f, g):
        terms = p.integer_terms()
        o = p.order().value
        for total in range(N - o):
            for b in range(total + 1):
                a = total - b
                row = {}
                for (i, j), c in terms.items():
                    if i + j + total < N:
                        row[index[(i + a, j + b)]] = c
                if row:
                    rows.append(row)
    return len(basis) - sparse_rank(rows)


def local_quotient_dimension(f: BiPoly, g: BiPoly, cap: int | None = None) -> ExtNat:
    """dim of the local ring at 0 modulo (f, g), or ∞.

    Truncation levels double from 4.  Equal values at levels N and 2N force
    equal values at N and N + 1, so m^N lies in the ideal (Nakayama) and the
    value is exact; the result is also required to be below 2N.  ``cap``
    overrides the default level limit 4 deg f deg g + 4.
    """
    if f.is_zero() or g.is_zero():
        raise ValueError("generators must be nonzero")
    if gcd_bivariate(f, g).vanishes_at_origin():
        return INFINITY
    if cap is None:
        cap = 4 * max(f.degree, 1) * max(g.degree, 1) + 4
    N = 4
    prev = truncated_quotient_dimension(f, g, N)
    while True:
        if 2 * N > cap:
            raise OracleCapExceeded(f"no stabilization below truncation level {cap}")
        cur = truncated_quotient_dimension(f, g, 2 * N)
        if cur == prev and cur <= 2 * N - 1:
            return ExtNat(cur)
        N, prev = 2 * N, cur


def milnor_oracle(f: BiPoly) -> ExtNat:
    """Milnor number from the partials, by linear algebra only.

    Same conventions as :func:`milnorlab.local.milnor_number`: 0 when the
    curve misses the origin, ∞ for a non-isolated singularity.
    """
    if f.is_zero() or f.is_constant():
        raise ValueError("Milnor number needs a nonconstant polynomial")
    if not f.vanishes_at_origin():
        return ExtNat(0)
    fx, fy = f.partial("x"), f.partial("y")
    if fx.is_zero() or fy.is_zero():
        other = fy if fx.is_zero() else fx
        return INFINITY if other.vanishes_at_origin() else ExtNat(0)
    return local_quotient_dimension(fx, fy)
