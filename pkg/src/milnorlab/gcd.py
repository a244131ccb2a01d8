"""Greatest common divisors in Q[x, y].

A polynomial is viewed as an element of Q[x][y].  Its content (gcd of the
y-coefficients in Q[x]) is split off, and the primitive parts are handled by
a subresultant polynomial remainder sequence, which keeps the Q[x]
coefficients from blowing up the way plain pseudo-remainders do.
"""

from __future__ import annotations

from .poly import BinaryForm, BiPoly
from .unipoly import UniPoly, gcd as ugcd, gcd_many

YPoly = list  # list[UniPoly], index = power of y, no trailing zeros

_ONE = UniPoly((1,))


def _trim(p: YPoly) -> YPoly:
    while p and p[-1].is_zero():
        p.pop()
    return p


def content(p: YPoly) -> UniPoly:
    return gcd_many(p)


def primitive_part(p: YPoly) -> YPoly:
    c = content(p)
    if c.is_zero():
        return []
    return [u.exact_div(c) for u in p]


def pseudo_remainder(a: YPoly, b: YPoly) -> YPoly:
    """prem(a, b) = lc(b)^(deg a - deg b + 1) * a  mod  b, in Q[x][y]."""
    db = len(b) - 1
    lcb = b[-1]
    r = list(a)
    e = len(a) - len(b) + 1
    while len(r) - 1 >= db and r:
        lcr = r[-1]
        shift = len(r) - 1 - db
        nr = [u * lcb for u in r]
        for k, u in enumerate(b):
            nr[k + shift] = nr[k + shift] - lcr * u
        r = _trim(nr)
        e -= 1
    if e > 0:
        f = lcb**e
        r = [u * f for u in r]
    return r


def subresultant_gcd(a: YPoly, b: YPoly) -> YPoly:
    """Gcd of two primitive elements of Q[x][y] with deg_y a >= deg_y b >= 1.

    The result is defined up to a unit; the caller normalizes it.
    """
    g = _ONE
    h = _ONE
    while True:
        delta = len(a) - len(b)
        r = pseudo_remainder(a, b)
        if not r:
            return primitive_part(b)
        if len(r) == 1:
            return [_ONE]
        div = g * h**delta
        a, b = b, [u.exact_div(div) for u in r]
        g = a[-1]
        if delta == 1:
            h = g
        elif delta > 1:
            h = (g**delta).exact_div(h ** (delta - 1))


def gcd_bivariate(p: BiPoly, q: BiPoly) -> BiPoly:
    """Monic (grlex, x > y) gcd of ``p`` and ``q`` in Q[x, y]."""
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    if p.is_zero():
        return q.monic()
    if q.is_zero():
        return p.monic()
    if p.is_constant() or q.is_constant():
        return BiPoly.constant(1)
    a = p.as_poly_in_y()
    b = q.as_poly_in_y()
    c = ugcd(content(a), content(b))
    a = primitive_part(a)
    b = primitive_part(b)
    if len(a) == 1 or len(b) == 1:
        core: YPoly = [_ONE]
    else:
        if len(a) < len(b):
            a, b = b, a
        core = subresultant_gcd(a, b)
    return BiPoly.from_poly_in_y([u * c for u in core]).monic()


# Modular coprimality certificate.  If h divides f and g with deg_y h >= 1,
# then h(a, y) mod P divides f(a, y) and g(a, y) mod P with the same y-degree
# whenever the y-leading coefficients of f, g survive at x = a.  A trivial
# gcd mod P at such a point therefore rules out every common factor that
# involves y; the same argument with x and y swapped covers the rest.
_PRIME = (1 << 61) - 1
_POINTS = (7919, 104729, 1299709)


def _gcd_mod(a: list[int], b: list[int]) -> int:
    """Degree of gcd over F_P of two coefficient lists (low to high)."""

    def trim(v):
        while v and v[-1] == 0:
            v.pop()
        return v

    a, b = trim([c % _PRIME for c in a]), trim([c % _PRIME for c in b])
    while b:
        inv = pow(b[-1], _PRIME - 2, _PRIME)
        while len(a) >= len(b):
            c = a[-1] * inv % _PRIME
            shift = len(a) - len(b)
            for k, v in enumerate(b):
                a[k + shift] = (a[k + shift] - c * v) % _PRIME
            trim(a)
            if not a:
                break
        a, b = b, a
    return len(a) - 1


def _specialize(terms: dict, var: int, point: int) -> list[int]:
    """Coefficients in the other variable after setting variable ``var`` to ``point``."""
    other = 1 - var
    top = max(e[other] for e in terms)
    out = [0] * (top + 1)
    for e, c in terms.items():
        out[e[other]] = (out[e[other]] + c * pow(point, e[var], _PRIME)) % _PRIME
    return out


def _no_common_factor_in(p: dict, q: dict, keep: int) -> bool:
    """Certify that p, q share no factor of positive degree in variable ``keep``."""
    if max(e[keep] for e in p) == 0 or max(e[keep] for e in q) == 0:
        return True
    other = 1 - keep
    for a in _POINTS:
        fp = _specialize(p, other, a)
        fq = _specialize(q, other, a)
        if fp[-1] == 0 or fq[-1] == 0 or len(fp) - 1 != max(e[keep] for e in p) or len(fq) - 1 != max(
            e[keep] for e in q
        ):
            continue
        return _gcd_mod(fp, fq) == 0
    return False


def certified_coprime(p: BiPoly, q: BiPoly) -> bool:
    """True only if p and q are provably coprime; False means undecided."""
    if p.is_zero() or q.is_zero():
        return False
    if p.is_constant() or q.is_constant():
        return True
    ip, iq = p.integer_terms(), q.integer_terms()
    return _no_common_factor_in(ip, iq, 1) and _no_common_factor_in(ip, iq, 0)


def are_coprime(p: BiPoly, q: BiPoly) -> bool:
    return certified_coprime(p, q) or gcd_bivariate(p, q).is_constant()


def is_squarefree(p: BiPoly) -> bool:
    """True iff ``p`` has no repeated factor over Q (equivalently over C)."""
    px, py = p.partial("x"), p.partial("y")
    if certified_coprime(p, px) or certified_coprime(p, py):
        return True
    g = gcd_bivariate(gcd_bivariate(p, px), py)
    return g.is_constant()


def squarefree_part_binary(F: BinaryForm) -> BinaryForm:
    """Product of the distinct linear factors (over C) of a binary form."""
    form = F.form
    g = gcd_bivariate(gcd_bivariate(form, form.partial("x")), form.partial("y"))
    s = form.exact_div(g).monic()
    return BinaryForm(s, s.degree)
