"""Sparse bivariate polynomials over Q.

A :class:`BiPoly` stores a map ``(i, j) -> coefficient`` for the monomials
``x^i y^j``.  Values are immutable and always canonical: no zero coefficient is
ever stored, so two equal polynomials have equal term maps.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as igcd, lcm
from typing import Iterator, Mapping, Union

from .extnat import INFINITY, ExtNat
from .unipoly import UniPoly

Exponent = tuple[int, int]
Scalar = Union[int, Fraction]


def grlex_key(e: Exponent) -> tuple[int, int]:
    """Sort key for graded-lexicographic order with x > y."""
    return (e[0] + e[1], e[0])


class BiPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, Scalar] | None = None):
        clean: dict[Exponent, Fraction] = {}
        if terms:
            for (i, j), c in terms.items():
                if i < 0 or j < 0:
                    raise ValueError(f"negative exponent in {(i, j)}")
                c = Fraction(c)
                if c:
                    clean[(int(i), int(j))] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Exponent, Fraction]) -> BiPoly:
        # caller guarantees canonical form
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def x(cls) -> BiPoly:
        return cls._raw({(1, 0): Fraction(1)})

    @classmethod
    def y(cls) -> BiPoly:
        return cls._raw({(0, 1): Fraction(1)})

    @classmethod
    def constant(cls, c: Scalar) -> BiPoly:
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, i: int, j: int, c: Scalar = 1) -> BiPoly:
        return cls({(i, j): c})

    @classmethod
    def zero(cls) -> BiPoly:
        return cls._raw({})

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> Mapping[Exponent, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Exponent, Fraction]]:
        return iter(self._terms.items())

    def coeff(self, i: int, j: int) -> Fraction:
        return self._terms.get((i, j), Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(e == (0, 0) for e in self._terms)

    @property
    def degree(self) -> int | None:
        """Total degree; None flags the zero polynomial."""
        if not self._terms:
            return None
        return max(i + j for i, j in self._terms)

    def degree_in(self, var: str) -> int | None:
        if not self._terms:
            return None
        k = _var_index(var)
        return max(e[k] for e in self._terms)

    def order(self) -> ExtNat:
        """Order at the origin: the lowest total degree of a stored term."""
        if not self._terms:
            return INFINITY
        return ExtNat(min(i + j for i, j in self._terms))

    def constant_term(self) -> Fraction:
        return self._terms.get((0, 0), Fraction(0))

    def vanishes_at_origin(self) -> bool:
        return (0, 0) not in self._terms

    def is_homogeneous(self) -> bool:
        return len({i + j for i, j in self._terms}) <= 1

    def leading_exponent(self) -> Exponent:
        """Leading exponent in graded-lexicographic order (x > y)."""
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self._terms, key=grlex_key)

    def leading_coefficient(self) -> Fraction:
        return self._terms[self.leading_exponent()]

    def __call__(self, x: Scalar, y: Scalar) -> Fraction:
        x, y = Fraction(x), Fraction(y)
        return sum((c * x**i * y**j for (i, j), c in self._terms.items()), Fraction(0))

    # -- ring structure ---------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, BiPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == BiPoly.constant(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other) -> BiPoly:
        other = _lift(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return BiPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> BiPoly:
        return BiPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> BiPoly:
        other = _lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> BiPoly:
        return (-self) + other

    def __mul__(self, other) -> BiPoly:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        from .kernels import poly_mul

        return BiPoly._raw(poly_mul(self._terms, other._terms))

    def __rmul__(self, other) -> BiPoly:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c: Scalar) -> BiPoly:
        c = Fraction(c)
        if not c:
            return BiPoly.zero()
        return BiPoly._raw({e: c * v for e, v in self._terms.items()})

    def __pow__(self, n: int) -> BiPoly:
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a natural number")
        result = BiPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def shift(self, di: int, dj: int) -> BiPoly:
        """Multiply by x^di y^dj (negative shifts must stay nonnegative)."""
        return BiPoly._raw({(i + di, j + dj): c for (i, j), c in self._terms.items()})

    # -- calculus and graded pieces ---------------------------------------

    def partial(self, var: str) -> BiPoly:
        k = _var_index(var)
        out = {}
        for e, c in self._terms.items():
            if e[k]:
                ne = (e[0] - 1, e[1]) if k == 0 else (e[0], e[1] - 1)
                out[ne] = c * e[k]
        return BiPoly._raw(out)

    def homogeneous_part(self, k: int) -> BiPoly:
        return BiPoly._raw({e: c for e, c in self._terms.items() if e[0] + e[1] == k})

    def lowest_form(self) -> BinaryForm:
        if not self._terms:
            raise ValueError("the zero polynomial has no lowest form")
        k = self.order().value
        return BinaryForm(self.homogeneous_part(k), k)

    def restrict_y0(self) -> UniPoly:
        """The univariate polynomial f(x, 0)."""
        top = max((i for i, j in self._terms if j == 0), default=-1)
        coeffs = [Fraction(0)] * (top + 1)
        for (i, j), c in self._terms.items():
            if j == 0:
                coeffs[i] = c
        return UniPoly(coeffs)

    def as_poly_in_y(self) -> list[UniPoly]:
        """Coefficients in Q[x] of y^0, y^1, ..., y^deg_y."""
        if not self._terms:
            return []
        dy = max(j for _, j in self._terms)
        dx = max(i for i, _ in self._terms)
        rows = [[Fraction(0)] * (dx + 1) for _ in range(dy + 1)]
        for (i, j), c in self._terms.items():
            rows[j][i] = c
        return [UniPoly(r) for r in rows]

    @classmethod
    def from_poly_in_y(cls, coeffs: list[UniPoly]) -> BiPoly:
        out = {}
        for j, u in enumerate(coeffs):
            for i, c in enumerate(u.coeffs):
                if c:
                    out[(i, j)] = c
        return cls._raw(out)

    @classmethod
    def from_unipoly(cls, u: UniPoly, var: str = "x") -> BiPoly:
        k = _var_index(var)
        return cls._raw({((i, 0) if k == 0 else (0, i)): c for i, c in enumerate(u.coeffs) if c})

    # -- division -----------------------------------------------------------

    def divmod_exact(self, divisor: BiPoly) -> tuple[BiPoly, bool]:
        """Divide by ``divisor`` using grlex leading terms.

        Returns ``(quotient, exact)``; ``exact`` is False as soon as a
        leading term of the running remainder is not divisible, in which
        case the divisor does not divide ``self``.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = dict(self._terms)
        lt = divisor.leading_exponent()
        lc = divisor._terms[lt]
        quot: dict[Exponent, Fraction] = {}
        dterms = list(divisor._terms.items())
        while rem:
            e = max(rem, key=grlex_key)
            if e[0] < lt[0] or e[1] < lt[1]:
                return BiPoly._raw(quot), False
            q = (e[0] - lt[0], e[1] - lt[1])
            c = rem[e] / lc
            quot[q] = c
            for (i, j), d in dterms:
                m = (i + q[0], j + q[1])
                v = rem.get(m, 0) - c * d
                if v:
                    rem[m] = v
                else:
                    rem.pop(m, None)
        return BiPoly._raw(quot), True

    def exact_div(self, divisor: BiPoly) -> BiPoly:
        q, ok = self.divmod_exact(divisor)
        if not ok:
            raise ValueError("polynomial division is not exact")
        return q

    def divides(self, other: BiPoly) -> bool:
        if self.is_zero():
            return other.is_zero()
        return other.divmod_exact(self)[1]

    # -- normalization helpers -------------------------------------------

    def monic(self) -> BiPoly:
        """Scale so the grlex leading coefficient is 1 (zero stays zero)."""
        if not self._terms:
            return self
        return self.scale(1 / self.leading_coefficient())

    def integer_terms(self) -> dict[Exponent, int]:
        """A primitive integer multiple of ``self`` as a plain term dict."""
        if not self._terms:
            return {}
        den = lcm(*(c.denominator for c in self._terms.values()))
        ints = {e: int(c * den) for e, c in self._terms.items()}
        g = 0
        for v in ints.values():
            g = igcd(g, v)
        return {e: v // g for e, v in ints.items()}

    @classmethod
    def from_integer_terms(cls, terms: Mapping[Exponent, int]) -> BiPoly:
        return cls._raw({e: Fraction(c) for e, c in terms.items() if c})

    def substitute_linear(self, a: Scalar, b: Scalar, c: Scalar, d: Scalar) -> BiPoly:
        """Return p(a*x + b*y, c*x + d*y)."""
        X = BiPoly({(1, 0): a, (0, 1): b})
        Y = BiPoly({(1, 0): c, (0, 1): d})
        xp: dict[int, BiPoly] = {0: BiPoly.constant(1)}
        yp: dict[int, BiPoly] = {0: BiPoly.constant(1)}
        for i, j in self._terms:
            for k in range(max(xp) + 1, i + 1):
                xp[k] = xp[k - 1] * X
            for k in range(max(yp) + 1, j + 1):
                yp[k] = yp[k - 1] * Y
        out = BiPoly.zero()
        for (i, j), coef in self._terms.items():
            out = out + (xp[i] * yp[j]).scale(coef)
        return out

    def __str__(self) -> str:
        from .parsing import format_poly

        return format_poly(self)

    def __repr__(self) -> str:
        return f"BiPoly({str(self)!r})"


def _var_index(var: str) -> int:
    if var == "x":
        return 0
    if var == "y":
        return 1
    raise ValueError(f"unknown variable {var!r}; expected 'x' or 'y'")


def _lift(v) -> BiPoly | None:
    if isinstance(v, BiPoly):
        return v
    if isinstance(v, (int, Fraction)):
        return BiPoly.constant(v)
    return None


@dataclass(frozen=True)
class BinaryForm:
    """A nonzero homogeneous polynomial together with its degree."""

    form: BiPoly
    degree: int

    def __post_init__(self):
        if self.form.is_zero():
            raise ValueError("a binary form must be nonzero")
        if any(i + j != self.degree for (i, j), _ in self.form.items()):
            raise ValueError(f"{self.form} is not homogeneous of degree {self.degree}")

    def __str__(self) -> str:
        return str(self.form)


def poly_arith(op: str, a: BiPoly, b=None) -> BiPoly:
    """Dispatch one ring operation by name: add, sub, mul, pow, scale or neg."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "pow":
        return a**b
    if op == "scale":
        return a.scale(b)
    if op == "neg":
        return -a
    raise ValueError(f"unknown operation {op!r}")


def partial_derivative(p: BiPoly, var: str) -> BiPoly:
    return p.partial(var)


def order_at_origin(p: BiPoly) -> ExtNat:
    return p.order()


def lowest_form(p: BiPoly) -> BinaryForm:
    return p.lowest_form()
