"""Reading and writing polynomials in the plain-text grammar.

Grammar (whitespace is insignificant)::

    expr     := ['+'|'-'] term (('+'|'-') term)*
    term     := factor ('*' factor)*
    factor   := base ('^' nat)?
    base     := 'x' | 'y' | rational | '(' expr ')'
    rational := int ('/' posint)?

Multiplication is always explicit: ``2x`` is a syntax error.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .poly import BiPoly


class PolynomialSyntaxError(ValueError):
    """Raised for malformed polynomial text; ``position`` is a 0-based offset."""

    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*^/()":
                raise PolynomialSyntaxError(f"unexpected character {ch!r}", m.start(3), text)
            tokens.append(("op", ch, m.start(3)))
        pos = m.end()
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message: str, tok=None):
        tok = tok or self.peek()
        raise PolynomialSyntaxError(message, tok[2], self.text)

    def expect_op(self, ch: str):
        tok = self.peek()
        if tok[0] != "op" or tok[1] != ch:
            self.error(f"expected {ch!r}")
        self.take()

    def parse(self) -> BiPoly:
        if self.peek()[0] == "end":
            self.error("empty expression")
        p = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            self.error(f"unexpected token {tok[1]!r}")
        return p

    def expr(self) -> BiPoly:
        sign = 1
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.take()
            sign = -1 if tok[1] == "-" else 1
        acc = self.term().scale(sign)
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] in "+-":
                self.take()
                t = self.term()
                acc = acc + t if tok[1] == "+" else acc - t
            else:
                return acc

    def term(self) -> BiPoly:
        acc = self.factor()
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] == "*":
                self.take()
                acc = acc * self.factor()
            elif tok[0] in ("name", "int") or (tok[0] == "op" and tok[1] == "("):
                self.error("implicit multiplication is not allowed; use '*'")
            else:
                return acc

    def factor(self) -> BiPoly:
        base = self.base()
        tok = self.peek()
        if tok[0] == "op" and tok[1] == "^":
            self.take()
            exp = self.peek()
            if exp[0] != "int":
                self.error("exponent must be a nonnegative integer literal")
            self.take()
            return base ** int(exp[1])
        return base

    def base(self) -> BiPoly:
        tok = self.take()
        kind, val, _ = tok
        if kind == "name":
            if val == "x":
                return BiPoly.x()
            if val == "y":
                return BiPoly.y()
            self.error(f"unknown identifier {val!r}", tok)
        if kind == "int":
            num = int(val)
            nxt = self.peek()
            if nxt[0] == "op" and nxt[1] == "/":
                self.take()
                den = self.peek()
                if den[0] != "int":
                    self.error("expected a positive integer denominator")
                self.take()
                if int(den[1]) == 0:
                    self.error("denominator must be positive", den)
                return BiPoly.constant(Fraction(num, int(den[1])))
            return BiPoly.constant(num)
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        if kind == "end":
            self.error("unexpected end of input", tok)
        self.error(f"unexpected token {val!r}", tok)


def parse_poly(text: str) -> BiPoly:
    """Parse ``text`` into a canonical :class:`BiPoly`."""
    return _Parser(text).parse()


def _monomial(i: int, j: int) -> str:
    parts = []
    if i:
        parts.append("x" if i == 1 else f"x^{i}")
    if j:
        parts.append("y" if j == 1 else f"y^{j}")
    return "*".join(parts)


def format_poly(p: BiPoly) -> str:
    """Render ``p`` in the input grammar.

    Terms go by increasing total degree; within a degree, higher powers of x
    come first.  ``parse_poly(format_poly(p)) == p`` for every ``p``.
    """
    if p.is_zero():
        return "0"
    out = []
    for e in sorted((e for e, _ in p.items()), key=lambda e: (e[0] + e[1], -e[0])):
        c = p.coeff(*e)
        mono = _monomial(*e)
        mag = abs(c)
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{mag}*{mono}"
        else:
            body = str(mag)
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("-" if c < 0 else "+") + body)
    return "".join(out)
