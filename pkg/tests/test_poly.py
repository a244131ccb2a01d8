from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from milnorlab import (
    BiPoly,
    BinaryForm,
    INFINITY,
    format_poly,
    lowest_form,
    order_at_origin,
    parse_poly,
    partial_derivative,
    poly_arith,
)
from conftest import bipolys, nonzero, rational_coeffs

P = parse_poly
x, y = BiPoly.x(), BiPoly.y()


def test_poly_arith_examples():
    assert poly_arith("mul", P("x+y"), P("x-y")) == P("x^2-y^2")
    assert poly_arith("pow", P("x+1"), 2) == P("x^2+2*x+1")
    assert poly_arith("add", P("x^2+y"), P("-y")) == P("x^2")
    assert poly_arith("sub", P("x"), P("x")).is_zero()


def test_poly_arith_rejects_bad_ops():
    with pytest.raises(ValueError):
        poly_arith("div", x, y)
    with pytest.raises(ValueError):
        poly_arith("pow", x, -1)


def test_partials():
    assert partial_derivative(P("x^2*y"), "x") == P("2*x*y")
    assert partial_derivative(P("x^3"), "y").is_zero()
    assert partial_derivative(P("x^3+y^4"), "x") == P("3*x^2")
    with pytest.raises(ValueError):
        partial_derivative(x, "z")


def test_order_examples():
    assert order_at_origin(P("x^2+y^3")) == 2
    assert order_at_origin(P("5")) == 0
    assert order_at_origin(P("x+x^2+y^2")) == 1
    assert order_at_origin(BiPoly.zero()) is INFINITY


def test_lowest_form_examples():
    lf = lowest_form(P("x^2+y^3"))
    assert lf.form == P("x^2") and lf.degree == 2
    lf = lowest_form(P("x*(y^3-x^2)"))
    assert lf.form == P("-x^3") and lf.degree == 3
    assert lowest_form(P("x*y")).form == P("x*y")
    with pytest.raises(ValueError):
        lowest_form(BiPoly.zero())


def test_binary_form_validation():
    with pytest.raises(ValueError):
        BinaryForm(P("x+y^2"), 1)
    with pytest.raises(ValueError):
        BinaryForm(P("x*y"), 3)


def test_zero_has_no_degree():
    z = BiPoly.zero()
    assert z.degree is None
    assert z.order() is INFINITY


def test_exact_rationals():
    p = P("1/3*x") * P("3*x")
    assert p == P("x^2")
    assert p.coeff(2, 0) == Fraction(1)


@given(bipolys(coeffs=rational_coeffs), bipolys(coeffs=rational_coeffs), bipolys(coeffs=rational_coeffs))
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a - a == BiPoly.zero()


@given(bipolys(), bipolys())
def test_exact_division_roundtrip(a, b):
    if b.is_zero():
        return
    assert (a * b).exact_div(b) == a


@given(nonzero(bipolys()), nonzero(bipolys()))
def test_order_and_lowest_form_multiplicative(p, q):
    assert order_at_origin(p * q) == order_at_origin(p) + order_at_origin(q)
    assert lowest_form(p * q).form == lowest_form(p).form * lowest_form(q).form


@given(bipolys(), st.sampled_from(["x", "y"]))
def test_partial_is_linear_and_leibniz(p, var):
    q = p * p
    assert q.partial(var) == p.partial(var) * p * BiPoly.constant(2)


def test_substitute_linear():
    p = P("x^2-y")
    assert p.substitute_linear(1, 1, 0, 1) == P("x^2+2*x*y+y^2-y")
