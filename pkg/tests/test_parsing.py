from fractions import Fraction

import pytest
from hypothesis import given

from milnorlab import BiPoly, PolynomialSyntaxError, format_poly, parse_poly
from conftest import bipolys, rational_coeffs


def test_parse_examples():
    assert parse_poly("x^2*y - 3/2*y^5 + x").terms == {(2, 1): 1, (0, 5): Fraction(-3, 2), (1, 0): 1}
    assert parse_poly("x + x").terms == {(1, 0): 2}
    assert parse_poly("x*(y^3 - x^2)").terms == {(1, 3): 1, (3, 0): -1}


def test_parse_misc():
    assert parse_poly("-x") == BiPoly({(1, 0): -1})
    assert parse_poly("(x+y)^2") == parse_poly("x^2+2*x*y+y^2")
    assert parse_poly("0").is_zero()
    assert parse_poly(" 7 ") == BiPoly.constant(7)


@pytest.mark.parametrize(
    "text",
    ["2x", "x y", "z+1", "x^y", "x^", "(x+1", "x+*y", "1/0", "", "x^-1", "x**2"],
)
def test_parse_rejects(text):
    with pytest.raises(PolynomialSyntaxError) as info:
        parse_poly(text)
    assert info.value.position is not None


def test_error_position_points_at_problem():
    with pytest.raises(PolynomialSyntaxError) as info:
        parse_poly("x + 2x")
    assert info.value.position == 5


def test_format_examples():
    assert format_poly(parse_poly("y^2+2*x^2+x")) == "x+2*x^2+y^2"
    assert format_poly(parse_poly("-3/2*y^5")) == "-3/2*y^5"
    assert format_poly(BiPoly.zero()) == "0"
    assert format_poly(parse_poly("x*(y^3-x^2)")) == "-x^3+x*y^3"


@given(bipolys(max_deg=4, coeffs=rational_coeffs, max_terms=6))
def test_parse_format_roundtrip(p):
    text = format_poly(p)
    assert parse_poly(text) == p
    assert format_poly(parse_poly(text)) == text
