import pytest
from hypothesis import given, settings

from milnorlab import BiPoly, BinaryForm, gcd_bivariate, parse_poly, squarefree_part_binary
from milnorlab.gcd import are_coprime, certified_coprime, is_squarefree
from conftest import bipolys, nonzero

P = parse_poly


def test_gcd_examples():
    assert gcd_bivariate(P("x^2-y^2"), P("x-y")) == P("x-y")
    assert gcd_bivariate(P("x"), P("y")) == P("1")
    assert gcd_bivariate(P("x*(y^3-x^2)"), P("x")) == P("x")
    assert gcd_bivariate(P("0"), P("2*x+4*y")) == P("x+2*y")


def test_gcd_of_two_zeros_is_rejected():
    with pytest.raises(ValueError):
        gcd_bivariate(BiPoly.zero(), BiPoly.zero())


def test_gcd_univariate_in_y_and_mixed():
    a = P("(x+y^2)*(y-3)*(x*y+1)")
    b = P("(x+y^2)*(x*y+1)*(x-2)")
    assert gcd_bivariate(a, b) == P("(x+y^2)*(x*y+1)").monic()


@settings(max_examples=60)
@given(nonzero(bipolys(max_deg=2)), nonzero(bipolys(max_deg=2)), nonzero(bipolys(max_deg=2)))
def test_gcd_properties(p, q, h):
    g = gcd_bivariate(p, q)
    assert g.divides(p) and g.divides(q)
    assert gcd_bivariate(p * h, q * h) == (h * g).monic()


@settings(max_examples=60)
@given(nonzero(bipolys(max_deg=3)), nonzero(bipolys(max_deg=3)))
def test_certificate_never_lies(p, q):
    if certified_coprime(p, q):
        assert gcd_bivariate(p, q).is_constant()
    assert are_coprime(p, q) == gcd_bivariate(p, q).is_constant()


def test_squarefree_part_examples():
    assert squarefree_part_binary(BinaryForm(P("x^2*y"), 3)).form == P("x*y")
    r = squarefree_part_binary(BinaryForm(P("(x+y)^3"), 3))
    assert r.form == P("x+y") and r.degree == 1
    r = squarefree_part_binary(BinaryForm(P("x^2+y^2"), 2))
    assert r.form == P("x^2+y^2") and r.degree == 2


@settings(max_examples=60)
@given(nonzero(bipolys(max_deg=4)))
def test_squarefree_degree(p):
    F = p.lowest_form()
    if F.degree == 0:
        return
    S = squarefree_part_binary(F)
    assert S.degree <= F.degree
    G = F.form
    # gcd with F_x alone misses the factor y (F = x*y has gcd(F, F_x) = y)
    g = gcd_bivariate(gcd_bivariate(G, G.partial("x")), G.partial("y"))
    assert (S.degree == F.degree) == g.is_constant()


def test_is_squarefree():
    assert is_squarefree(P("x^2+y^3"))
    assert not is_squarefree(P("x^2*y"))
    assert not is_squarefree(P("(x+y^2)^2*(x-1)"))
