import json

import pytest

from milnorlab import INFINITY, milnor_number, parse_poly
from milnorlab.theorem_lab import (
    BoundSet,
    CurveError,
    FactoredCurve,
    NonIsolatedSingularity,
    PreconditionError,
    analyze_curve,
    check_lemma21_identity,
    check_lemma41,
    check_thm14,
    gen_extremal,
    gen_irreducible_max,
    irreducibility_status,
    split_units,
    structural_lemma_checks,
)
from milnorlab.theorem_lab.bounds import (
    approximate_roots_bound,
    bezout_bound,
    components_bound,
    double_point_bound,
    irreducible_bound,
    lambda_bound,
    nonhomogeneous_bound,
)

P = parse_poly


def curve(*texts):
    return FactoredCurve(tuple(P(t) for t in texts))


def test_bound_formulas():
    assert [nonhomogeneous_bound(d) for d in range(2, 7)] == [0, 3, 7, 14, 22]
    assert bezout_bound(4) == 9
    assert irreducible_bound(5) == 12
    assert approximate_roots_bound(4, 3) == 6
    assert approximate_roots_bound(6, 4) == 21
    assert components_bound(4, 2) == 7
    assert lambda_bound(4, 2, 1) == 5
    assert [double_point_bound(d) for d in (4, 5, 6)] == [7, 14, 19]


def test_boundset_json_has_only_ints():
    b = BoundSet.compute(4, 3, m=2, am_applicable=True).as_dict()
    assert all(v is None or isinstance(v, int) for v in b.values())


def test_analyze_golden():
    r = analyze_curve(P("x*(y^3-x^2)"))
    assert (r.degree, r.order, r.milnor, r.bounds.thm11) == (4, 3, 7, 7)
    assert r.extremal and not r.homogeneous


def test_analyze_homogeneous():
    r = analyze_curve(P("x^3+y^3"))
    assert r.homogeneous and r.milnor == 4 == r.bounds.bezout
    assert not r.applicable["thm11"]


def test_analyze_unibranch_am_tight():
    r = analyze_curve(P("x^3+y^4"), assume_unibranch=True)
    assert r.milnor == 6 and r.bounds.am == 6
    assert r.applicable["am"] and r.satisfied["am"]
    assert not analyze_curve(P("x^3+y^4")).applicable["am"]


def test_analyze_non_isolated_skips():
    r = analyze_curve(P("x^2*y^2+x^5"))
    assert r.milnor is INFINITY and r.non_isolated
    assert all(v is None for v in r.satisfied.values())
    json.dumps(r.to_json())


def test_analyze_smooth_boundary():
    r = analyze_curve(P("x+x^2+y^2"))
    assert r.smooth and r.milnor == 0 and r.extremal


def test_analyze_errors():
    with pytest.raises(CurveError):
        analyze_curve(P("x+1"))
    with pytest.raises(CurveError):
        analyze_curve(P("0"))


def test_report_json_is_float_free():
    text = json.dumps(analyze_curve(P("x*(y^3-x^2)")).to_json())
    assert "." not in text.replace("x*", "")
    assert json.loads(text)["milnor"] == 7


def test_factored_curve_validation():
    with pytest.raises(NonIsolatedSingularity):
        curve("x", "x*y")
    with pytest.raises(NonIsolatedSingularity):
        curve("x^2+y^3", "x^2+y^3")
    with pytest.raises(ValueError):
        curve("x+1")
    with pytest.raises(ValueError):
        FactoredCurve(())


def test_split_units():
    through, units = split_units([P("x"), P("1+x"), P("y")])
    assert through == [P("x"), P("y")] and units == [P("1+x")]
    c = FactoredCurve.from_polys([P("x"), P("2+y"), P("y")])
    assert c.m == 2


def test_milnor_sum_identity_examples():
    r = check_lemma21_identity(curve("x", "x+x^2+y^2"))
    assert (r.lhs, r.rhs) == (4, 4) and r.holds
    assert check_lemma21_identity(curve("x", "y")).holds


def test_irreducibility_status():
    assert irreducibility_status(P("x")) == "verified_linear"
    assert irreducibility_status(P("x+x^2+y^2")) == "verified_conic"
    assert irreducibility_status(P("x*y")) == "reducible"
    assert irreducibility_status(P("y^3-x^2")) == "assumed"
    assert irreducibility_status(P("x^2*y+y^3+x^3")) == "reducible"


def test_structural_checks_extremal():
    rep = structural_lemma_checks(gen_extremal(5))
    assert rep.violations() == []
    json.dumps(rep.to_json())


@pytest.mark.parametrize("d", [2, 3, 4, 5, 6, 8])
def test_gen_extremal(d):
    c = gen_extremal(d)
    assert c.d == d and c.milnor == nonhomogeneous_bound(d)


def test_gen_extremal_shapes():
    assert [str(p) for p in gen_extremal(4).factors] == ["x+x^2+y^2", "x+2*x^2+y^2"]
    assert [str(p) for p in gen_extremal(5).factors] == ["x", "x+x^2+y^2", "x+2*x^2+y^2"]
    assert [str(p) for p in gen_extremal(2).factors] == ["x+x^2+y^2"]
    with pytest.raises(ValueError):
        gen_extremal(1)


@pytest.mark.parametrize("d, text, mu", [(2, "x+y^2", 0), (4, "x^3+y^4", 6), (5, "x^4+y^5", 12)])
def test_gen_irreducible_max(d, text, mu):
    f = gen_irreducible_max(d)
    assert f == P(text) and milnor_number(f) == mu


def test_extremal_characterization():
    r = check_thm14(gen_extremal(6))
    assert r.i_holds and r.ii_holds and r.equivalence_ok
    r = check_thm14(curve("x", "y^3-x^2"))
    assert r.i_holds and not r.ii_holds and r.d4_exception and r.equivalence_ok is None
    with pytest.raises(PreconditionError):
        check_thm14(curve("x", "y"))


def test_characterization_nonextremal():
    r = check_thm14(curve("x", "y", "x-y", "x+y+x^2"))
    assert not r.i_holds and not r.ii_holds and r.equivalence_ok


def test_cubic_conic_contact():
    assert check_lemma41(P("y^3-x^2"), P("x+x^2+y^2"))
    assert check_lemma41(P("y^3-x^2"), P("x+y^2"))
    with pytest.raises(PreconditionError):
        check_lemma41(P("y^2-x^3"), P("x+x^2"))
    with pytest.raises(PreconditionError):
        check_lemma41(P("x^2+y^2"), P("x+y^2"))
