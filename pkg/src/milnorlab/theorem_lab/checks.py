"""Checkers for the Milnor-number bounds and the lemmas behind them.

Every checker evaluates an inequality or identity exactly on a concrete
curve.  A ``False`` verdict on valid input is evidence of a bug in the
invariant computations, never an expected outcome.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from itertools import combinations

from ..extnat import ExtNat
from ..gcd import gcd_bivariate, squarefree_part_binary
from ..local import (
    intersection_multiplicity,
    is_tangent_line,
    milnor_number,
    shares_common_tangent,
    tangent_data,
)
from ..poly import BiPoly
from .bounds import (
    BoundSet,
    components_bound,
    irreducible_bound,
    lambda_bound,
    nonhomogeneous_bound,
)
from .curves import (
    REDUCIBLE,
    VERIFIED_CONIC,
    FactoredCurve,
    has_one_local_component,
    irreducibility_status,
)


class CurveError(ValueError):
    """The polynomial is not a curve through the origin that can be analyzed."""


class PreconditionError(ValueError):
    """A checker's hypotheses fail; ``problems`` lists each failed clause."""

    def __init__(self, problems: list[str]):
        self.problems = problems
        super().__init__("; ".join(problems))


@dataclass(frozen=True)
class AnalysisReport:
    polynomial: BiPoly
    degree: int
    order: int
    milnor: ExtNat
    tangent_count: int
    bounds: BoundSet
    applicable: dict[str, bool]
    satisfied: dict[str, bool | None]
    skipped: dict[str, str]
    homogeneous: bool
    smooth: bool
    extremal: bool

    @property
    def non_isolated(self) -> bool:
        return not self.milnor.is_finite

    def to_json(self) -> dict:
        return {
            "polynomial": str(self.polynomial),
            "degree": self.degree,
            "order": self.order,
            "milnor": self.milnor.to_json(),
            "tangent_count": self.tangent_count,
            "bounds": self.bounds.as_dict(),
            "applicable": dict(self.applicable),
            "satisfied": dict(self.satisfied),
            "skipped": dict(self.skipped),
            "flags": {
                "homogeneous": self.homogeneous,
                "smooth": self.smooth,
                "extremal": self.extremal,
                "non_isolated": self.non_isolated,
            },
        }


def _unique_tangent_line(f: BiPoly) -> BiPoly | None:
    cone = f.lowest_form()
    sq = squarefree_part_binary(cone)
    return sq.form if sq.degree == 1 else None


def analyze_curve(f: BiPoly, assume_unibranch: bool = False, m: int | None = None) -> AnalysisReport:
    """Compute the local invariants of f at 0 and test every applicable bound.

    ``m`` is the number of components through the origin when the caller
    knows it; it enables the components bound.  The approximate-roots bound
    is applied only when ``assume_unibranch`` is set and the testable half
    of its hypothesis holds: one tangent meeting the curve exactly d times.
    """
    if f.is_zero() or f.is_constant():
        raise CurveError("polynomial must be nonconstant")
    if not f.vanishes_at_origin():
        raise CurveError("curve does not pass through origin")
    d = f.degree
    order = f.order().value
    mu = milnor_number(f)
    td = tangent_data(f)
    homogeneous = order == d

    skipped: dict[str, str] = {}
    am_ok = False
    if assume_unibranch:
        line = _unique_tangent_line(f)
        if line is None:
            skipped["am"] = "more than one tangent at 0"
        elif intersection_multiplicity(f, line) != d:
            skipped["am"] = "tangent does not meet the curve with multiplicity d"
        else:
            am_ok = True
    else:
        skipped["am"] = "unibranch not asserted"
    bounds = BoundSet.compute(d, order, m=m, am_applicable=am_ok)

    applicable = {
        "bezout": d > 1,
        "thm11": d > 1 and order < d,
        "lemma25": m is not None,
        "gz": order == 2,
        "am": am_ok,
    }
    if d <= 1:
        skipped["bezout"] = skipped["thm11"] = "degree d <= 1"
    elif homogeneous:
        skipped["thm11"] = "ord_0 f = d (homogeneous)"
    if m is None:
        skipped["lemma25"] = "component count unknown"
    if order != 2:
        skipped["gz"] = "ord_0 f != 2"

    satisfied: dict[str, bool | None] = {}
    values = bounds.as_dict()
    for name, ok in applicable.items():
        if not mu.is_finite:
            satisfied[name] = None
            if ok:
                skipped[name] = "non-isolated singularity"
        elif ok:
            satisfied[name] = mu <= values[name]
        else:
            satisfied[name] = None
    if not mu.is_finite:
        applicable = {k: False for k in applicable}

    extremal = applicable["thm11"] and mu == bounds.thm11
    return AnalysisReport(
        polynomial=f,
        degree=d,
        order=order,
        milnor=mu,
        tangent_count=td.distinct_count,
        bounds=bounds,
        applicable=applicable,
        satisfied=satisfied,
        skipped=skipped,
        homogeneous=homogeneous,
        smooth=order == 1,
        extremal=extremal,
    )


@dataclass(frozen=True)
class Lemma21Result:
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def check_lemma21_identity(c: FactoredCurve) -> Lemma21Result:
    """Both sides of mu(f) + m - 1 = sum mu(f_i) + 2 sum_{i<j} i_0(f_i, f_j)."""
    invariants = [c.milnor, *c.factor_milnors, *c.pairwise_i0.values()]
    if not all(v.is_finite for v in invariants):
        raise PreconditionError(["an invariant of the factorization is infinite"])
    lhs = c.milnor.value + c.m - 1
    rhs = sum(v.value for v in c.factor_milnors) + 2 * sum(v.value for v in c.pairwise_i0.values())
    return Lemma21Result(lhs, rhs)


@dataclass(frozen=True)
class LemmaReport:
    d: int
    m: int
    degrees: tuple[int, ...]
    milnor: int
    irreducibility_status: tuple[str, ...]
    hypotheses_ok: bool
    lemma21_identity_holds: bool
    lemma22_holds: bool | None
    lambda_pairs: tuple[tuple[int, int], ...]
    lemma24_bound: int
    lemma24_holds: bool | None
    lemma25_bound: int
    lemma25_holds: bool | None
    lemma25_equality_consistent: bool | None
    lemma27_count: int
    lemma27_holds: bool
    lemma28_applicable: bool
    lemma28_holds: bool | None
    lemma42_applicable: bool
    lemma42_holds: bool | None
    notes: tuple[str, ...] = field(default_factory=tuple)

    @property
    def lemma24_lambda_count(self) -> int:
        return len(self.lambda_pairs)

    def violations(self) -> list[str]:
        checks = {
            "lemma2.1": self.lemma21_identity_holds,
            "lemma2.2": self.lemma22_holds,
            "lemma2.4": self.lemma24_holds,
            "lemma2.5": self.lemma25_holds,
            "lemma2.5-equality": self.lemma25_equality_consistent,
            "lemma2.7": self.lemma27_holds,
            "lemma2.8": self.lemma28_holds,
            "lemma4.2": self.lemma42_holds,
        }
        return [name for name, ok in checks.items() if ok is False]

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "m": self.m,
            "degrees": list(self.degrees),
            "milnor": self.milnor,
            "irreducibility_status": list(self.irreducibility_status),
            "hypotheses_ok": self.hypotheses_ok,
            "lemma21_identity_holds": self.lemma21_identity_holds,
            "lemma22_holds": self.lemma22_holds,
            "lemma24": {
                "lambda_pairs": [list(p) for p in self.lambda_pairs],
                "lambda_count": self.lemma24_lambda_count,
                "bound": self.lemma24_bound,
                "holds": self.lemma24_holds,
            },
            "lemma25": {
                "bound": self.lemma25_bound,
                "holds": self.lemma25_holds,
                "equality_consistent": self.lemma25_equality_consistent,
            },
            "lemma27": {"count": self.lemma27_count, "bound": self.d - self.m, "holds": self.lemma27_holds},
            "lemma28": {"applicable": self.lemma28_applicable, "holds": self.lemma28_holds},
            "lemma42": {"applicable": self.lemma42_applicable, "holds": self.lemma42_holds},
            "notes": list(self.notes),
        }


def _common_tangent(polys: list[BiPoly]) -> bool:
    forms = [p.lowest_form().form for p in polys]
    return not reduce(gcd_bivariate, forms).is_constant()


def structural_lemma_checks(c: FactoredCurve) -> LemmaReport:
    """Evaluate the component-level inequalities on a factored curve.

    The inequalities need each factor to contribute one component through
    the origin.  A factor known to split there (a homogeneous form, a line
    pair) voids that hypothesis; the verdicts are then reported as None.
    """
    notes: list[str] = []
    mu = c.milnor.value
    d, m, degs = c.d, c.m, c.degrees
    statuses = c.statuses
    hyp = all(s != REDUCIBLE or has_one_local_component(p) for s, p in zip(statuses, c.factors))
    if not hyp:
        notes.append("a factor splits at the origin; component inequalities not evaluated")

    lemma21 = check_lemma21_identity(c).holds

    mus = [v.value for v in c.factor_milnors]
    lemma22 = all(mu_i <= irreducible_bound(di) for mu_i, di in zip(mus, degs)) if hyp else None

    lam = tuple(
        (i, j)
        for i, j in combinations(range(m), 2)
        if (degs[i] > 1 or degs[j] > 1) and not shares_common_tangent(c.factors[i], c.factors[j])
    )
    b24 = lambda_bound(d, m, len(lam))
    b25 = components_bound(d, m)
    lemma24 = mu <= b24 if hyp else None
    lemma25 = mu <= b25 if hyp else None
    eq25 = None
    if hyp:
        tight_parts = all(mu_i == irreducible_bound(di) for mu_i, di in zip(mus, degs)) and all(
            v.value == degs[i] * degs[j] for (i, j), v in c.pairwise_i0.items()
        )
        eq25 = (mu == b25) == tight_parts

    k = sum(1 for di in degs if di > 1)
    lemma27 = k <= d - m

    big = [p for p in c.factors if p.degree > 1]
    big_ok = all(s != REDUCIBLE for s, p in zip(statuses, c.factors) if p.degree > 1)
    l28_app = bool(big) and big_ok and _common_tangent(big)
    l28 = None
    if l28_app:
        prod = reduce(lambda a, b: a * b, big)
        count = tangent_data(prod).distinct_count
        l28 = count <= sum(p.degree - 1 for p in big) - len(big) + 1

    l42_app = hyp and d > 2 and mu == b25
    l42 = None
    if l42_app:
        one_tangent = all(t.distinct_count == 1 for t in c.tangents)
        full_contact = all(v.value == degs[i] * degs[j] for (i, j), v in c.pairwise_i0.items())
        l42 = one_tangent and full_contact
        if m < d:
            no_two_lines = sum(1 for di in degs if di == 1) <= 1
            no_2_3 = not (2 in degs and 3 in degs)
            l42 = l42 and no_two_lines and no_2_3

    return LemmaReport(
        d=d,
        m=m,
        degrees=degs,
        milnor=mu,
        irreducibility_status=statuses,
        hypotheses_ok=hyp,
        lemma21_identity_holds=lemma21,
        lemma22_holds=lemma22,
        lambda_pairs=lam,
        lemma24_bound=b24,
        lemma24_holds=lemma24,
        lemma25_bound=b25,
        lemma25_holds=lemma25,
        lemma25_equality_consistent=eq25,
        lemma27_count=k,
        lemma27_holds=lemma27,
        lemma28_applicable=l28_app,
        lemma28_holds=l28,
        lemma42_applicable=l42_app,
        lemma42_holds=l42,
        notes=tuple(notes),
    )


@dataclass(frozen=True)
class Thm14Result:
    d: int
    milnor: int
    i_holds: bool
    ii_holds: bool
    clauses: dict[str, bool]
    equivalence_ok: bool | None

    @property
    def d4_exception(self) -> bool:
        """d = 4 and (i), (ii) disagree: allowed, the equivalence needs d != 4."""
        return self.d == 4 and self.i_holds != self.ii_holds

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "milnor": self.milnor,
            "i_holds": self.i_holds,
            "ii_holds": self.ii_holds,
            "clauses": dict(self.clauses),
            "equivalence_ok": self.equivalence_ok,
            "d4_exception": self.d4_exception,
        }


def check_thm14(c: FactoredCurve) -> Thm14Result:
    """Test both sides of the characterization of curves attaining the bound.

    (i) is mu_0 = (d-1)^2 - floor(d/2).  (ii) is the structural description:
    d - floor(d/2) components, all conics (plus one line when d is odd),
    conics verified irreducible and meeting pairwise with multiplicity 4,
    and the line tangent to every conic.
    """
    d = c.d
    if d <= 2:
        raise PreconditionError([f"degree d = {d} must exceed 2"])
    mu = c.milnor.value
    i_holds = mu == nonhomogeneous_bound(d)

    degs = sorted(c.degrees, reverse=True)
    expected = [2] * (d // 2) + ([1] if d % 2 else [])
    conics = [p for p in c.factors if p.degree == 2]
    lines = [p for p in c.factors if p.degree == 1]
    clauses = {
        "component_count": c.m == d - d // 2,
        "degree_pattern": degs == expected,
        "conics_irreducible": all(s == VERIFIED_CONIC for s, p in zip(c.statuses, c.factors) if p.degree == 2),
        "conic_contact_4": all(intersection_multiplicity(a, b) == 4 for a, b in combinations(conics, 2)),
    }
    if d % 2:
        clauses["line_tangent_to_conics"] = len(lines) == 1 and all(
            is_tangent_line(q, lines[0].lowest_form().form) for q in conics
        )
    ii_holds = all(clauses.values())
    equivalence = None if d == 4 else i_holds == ii_holds
    return Thm14Result(d, mu, i_holds, ii_holds, clauses, equivalence)


def lemma41_problems(cubic: BiPoly, conic: BiPoly) -> list[str]:
    problems = []
    if cubic.degree != 3:
        problems.append(f"cubic has degree {cubic.degree}, expected 3")
    elif not cubic.vanishes_at_origin() or cubic.order() < 2:
        problems.append("cubic is not singular at the origin")
    else:
        if tangent_data(cubic).distinct_count != 1:
            problems.append("cubic does not have exactly one tangent at the origin")
        if irreducibility_status(cubic) == REDUCIBLE:
            problems.append("cubic is reducible")
    if conic.degree != 2:
        problems.append(f"conic has degree {conic.degree}, expected 2")
    elif not conic.vanishes_at_origin():
        problems.append("conic does not pass through the origin")
    else:
        if irreducibility_status(conic) != VERIFIED_CONIC:
            problems.append("conic is reducible")
    return problems


def check_lemma41(cubic: BiPoly, conic: BiPoly) -> bool:
    """i_0(cubic, conic) < 6 for a one-tangent singular cubic and a conic through 0."""
    problems = lemma41_problems(cubic, conic)
    if problems:
        raise PreconditionError(problems)
    return intersection_multiplicity(cubic, conic) < 6

