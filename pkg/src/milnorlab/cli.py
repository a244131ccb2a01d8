"""Command-line front end.

Exit codes: 0 report produced / property holds, 1 a checked property was
violated, 2 bad input, 3 the oracle hit its truncation cap.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .extnat import ExtNat
from .oracle import OracleCapExceeded
from .parsing import PolynomialSyntaxError, parse_poly
from .poly import BiPoly
from .theorem_lab import (
    CurveError,
    FactoredCurve,
    FuzzBudgetExceeded,
    FuzzConfig,
    NonIsolatedSingularity,
    PreconditionError,
    analyze_curve,
    check_lemma21_identity,
    check_lemma41,
    check_thm14,
    fuzz_campaign,
    gen_extremal,
    gen_irreducible_max,
    structural_lemma_checks,
)
from .theorem_lab.bounds import irreducible_bound, nonhomogeneous_bound
from .local import intersection_multiplicity

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


class InputError(Exception):
    pass


def _emit(payload: dict, fmt: str, text_lines: list[str]) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        print("\n".join(text_lines))


def _fmt(v) -> str:
    if v is None:
        return "n/a"
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, ExtNat):
        return "infinity" if not v.is_finite else str(v.value)
    return str(v)


def _parse(text: str) -> BiPoly:
    try:
        return parse_poly(text)
    except PolynomialSyntaxError as exc:
        raise InputError(f"cannot parse {text!r}: {exc}") from exc


def _curve(factors: list[str]) -> FactoredCurve:
    polys = [_parse(t) for t in factors]
    for p, t in zip(polys, factors):
        if p.is_constant():
            raise InputError(f"factor {t!r} is constant")
        if not p.vanishes_at_origin():
            raise InputError(f"factor {t!r}: curve does not pass through origin")
    try:
        return FactoredCurve(tuple(polys))
    except NonIsolatedSingularity as exc:
        raise InputError(f"non-isolated singularity: {exc}") from exc


def cmd_analyze(args) -> int:
    f = _parse(args.poly)
    try:
        rep = analyze_curve(f, assume_unibranch=args.assume_unibranch)
    except CurveError as exc:
        raise InputError(str(exc)) from exc
    payload = rep.to_json()
    lines = [
        f"polynomial     {rep.polynomial}",
        f"degree         {rep.degree}",
        f"order          {rep.order}",
        f"milnor         {_fmt(rep.milnor)}",
        f"tangent_count  {rep.tangent_count}",
        "bounds:",
    ]
    for name, value in rep.bounds.as_dict().items():
        status = "n/a" if not rep.applicable[name] else ("satisfied" if rep.satisfied[name] else "VIOLATED")
        reason = f"  ({rep.skipped[name]})" if name in rep.skipped else ""
        lines.append(f"  {name:<8} {_fmt(value):>6}  {status}{reason}")
    lines.append(
        f"flags          homogeneous={_fmt(rep.homogeneous)} smooth={_fmt(rep.smooth)} "
        f"extremal={_fmt(rep.extremal)} non_isolated={_fmt(rep.non_isolated)}"
    )
    _emit(payload, args.format, lines)
    return EXIT_OK


def _verify_thm11(args) -> int:
    if args.poly:
        f = _parse(args.poly)
    elif args.factor:
        f = _curve(args.factor).product
    else:
        raise InputError("thm1.1 needs --poly or --factor")
    try:
        rep = analyze_curve(f)
    except CurveError as exc:
        raise InputError(str(exc)) from exc
    ok = rep.satisfied["thm11"]
    payload = {
        "check": "thm1.1",
        "polynomial": str(f),
        "degree": rep.degree,
        "order": rep.order,
        "milnor": rep.milnor.to_json(),
        "bound": rep.bounds.thm11,
        "applicable": rep.applicable["thm11"],
        "holds": ok,
        "reason": rep.skipped.get("thm11"),
    }
    lines = [
        f"thm1.1: mu = {_fmt(rep.milnor)}, bound (d-1)^2 - [d/2] = {rep.bounds.thm11}",
        f"applicable: {_fmt(rep.applicable['thm11'])}" + (f" ({rep.skipped['thm11']})" if "thm11" in rep.skipped else ""),
        f"holds: {_fmt(ok)}",
    ]
    _emit(payload, args.format, lines)
    return EXIT_VIOLATION if ok is False else EXIT_OK


def _verify_thm14(args) -> int:
    curve = _curve(args.factor)
    try:
        res = check_thm14(curve)
    except PreconditionError as exc:
        raise InputError(f"thm1.4: {exc}") from exc
    payload = {"check": "thm1.4", "factors": [str(p) for p in curve.factors], **res.to_json()}
    lines = [
        f"thm1.4: d = {res.d}, mu = {res.milnor}, target (d-1)^2 - [d/2] = {nonhomogeneous_bound(res.d)}",
        f"(i)  holds: {_fmt(res.i_holds)}",
        f"(ii) holds: {_fmt(res.ii_holds)}",
    ]
    lines += [f"     {k}: {_fmt(v)}" for k, v in res.clauses.items()]
    if res.d == 4:
        note = " (d = 4 exception: (i) without (ii) is permitted)" if res.d4_exception else ""
        lines.append(f"equivalence: not asserted for d = 4{note}")
    else:
        lines.append(f"equivalence (i) <=> (ii): {_fmt(res.equivalence_ok)}")
    _emit(payload, args.format, lines)
    return EXIT_VIOLATION if res.equivalence_ok is False else EXIT_OK


def _verify_lemma21(args) -> int:
    curve = _curve(args.factor)
    res = check_lemma21_identity(curve)
    payload = {
        "check": "lemma2.1",
        "factors": [str(p) for p in curve.factors],
        "milnor": curve.milnor.to_json(),
        "factor_milnors": [v.to_json() for v in curve.factor_milnors],
        "pairwise_i0": {f"{i},{j}": v.to_json() for (i, j), v in curve.pairwise_i0.items()},
        "lhs": res.lhs,
        "rhs": res.rhs,
        "holds": res.holds,
    }
    lines = [
        f"lemma2.1: mu(f) + m - 1 = {res.lhs}",
        f"          sum mu(f_i) + 2 sum i0(f_i, f_j) = {res.rhs}",
        f"holds: {_fmt(res.holds)}",
    ]
    _emit(payload, args.format, lines)
    return EXIT_OK if res.holds else EXIT_VIOLATION


def _verify_lemmas(args) -> int:
    curve = _curve(args.factor)
    rep = structural_lemma_checks(curve)
    payload = {"check": "lemmas", "factors": [str(p) for p in curve.factors], **rep.to_json()}
    lines = [
        f"d = {rep.d}, m = {rep.m}, degrees = {list(rep.degrees)}, mu = {rep.milnor}",
        f"irreducibility: {', '.join(rep.irreducibility_status)}",
        f"lemma2.1 identity: {_fmt(rep.lemma21_identity_holds)}",
        f"lemma2.2 factor bounds: {_fmt(rep.lemma22_holds)}",
        f"lemma2.4: #Lambda = {rep.lemma24_lambda_count}, bound {rep.lemma24_bound}, holds {_fmt(rep.lemma24_holds)}",
        f"lemma2.5: bound {rep.lemma25_bound}, holds {_fmt(rep.lemma25_holds)}, "
        f"equality case consistent {_fmt(rep.lemma25_equality_consistent)}",
        f"lemma2.7: {rep.lemma27_count} <= {rep.d - rep.m}, holds {_fmt(rep.lemma27_holds)}",
        f"lemma2.8: applicable {_fmt(rep.lemma28_applicable)}, holds {_fmt(rep.lemma28_holds)}",
        f"lemma4.2: applicable {_fmt(rep.lemma42_applicable)}, holds {_fmt(rep.lemma42_holds)}",
    ]
    lines += [f"note: {n}" for n in rep.notes]
    _emit(payload, args.format, lines)
    return EXIT_VIOLATION if rep.violations() else EXIT_OK


def _verify_lemma41(args) -> int:
    if not args.factor or len(args.factor) != 2:
        raise InputError("lemma4.1 needs exactly two --factor arguments: the cubic, then the conic")
    cubic, conic = (_parse(t) for t in args.factor)
    try:
        ok = check_lemma41(cubic, conic)
    except PreconditionError as exc:
        raise InputError(f"lemma4.1 preconditions: {exc}") from exc
    i0 = intersection_multiplicity(cubic, conic)
    payload = {"check": "lemma4.1", "cubic": str(cubic), "conic": str(conic), "i0": i0.to_json(), "holds": ok}
    lines = [f"lemma4.1: i0(cubic, conic) = {_fmt(i0)} < 6: {_fmt(ok)}"]
    _emit(payload, args.format, lines)
    return EXIT_OK if ok else EXIT_VIOLATION


_VERIFIERS = {
    "thm1.1": _verify_thm11,
    "thm1.4": _verify_thm14,
    "lemma2.1": _verify_lemma21,
    "lemmas": _verify_lemmas,
    "lemma4.1": _verify_lemma41,
}


def cmd_verify(args) -> int:
    if args.check != "thm1.1" and not args.factor:
        raise InputError(f"{args.check} needs at least one --factor")
    return _VERIFIERS[args.check](args)


def cmd_generate(args) -> int:
    d = args.degree
    if d < 2:
        raise InputError(f"degree must be at least 2, got {d}")
    if args.family == "extremal":
        curve = gen_extremal(d)
        factors = [str(p) for p in curve.factors]
        product, mu, bound = curve.product, curve.milnor, nonhomogeneous_bound(d)
    else:
        product = gen_irreducible_max(d)
        factors = [str(product)]
        curve = FactoredCurve((product,))
        mu, bound = curve.milnor, irreducible_bound(d)
    payload = {
        "family": args.family,
        "degree": d,
        "factors": factors,
        "polynomial": str(product),
        "milnor": mu.to_json(),
        "bound": bound,
    }
    lines = [*factors, f"mu = {_fmt(mu)}", f"bound = {bound}"]
    _emit(payload, args.format, lines)
    return EXIT_OK


def cmd_fuzz(args) -> int:
    cfg = FuzzConfig(
        seed=args.seed,
        trials=args.trials,
        max_factors=args.max_factors,
        max_degree=args.max_degree,
        coeff_bound=args.coeff_bound,
        oracle_subsample=args.oracle_subsample,
        jobs=args.jobs,
    )
    try:
        cfg.validate()
    except ValueError as exc:
        raise InputError(f"invalid fuzz configuration: {exc}") from exc
    try:
        summary = fuzz_campaign(cfg)
    except FuzzBudgetExceeded as exc:
        raise InputError(str(exc)) from exc
    payload = summary.to_json()
    lines = [
        f"fuzz seed={cfg.seed} trials={summary.trials_run} max_factors={cfg.max_factors} "
        f"max_degree={cfg.max_degree} coeff_bound={cfg.coeff_bound} oracle_subsample={cfg.oracle_subsample}",
        "checks:",
    ]
    lines += [f"  {k:<18} {v}" for k, v in sorted(summary.checks.items())]
    lines.append("skips:")
    lines += [f"  {k:<18} {v}" for k, v in sorted(summary.skips.items())]
    lines.append(f"violations: {len(summary.violations)}")
    for v in summary.violations:
        lines.append(f"  [{v.reproducer(cfg.seed)}] {v.prop}: {v.detail}; factors {', '.join(v.factors)}")
    _emit(payload, args.format, lines)
    if summary.violations:
        return EXIT_VIOLATION
    if summary.skips.get("oracle_cap", 0):
        return EXIT_CAP
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="milnorlab",
        description="Local invariants of plane curves at the origin and checks of the Milnor number bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("analyze", help="invariants and bounds for one polynomial")
    p.add_argument("--poly", required=True)
    p.add_argument("--assume-unibranch", action="store_true")
    add_format(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="run a theorem or lemma checker")
    p.add_argument("check", choices=tuple(_VERIFIERS))
    p.add_argument("--poly")
    p.add_argument("--factor", action="append", default=[])
    add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", help="emit a member of an extremal family")
    p.add_argument("--family", choices=("extremal", "irreducible-max"), required=True)
    p.add_argument("--degree", type=int, required=True)
    add_format(p)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("fuzz", help="seeded random-curve campaign")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--max-factors", type=int, default=4)
    p.add_argument("--max-degree", type=int, default=3)
    p.add_argument("--coeff-bound", type=int, default=9)
    p.add_argument("--oracle-subsample", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    add_format(p)
    p.set_defaults(func=cmd_fuzz)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OracleCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
