"""Seeded random-curve campaigns against the bounds and lemmas.

Randomness: every trial draws from its own PCG64 stream, seeded by numpy's
``SeedSequence(entropy=seed, spawn_key=(trial,))``.  A violation is therefore
replayed from ``(seed, trial)`` alone, in any order and in any process.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from ..gcd import are_coprime, is_squarefree
from ..oracle import OracleCapExceeded, local_quotient_dimension, milnor_oracle
from ..poly import BiPoly
from .bounds import double_point_bound, nonhomogeneous_bound
from .checks import check_lemma21_identity, lemma41_problems, structural_lemma_checks
from .curves import FactoredCurve, has_one_local_component

MAX_SEED = 2**64


class FuzzBudgetExceeded(RuntimeError):
    """No valid curve was found within the resampling budget."""


@dataclass(frozen=True)
class FuzzConfig:
    seed: int = 0
    trials: int = 100
    max_factors: int = 4
    max_degree: int = 3
    coeff_bound: int = 9
    oracle_subsample: int = 0
    singular_bias: float = 0.25
    tangent_bias: float = 0.5
    max_resamples: int = 1000
    oracle_milnor_cap: int = 8
    jobs: int = 1

    def validate(self) -> None:
        if not 0 <= self.seed < MAX_SEED:
            raise ValueError("seed must fit in 64 bits")
        if self.trials < 0:
            raise ValueError("trials must be nonnegative")
        if self.max_factors < 1:
            raise ValueError("max_factors must be at least 1")
        if self.max_degree < 1:
            raise ValueError("max_degree must be at least 1")
        if self.coeff_bound < 1:
            raise ValueError("coefficient range {0} cannot produce nonconstant factors")
        if self.oracle_subsample < 0:
            raise ValueError("oracle_subsample must be nonnegative")
        if not (0 <= self.singular_bias <= 1 and 0 <= self.tangent_bias <= 1):
            raise ValueError("biases must lie in [0, 1]")
        if self.max_resamples < 1 or self.jobs < 1:
            raise ValueError("max_resamples and jobs must be positive")


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(entropy=seed, spawn_key=(trial,))))


def _randint(rng: np.random.Generator, lo: int, hi: int) -> int:
    return int(rng.integers(lo, hi + 1))


def _nonzero_linear(rng: np.random.Generator, bound: int) -> tuple[int, int]:
    while True:
        a, b = _randint(rng, -bound, bound), _randint(rng, -bound, bound)
        if a or b:
            return a, b


def random_factor(rng: np.random.Generator, cfg: FuzzConfig, shared: tuple[int, int] | None) -> BiPoly:
    """A nonzero polynomial of degree <= max_degree with zero constant term."""
    B = cfg.coeff_bound
    while True:
        deg = _randint(rng, 1, cfg.max_degree)
        terms = {(k - j, j): _randint(rng, -B, B) for k in range(1, deg + 1) for j in range(k + 1)}
        if deg >= 2 and rng.random() < cfg.singular_bias:
            terms[(1, 0)] = terms[(0, 1)] = 0
        elif shared is not None and rng.random() < 0.5:
            terms[(1, 0)], terms[(0, 1)] = shared
        p = BiPoly(terms)
        if not p.is_zero():
            return p


@dataclass
class _Stats:
    resampled: int = 0
    non_isolated: int = 0


def random_factored_curve(rng: np.random.Generator, cfg: FuzzConfig, stats: _Stats | None = None) -> FactoredCurve:
    """Draw 1..max_factors factors until they form a valid factored curve.

    Each factor must be certified to carry exactly one component through the
    origin; the list must be squarefree and pairwise coprime.
    """
    stats = stats if stats is not None else _Stats()
    for _ in range(cfg.max_resamples):
        m = _randint(rng, 1, cfg.max_factors)
        shared = _nonzero_linear(rng, cfg.coeff_bound) if rng.random() < cfg.tangent_bias else None
        factors = [random_factor(rng, cfg, shared) for _ in range(m)]
        if not all(has_one_local_component(p) for p in factors):
            stats.resampled += 1
            continue
        if not all(is_squarefree(p) for p in factors) or any(
            not are_coprime(a, b) for i, a in enumerate(factors) for b in factors[i + 1 :]
        ):
            stats.non_isolated += 1
            continue
        curve = FactoredCurve(tuple(factors))
        if not curve.milnor.is_finite:
            stats.non_isolated += 1
            continue
        return curve
    raise FuzzBudgetExceeded(f"no valid curve after {cfg.max_resamples} draws")


def random_lemma41_pair(rng: np.random.Generator, bound: int = 9) -> tuple[BiPoly, BiPoly]:
    """A cuspidal cubic a*l^2 + c (l a line, c a cubic form with l not dividing c)
    and an irreducible conic through 0, tangent to l about half the time."""
    x, y = BiPoly.x(), BiPoly.y()
    while True:
        al, be = _nonzero_linear(rng, bound)
        ln = x.scale(al) + y.scale(be)
        a = _randint(rng, 1, bound) * (1 if rng.random() < 0.5 else -1)
        c3 = BiPoly({(3 - j, j): _randint(rng, -bound, bound) for j in range(4)})
        cubic = ln * ln * BiPoly.constant(a) + c3
        quad = {(2 - j, j): _randint(rng, -bound, bound) for j in range(3)}
        if rng.random() < 0.5:
            k = _randint(rng, 1, bound)
            lin = {(1, 0): k * al, (0, 1): k * be}
        else:
            u, v = _nonzero_linear(rng, bound)
            lin = {(1, 0): u, (0, 1): v}
        conic = BiPoly({**quad, **lin})
        if c3.is_zero() or ln.divides(c3) or lemma41_problems(cubic, conic):
            continue
        return cubic, conic


@dataclass(frozen=True)
class Violation:
    trial: int
    prop: str
    factors: tuple[str, ...]
    detail: str

    def reproducer(self, seed: int) -> str:
        return f"{seed}:{self.trial}"


@dataclass
class TrialOutcome:
    trial: int
    checks: dict[str, int] = field(default_factory=dict)
    violations: list[Violation] = field(default_factory=list)
    skips: dict[str, int] = field(default_factory=dict)


@dataclass(frozen=True)
class FuzzSummary:
    config: FuzzConfig
    trials_run: int
    checks: dict[str, int]
    violations: tuple[Violation, ...]
    skips: dict[str, int]

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "config": asdict(self.config),
            "trials_run": self.trials_run,
            "checks": dict(sorted(self.checks.items())),
            "violation_count": len(self.violations),
            "violations": [
                {**asdict(v), "factors": list(v.factors), "reproducer": v.reproducer(self.config.seed)}
                for v in self.violations
            ],
            "skips": dict(sorted(self.skips.items())),
        }


def run_trial(cfg: FuzzConfig, trial: int) -> TrialOutcome:
    rng = trial_rng(cfg.seed, trial)
    stats = _Stats()
    curve = random_factored_curve(rng, cfg, stats)
    out = TrialOutcome(trial, skips={"resampled": stats.resampled, "non_isolated": stats.non_isolated})
    names = tuple(str(p) for p in curve.factors)

    def record(prop: str, ok: bool, detail: str = "") -> None:
        out.checks[prop] = out.checks.get(prop, 0) + 1
        if not ok:
            out.violations.append(Violation(trial, prop, names, detail))

    f = curve.product
    d, order, mu = curve.d, f.order().value, curve.milnor.value

    l21 = check_lemma21_identity(curve)
    record("lemma2.1", l21.holds, f"lhs={l21.lhs} rhs={l21.rhs}")

    if order < d:
        record("thm1.1", mu <= nonhomogeneous_bound(d), f"mu={mu} bound={nonhomogeneous_bound(d)}")
    else:
        out.skips["homogeneous"] = out.skips.get("homogeneous", 0) + 1
    if order == 2:
        record("gz", mu <= double_point_bound(d), f"mu={mu} bound={double_point_bound(d)}")

    rep = structural_lemma_checks(curve)
    for prop, verdict, detail in (
        ("lemma2.2", rep.lemma22_holds, f"factor milnors vs (d_i-1)(d_i-2), degrees={rep.degrees}"),
        ("lemma2.4", rep.lemma24_holds, f"mu={mu} bound={rep.lemma24_bound} lambda={rep.lemma24_lambda_count}"),
        ("lemma2.5", rep.lemma25_holds, f"mu={mu} bound={rep.lemma25_bound}"),
        ("lemma2.5-equality", rep.lemma25_equality_consistent, "equality case mismatch"),
        ("lemma2.7", rep.lemma27_holds, f"k={rep.lemma27_count} d-m={d - curve.m}"),
        ("lemma2.8", rep.lemma28_holds, "tangent count of the nonlinear factors"),
        ("lemma4.2", rep.lemma42_holds, "structure of a components-bound extremal curve"),
    ):
        if verdict is not None:
            record(prop, verdict, detail)

    if trial < cfg.oracle_subsample:
        try:
            for (i, j), v in curve.pairwise_i0.items():
                w = local_quotient_dimension(curve.factors[i], curve.factors[j])
                record("oracle-i0", v == w, f"pair ({i},{j}): fulton={v} oracle={w}")
            for p, v in zip(curve.factors, curve.factor_milnors):
                w = milnor_oracle(p)
                record("oracle-milnor", v == w, f"factor {p}: fulton={v} oracle={w}")
            if mu <= cfg.oracle_milnor_cap:
                w = milnor_oracle(f)
                record("oracle-milnor", curve.milnor == w, f"product: fulton={mu} oracle={w}")
        except OracleCapExceeded:
            out.skips["oracle_cap"] = out.skips.get("oracle_cap", 0) + 1
    return out


def _run_chunk(args: tuple[FuzzConfig, list[int]]) -> list[TrialOutcome]:
    cfg, trials = args
    return [run_trial(cfg, t) for t in trials]


def fuzz_campaign(cfg: FuzzConfig) -> FuzzSummary:
    """Run ``cfg.trials`` independent trials and merge them in trial order."""
    cfg.validate()
    indices = list(range(cfg.trials))
    if cfg.jobs > 1 and cfg.trials > 1:
        chunks = [indices[k :: cfg.jobs] for k in range(cfg.jobs)]
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            outcomes = [o for part in pool.map(_run_chunk, [(cfg, c) for c in chunks]) for o in part]
    else:
        outcomes = [run_trial(cfg, t) for t in indices]
    outcomes.sort(key=lambda o: o.trial)

    checks: dict[str, int] = {}
    skips: dict[str, int] = {"homogeneous": 0, "non_isolated": 0, "oracle_cap": 0, "resampled": 0}
    violations: list[Violation] = []
    for o in outcomes:
        for k, v in o.checks.items():
            checks[k] = checks.get(k, 0) + v
        for k, v in o.skips.items():
            skips[k] = skips.get(k, 0) + v
        violations.extend(o.violations)
    violations.sort(key=lambda v: (v.trial, v.prop))
    return FuzzSummary(cfg, len(outcomes), checks, tuple(violations), skips)


def replay_trial(seed: int, trial: int, cfg: FuzzConfig | None = None) -> FactoredCurve:
    """Regenerate the curve of one trial from its reproducer."""
    cfg = cfg or FuzzConfig(seed=seed)
    return random_factored_curve(trial_rng(seed, trial), cfg)
