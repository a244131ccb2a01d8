"""Bounds, lemma checkers, extremal families and fuzz campaigns."""

from .bounds import BoundSet
from .checks import (
    AnalysisReport,
    CurveError,
    Lemma21Result,
    LemmaReport,
    PreconditionError,
    Thm14Result,
    analyze_curve,
    check_lemma21_identity,
    check_lemma41,
    check_thm14,
    structural_lemma_checks,
)
from .curves import FactoredCurve, NonIsolatedSingularity, irreducibility_status, split_units
from .families import gen_extremal, gen_irreducible_max
from .fuzz import FuzzBudgetExceeded, FuzzConfig, FuzzSummary, fuzz_campaign, random_factored_curve, random_lemma41_pair, trial_rng

__all__ = [
    "AnalysisReport",
    "BoundSet",
    "CurveError",
    "FactoredCurve",
    "FuzzBudgetExceeded",
    "FuzzConfig",
    "FuzzSummary",
    "Lemma21Result",
    "LemmaReport",
    "NonIsolatedSingularity",
    "PreconditionError",
    "Thm14Result",
    "analyze_curve",
    "check_lemma21_identity",
    "check_lemma41",
    "check_thm14",
    "fuzz_campaign",
    "gen_extremal",
    "gen_irreducible_max",
    "irreducibility_status",
    "random_factored_curve",
    "random_lemma41_pair",
    "split_units",
    "structural_lemma_checks",
    "trial_rng",
]
