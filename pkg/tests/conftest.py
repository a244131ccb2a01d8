from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from milnorlab import BiPoly

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

small_coeffs = st.integers(-5, 5)
rational_coeffs = st.fractions(min_value=-4, max_value=4, max_denominator=5)


def bipolys(max_deg=3, coeffs=small_coeffs, max_terms=5, through_origin=False):
    lo = 1 if through_origin else 0
    exps = st.tuples(st.integers(0, max_deg), st.integers(0, max_deg)).filter(
        lambda e: lo <= e[0] + e[1] <= max_deg
    )
    return st.dictionaries(exps, coeffs, max_size=max_terms).map(BiPoly)


def nonzero(strategy):
    return strategy.filter(lambda p: not p.is_zero())


F = Fraction
