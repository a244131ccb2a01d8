from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from milnorlab import _kernels_py, kernels

try:
    from milnorlab import _kernels as _kernels_c
except ImportError:  # extension not built
    _kernels_c = None

BACKENDS = [_kernels_py] + ([_kernels_c] if _kernels_c is not None else [])
ids = [b.__name__.rsplit(".", 1)[-1] for b in BACKENDS]

int_terms = st.dictionaries(
    st.tuples(st.integers(0, 4), st.integers(0, 4)), st.integers(-9, 9).filter(bool), max_size=6
)
rows = st.lists(st.dictionaries(st.integers(0, 7), st.integers(-6, 6), max_size=5), max_size=9)


def naive_rank(rows, ncols=8):
    m = [[Fraction(r.get(c, 0)) for c in range(ncols)] for r in rows]
    rank = 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][c]:
                t = m[i][c] / m[rank][c]
                m[i] = [u - t * v for u, v in zip(m[i], m[rank])]
        rank += 1
    return rank


def test_backend_selected():
    assert kernels.BACKEND in ("cython", "python")


@pytest.mark.parametrize("impl", BACKENDS, ids=ids)
@given(a=int_terms, b=int_terms)
def test_poly_mul_matches_schoolbook(impl, a, b):
    expected = {}
    for (i, j), u in a.items():
        for (k, l), v in b.items():
            expected[(i + k, j + l)] = expected.get((i + k, j + l), 0) + u * v
    expected = {e: c for e, c in expected.items() if c}
    assert impl.poly_mul(a, b) == expected


@pytest.mark.parametrize("impl", BACKENDS, ids=ids)
@given(rows=rows)
def test_sparse_rank(impl, rows):
    assert impl.sparse_rank(rows) == naive_rank(rows)


@pytest.mark.parametrize("impl", BACKENDS, ids=ids)
def test_fulton_examples(impl):
    # x + x^2 + y^2 and x + 2x^2 + y^2 meet with multiplicity 4
    f = {(1, 0): 1, (2, 0): 1, (0, 2): 1}
    g = {(1, 0): 1, (2, 0): 2, (0, 2): 1}
    assert impl.fulton(f, g, 4) == 4
    assert impl.fulton({(0, 1): 1, (2, 0): -1}, {(0, 1): 1}, 2) == 2
    with pytest.raises(ValueError):
        impl.fulton({(1, 1): 1}, {(1, 0): 1}, 2)


@settings(max_examples=80)
@given(f=int_terms, g=int_terms)
def test_backends_agree_on_fulton(f, g):
    f = {e: c for e, c in f.items() if sum(e) > 0}
    g = {e: c for e, c in g.items() if sum(e) > 0}
    if not f or not g:
        return
    bound = max(map(sum, f)) * max(map(sum, g))
    results = []
    for impl in BACKENDS:
        try:
            results.append(impl.fulton(dict(f), dict(g), bound))
        except ValueError:
            results.append("shared")
    assert len(set(results)) == 1
