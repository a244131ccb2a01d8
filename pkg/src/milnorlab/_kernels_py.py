"""Pure-Python hot loops.

``_kernels.pyx`` is a typed copy of this file; :mod:`milnorlab.kernels`
picks whichever is importable.  Keep the two in lockstep.
"""

from math import gcd


def poly_mul(a, b):
    """Product of two term dicts ``{(i, j): coeff}``; zero terms dropped."""
    if len(a) < len(b):
        a, b = b, a
    out = {}
    for (i1, j1), c1 in b.items():
        for (i2, j2), c2 in a.items():
            key = (i1 + i2, j1 + j2)
            v = out.get(key, 0) + c1 * c2
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    return out


def _primitive(terms):
    g = 0
    for v in terms.values():
        g = gcd(g, v)
        if g == 1:
            return terms
    if g > 1:
        return {k: v // g for k, v in terms.items()}
    return terms


def _top_degree_on_x_axis(terms):
    r = -1
    for (i, j) in terms:
        if j == 0 and i > r:
            r = i
    return r


def _truncate(terms, cap):
    return {e: c for e, c in terms.items() if e[0] + e[1] <= cap}


def fulton(f, g, bound):
    """Intersection multiplicity at the origin of two integer polynomials.

    ``f`` and ``g`` are term dicts with integer coefficients that share no
    component through the origin (the caller checks this).  Works with the
    degrees r, s of f(x, 0), g(x, 0): the one with the smaller degree is
    used to cancel the leading x-term of the other, and when f(x, 0) is
    identically zero, f = y*h splits off ord_x g(x, 0).

    ``bound`` must be an upper bound for the answer (deg f * deg g will do).
    The ideal left to process then contains m^(bound - total), so terms of
    higher degree never affect the result and are dropped as we go.
    """
    total = 0
    f = _truncate(f, bound)
    g = _truncate(g, bound)
    while True:
        if (0, 0) in f or (0, 0) in g:
            return total
        r = _top_degree_on_x_axis(f)
        s = _top_degree_on_x_axis(g)
        if r > s:
            f, g = g, f
            r, s = s, r
        if r < 0:
            if s < 0:
                raise ValueError("inputs share the component y = 0")
            total += min(i for (i, j) in g if j == 0)
            f = {(i, j - 1): c for (i, j), c in f.items()}
            continue
        a = f[(r, 0)]
        b = g[(s, 0)]
        d = gcd(a, b)
        a //= d
        b //= d
        k = s - r
        new = {e: a * c for e, c in g.items()}
        for (i, j), c in f.items():
            key = (i + k, j)
            v = new.get(key, 0) - b * c
            if v:
                new[key] = v
            else:
                new.pop(key, None)
        new = _truncate(new, bound - total)
        if not new:
            raise ValueError("inputs share a common component or bound is too small")
        g = _primitive(new)


def sparse_rank(rows):
    """Rank over Q of integer row vectors given as ``{column: value}`` dicts.

    Fraction-free elimination on the lowest column index, with each stored
    row divided by its content.
    """
    pivots = {}
    for row in rows:
        row = {k: v for k, v in row.items() if v}
        while row:
            c = min(row)
            p = pivots.get(c)
            if p is None:
                pivots[c] = _primitive(row)
                break
            a = p[c]
            b = row[c]
            d = gcd(a, b)
            a //= d
            b //= d
            new = {k: a * v for k, v in row.items()}
            for k, v in p.items():
                nv = new.get(k, 0) - b * v
                if nv:
                    new[k] = nv
                else:
                    new.pop(k, None)
            row = _primitive(new)
    return len(pivots)
