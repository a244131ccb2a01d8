# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``_kernels_py``; same functions, same results.

Coefficients stay Python objects (arbitrary-precision ints or Fractions);
the gains come from typed exponent arithmetic and C-level loops.
"""

from math import gcd


def poly_mul(dict a, dict b):
    cdef dict out = {}
    cdef Py_ssize_t i1, j1, i2, j2
    cdef object c1, c2, v, key
    cdef list bl, al
    if len(a) < len(b):
        a, b = b, a
    al = [(k[0], k[1], c) for k, c in a.items()]
    bl = [(k[0], k[1], c) for k, c in b.items()]
    for i1, j1, c1 in bl:
        for i2, j2, c2 in al:
            key = (i1 + i2, j1 + j2)
            v = out.get(key, 0) + c1 * c2
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    return out


cdef dict _primitive(dict terms):
    cdef object g = 0
    cdef object v
    for v in terms.values():
        g = gcd(g, v)
        if g == 1:
            return terms
    if g > 1:
        return {k: v // g for k, v in terms.items()}
    return terms


cdef Py_ssize_t _top_degree_on_x_axis(dict terms):
    cdef Py_ssize_t r = -1
    cdef Py_ssize_t i, j
    for i, j in terms:
        if j == 0 and i > r:
            r = i
    return r


cdef dict _truncate(dict terms, Py_ssize_t cap):
    cdef dict out = {}
    cdef tuple e
    for e, c in terms.items():
        if <Py_ssize_t>e[0] + <Py_ssize_t>e[1] <= cap:
            out[e] = c
    return out


def fulton(f, g, Py_ssize_t bound):
    cdef Py_ssize_t total = 0
    cdef dict ff = _truncate(dict(f), bound)
    cdef dict gg = _truncate(dict(g), bound)
    cdef dict new, tmp
    cdef Py_ssize_t r, s, k, i, j, low
    cdef object a, b, d, c, v, key
    while True:
        if (0, 0) in ff or (0, 0) in gg:
            return total
        r = _top_degree_on_x_axis(ff)
        s = _top_degree_on_x_axis(gg)
        if r > s:
            tmp = ff
            ff = gg
            gg = tmp
            r, s = s, r
        if r < 0:
            if s < 0:
                raise ValueError("inputs share the component y = 0")
            low = -1
            for i, j in gg:
                if j == 0 and (low < 0 or i < low):
                    low = i
            total += low
            ff = {(e[0], e[1] - 1): c for e, c in ff.items()}
            continue
        a = ff[(r, 0)]
        b = gg[(s, 0)]
        d = gcd(a, b)
        a //= d
        b //= d
        k = s - r
        new = {e: a * c for e, c in gg.items()}
        for (i, j), c in ff.items():
            key = (i + k, j)
            v = new.get(key, 0) - b * c
            if v:
                new[key] = v
            else:
                new.pop(key, None)
        new = _truncate(new, bound - total)
        if not new:
            raise ValueError("inputs share a common component or bound is too small")
        gg = _primitive(new)


def sparse_rank(rows):
    cdef dict pivots = {}
    cdef dict row, p, new
    cdef Py_ssize_t c, kk
    cdef object a, b, d, v, nv
    for r0 in rows:
        row = {k: v for k, v in r0.items() if v}
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
            for kk, v in p.items():
                nv = new.get(kk, 0) - b * v
                if nv:
                    new[kk] = nv
                else:
                    new.pop(kk, None)
            row = _primitive(new)
    return len(pivots)
