# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the two hot kernels (see reference.py for semantics).

Coefficient arithmetic stays on Python's arbitrary-precision integers, so
results are bit-identical to the reference implementation; the win is in the
merge loops, tuple construction and dict traffic.
"""

from fractions import Fraction
from math import gcd

IMPL = "cython"


cdef _clear_denominators(dict terms):
    cdef object den = 1
    cdef object c, d
    for c in terms.values():
        d = c.denominator
        den = den * d // gcd(den, d)
    cdef dict cleared = {}
    for e, c in terms.items():
        cleared[e] = c.numerator * (den // c.denominator)
    return cleared, den


def mul_terms(dict a, dict b):
    if not a or not b:
        return {}
    ia, da = _clear_denominators(a)
    ib, db = _clear_denominators(b)
    cdef dict acc = {}
    cdef tuple ea, eb, e
    cdef Py_ssize_t n, i
    cdef object ca, cb, v
    cdef list bitems = list((<dict>ib).items())
    for ea, ca in (<dict>ia).items():
        n = len(ea)
        for eb, cb in bitems:
            e = tuple([<object>(ea[i]) + <object>(eb[i]) for i in range(n)])
            v = acc.get(e)
            if v is None:
                acc[e] = ca * cb
            else:
                acc[e] = v + ca * cb
    den = da * db
    cdef dict out = {}
    for e, v in acc.items():
        if v:
            out[e] = Fraction(v, den)
    return out


def bareiss_rank(rows):
    cdef list m = []
    cdef object den, c, d
    for row in rows:
        den = 1
        for c in row:
            d = getattr(c, "denominator", 1)
            den = den * d // gcd(den, d)
        m.append([int(c * den) for c in row])
    cdef Py_ssize_t nrows = len(m)
    cdef Py_ssize_t ncols = len(<list>m[0]) if nrows else 0
    cdef Py_ssize_t rank = 0, col, i, j, piv
    cdef object prev = 1, p, mic
    cdef list mi, mr
    for col in range(ncols):
        if rank == nrows:
            break
        piv = -1
        for i in range(rank, nrows):
            if (<list>m[i])[col]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != rank:
            m[rank], m[piv] = m[piv], m[rank]
        mr = <list>m[rank]
        p = mr[col]
        for i in range(rank + 1, nrows):
            mi = <list>m[i]
            mic = mi[col]
            for j in range(col + 1, ncols):
                mi[j] = (p * mi[j] - mic * mr[j]) // prev
            mi[col] = 0
        prev = p
        rank += 1
    return rank
