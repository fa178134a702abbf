"""Pure-Python reference implementations of the two hot kernels.

Both kernels work over exact rationals.  Internally they clear denominators
and do all the heavy looping over Python integers, which keeps every
operation exact while avoiding a gcd per intermediate product.

The compiled module ``_speedups`` implements the same two functions with the
same semantics; ``conecover._kernels`` picks one at import time.
"""

from fractions import Fraction
from math import gcd

IMPL = "python"


def _clear_denominators(terms):
    """Return (integer coefficient dict, common denominator)."""
    den = 1
    for c in terms.values():
        d = c.denominator
        den = den * d // gcd(den, d)
    cleared = {e: c.numerator * (den // c.denominator) for e, c in terms.items()}
    return cleared, den


def mul_terms(a, b):
    """Multiply two sparse term maps {exponent tuple: Fraction}.

    Returns a term map with no zero coefficients.  Exponent tuples of the
    two operands must have equal length.
    """
    if not a or not b:
        return {}
    ia, da = _clear_denominators(a)
    ib, db = _clear_denominators(b)
    acc = {}
    for ea, ca in ia.items():
        for eb, cb in ib.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            v = acc.get(e)
            if v is None:
                acc[e] = ca * cb
            else:
                acc[e] = v + ca * cb
    den = da * db
    return {e: Fraction(v, den) for e, v in acc.items() if v}


def bareiss_rank(rows):
    """Rank of a matrix with Fraction (or int) entries.

    Fraction-free Bareiss elimination: each row is first scaled to integers
    (rank-invariant), then one-step Bareiss updates keep all intermediate
    entries integral, with every division exact.
    """
    m = []
    for row in rows:
        den = 1
        for c in row:
            d = getattr(c, "denominator", 1)
            den = den * d // gcd(den, d)
        m.append([int(c * den) for c in row])
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    rank = 0
    prev = 1
    for col in range(ncols):
        if rank == nrows:
            break
        piv = None
        for i in range(rank, nrows):
            if m[i][col]:
                piv = i
                break
        if piv is None:
            continue
        if piv != rank:
            m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][col]
        for i in range(rank + 1, nrows):
            mi = m[i]
            mic = mi[col]
            mr = m[rank]
            for j in range(col + 1, ncols):
                mi[j] = (p * mi[j] - mic * mr[j]) // prev
            mi[col] = 0
        prev = p
        rank += 1
    return rank
