"""Dense recursive integer polynomial arithmetic for gcd computation.

A polynomial in n variables is a nested list: the top level indexes powers
of the main variable, entries are polynomials in the remaining n-1
variables, and depth-0 leaves are plain ints.  Working over Z with the
primitive PRS keeps the gcd exact and fast where the generic sparse
representation with rational coefficients would drown in bookkeeping.

Only what the gcd needs lives here; everything else stays on WPoly.
"""

from math import gcd as igcd


def zero(depth):
    return 0 if depth == 0 else []


def is_zero(p, depth):
    if depth == 0:
        return p == 0
    return all(is_zero(c, depth - 1) for c in p)


def strip(p, depth):
    if depth == 0:
        return p
    while p and is_zero(p[-1], depth - 1):
        p.pop()
    return p


def degree(p, depth):
    if depth == 0:
        raise ValueError("ints have no degree")
    return len(p) - 1


def neg(p, depth):
    if depth == 0:
        return -p
    return [neg(c, depth - 1) for c in p]


def add(p, q, depth):
    if depth == 0:
        return p + q
    n = max(len(p), len(q))
    out = []
    for i in range(n):
        a = p[i] if i < len(p) else zero(depth - 1)
        b = q[i] if i < len(q) else zero(depth - 1)
        out.append(add(a, b, depth - 1))
    return strip(out, depth)


def sub(p, q, depth):
    return add(p, neg(q, depth), depth)


def mul(p, q, depth):
    if depth == 0:
        return p * q
    if not p or not q:
        return []
    out = [zero(depth - 1) for _ in range(len(p) + len(q) - 1)]
    for i, a in enumerate(p):
        if is_zero(a, depth - 1):
            continue
        for j, b in enumerate(q):
            if is_zero(b, depth - 1):
                continue
            out[i + j] = add(out[i + j], mul(a, b, depth - 1), depth - 1)
    return strip(out, depth)


def mul_by(p, c, depth):
    """Multiply by a polynomial c one level down (a coefficient)."""
    if depth == 0:
        raise ValueError("no coefficients below ints")
    return strip([mul(a, c, depth - 1) for a in p], depth)


def int_content(p, depth):
    if depth == 0:
        return abs(p)
    g = 0
    for c in p:
        g = igcd(g, int_content(c, depth - 1))
        if g == 1:
            return 1
    return g


def int_divide(p, g, depth):
    if g == 1:
        return p
    if depth == 0:
        return p // g
    return [int_divide(c, g, depth - 1) for c in p]


def exact_div(p, d, depth):
    """Exact division of p by d (same depth); raises on failure."""
    if depth == 0:
        if d == 0 or p % d:
            raise ArithmeticError("inexact integer division")
        return p // d
    if is_zero(p, depth):
        return []
    if not d:
        raise ZeroDivisionError
    out = [zero(depth - 1)] * (len(p) - len(d) + 1)
    rem = [c for c in p]
    lead = d[-1]
    while rem and len(rem) >= len(d):
        q = exact_div(rem[-1], lead, depth - 1)
        k = len(rem) - len(d)
        out[k] = q
        piece = [zero(depth - 1)] * k + [mul(q, c, depth - 1) for c in d]
        rem = sub(rem, piece, depth)
        if len(rem) >= k + len(d):
            raise ArithmeticError("inexact polynomial division")
    if rem:
        raise ArithmeticError("inexact polynomial division")
    return strip(out, depth)


def content(p, depth):
    """Gcd of the main-variable coefficients (a depth-1 polynomial)."""
    c = zero(depth - 1)
    for coeff in p:
        c = gcd(c, coeff, depth - 1)
        if depth - 1 == 0 and c == 1:
            break
    return c


def primitive(p, depth):
    c = content(p, depth)
    if depth - 1 == 0:
        if c in (0, 1):
            return c, p
        return c, [exact_div(a, c, 0) for a in p]
    if is_zero(c, depth - 1) or _is_one(c, depth - 1):
        return c, p
    return c, [exact_div(a, c, depth - 1) for a in p]


def _is_one(p, depth):
    if depth == 0:
        return p == 1
    return len(p) == 1 and _is_one(p[0], depth - 1)


def pseudo_rem(p, q, depth):
    """Pseudo-remainder of p by q in the main variable."""
    lq = q[-1]
    r = list(p)
    while r and len(r) >= len(q):
        lr = r[-1]
        k = len(r) - len(q)
        r = mul_by(r, lq, depth)
        piece = [zero(depth - 1)] * k + [mul(lr, c, depth - 1) for c in q]
        r = sub(r, piece, depth)
    return r


def gcd(p, q, depth):
    """Gcd over Z, primitive in every variable, positive leading content."""
    if depth == 0:
        return igcd(p, q)
    p = strip(list(p), depth)
    q = strip(list(q), depth)
    if not p:
        return q
    if not q:
        return p
    cp, pp = primitive(p, depth)
    cq, qq = primitive(q, depth)
    c = gcd(cp, cq, depth - 1)
    f, g = (pp, qq) if len(pp) >= len(qq) else (qq, pp)
    while True:
        if len(g) == 1:
            # gcd of the primitive parts is free of the main variable
            h = [c]
            return strip(h, depth)
        r = pseudo_rem(f, g, depth)
        r = strip(r, depth)
        if not r:
            _, result = primitive(g, depth)
            return strip([mul(a, c, depth - 1) for a in result], depth)
        _, r = primitive(r, depth)
        f, g = g, r
