"""Exact rational root extraction for univariate polynomials over Q.

Candidates come from the divisors of the trailing and leading coefficients of
the integer-primitive form; multiplicities by repeated deflation.  Constant
terms are factorized by trial division plus Pollard's rho (deterministic),
with an effort cap that raises rather than silently missing roots.
"""

from fractions import Fraction
from math import gcd, isqrt


class FactorizationLimit(ArithmeticError):
    pass


def _pollard_rho(n, max_steps=200000):
    if n % 2 == 0:
        return 2
    for c in range(1, 20):
        x = y = 2
        d = 1
        steps = 0
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = gcd(abs(x - y), n)
            steps += 1
            if steps > max_steps:
                d = n
                break
        if d != n:
            return d
    raise FactorizationLimit("failed to split %d" % n)


def _is_probable_prime(n):
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n):
    """Prime factorization of n >= 1 as a dict {prime: exponent}."""
    n = abs(int(n))
    if n == 0:
        raise ValueError("cannot factorize 0")
    factors = {}
    for p in (2, 3, 5):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    f = 7
    # wheel over 2,3,5 would be nicer; plain trial division suffices here
    while f * f <= n and f < 100000:
        while n % f == 0:
            factors[f] = factors.get(f, 0) + 1
            n //= f
        f += 2
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if _is_probable_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return factors


def divisors(n):
    """Sorted positive divisors of n != 0."""
    out = [1]
    for p, e in factorize(n).items():
        out = [d * p**k for d in out for k in range(e + 1)]
    return sorted(out)


def _eval_at(coeffs, num, den):
    """Evaluate sum(c_k t^k) at t = num/den, scaled by den^deg (exact)."""
    n = len(coeffs) - 1
    return sum(c * num**k * den ** (n - k) for k, c in enumerate(coeffs))


def _deflate(coeffs, num, den):
    """Divide by (den*t - num), assuming num/den is a root; integer output."""
    # synthetic division in Q, then clear: quotient has rational coefficients
    q = []
    acc = Fraction(0)
    root = Fraction(num, den)
    for c in reversed(coeffs):
        acc = acc * root + c
        q.append(acc)
    # q[:-1] reversed are coefficients of the quotient by (t - root)
    quot = list(reversed(q[:-1]))
    return quot


def rational_roots(coeffs):
    """Rational roots of sum(c_k t^k) with multiplicities.

    coeffs: list of Fraction/int, low degree first.  Returns a list of
    (root, multiplicity) sorted by root.  The zero polynomial is rejected.
    """
    coeffs = [Fraction(c) for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs:
        raise ValueError("zero polynomial")
    den = 1
    for c in coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    g = 0
    for c in ints:
        g = gcd(g, c)
    ints = [c // g for c in ints]
    roots = []
    # factor out t^k
    k = 0
    while ints[k] == 0:
        k += 1
    if k:
        roots.append((Fraction(0), k))
        ints = ints[k:]
    if len(ints) <= 1:
        return roots
    for p in divisors(ints[0]):
        for q in divisors(ints[-1]):
            if gcd(p, q) != 1:
                continue
            for sign in (1, -1):
                num = sign * p
                if _eval_at(ints, num, q) == 0:
                    mult = 0
                    work = [Fraction(c) for c in ints]
                    while len(work) > 1 and _eval_at(work, num, q) == 0:
                        work = _deflate(work, num, q)
                        mult += 1
                    roots.append((Fraction(num, q), mult))
    roots.sort(key=lambda rm: rm[0])
    return roots


def _univ_divmod_exact(a, b):
    """Exact quotient of univariate coefficient lists (raises if inexact)."""
    a = [Fraction(c) for c in a]
    b = [Fraction(c) for c in b]
    while a and a[-1] == 0:
        a.pop()
    while b and b[-1] == 0:
        b.pop()
    if not b:
        raise ZeroDivisionError
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    while a and len(a) >= len(b):
        f = a[-1] / b[-1]
        k = len(a) - len(b)
        q[k] = f
        for i, c in enumerate(b):
            a[k + i] -= f * c
        while a and a[-1] == 0:
            a.pop()
    if a:
        raise ArithmeticError("inexact univariate division")
    return q


def squarefree_profile(coeffs):
    """Multiplicity profile of the roots of a univariate polynomial.

    Returns a list of (multiplicity, count) pairs where count is the number
    of distinct roots (over the algebraic closure) with that multiplicity.
    Yun's algorithm; exact, no root isolation needed.
    """
    from .locate import _univ_gcd  # gcd on coefficient lists, primitive PRS

    f = [Fraction(c) for c in coeffs]
    while f and f[-1] == 0:
        f.pop()
    if not f:
        raise ValueError("zero polynomial")
    if len(f) == 1:
        return []
    fp = [c * k for k, c in enumerate(f)][1:]
    a = _univ_gcd(f, fp)
    if len(a) == 1:
        return [(1, len(f) - 1)]
    b = _univ_divmod_exact(f, a)
    c = [x - y for x, y in _pad(_univ_divmod_exact(fp, a), _derive(b))]
    profile = []
    i = 1
    while len(b) > 1:
        d = _univ_gcd(b, c)
        if len(d) > 1:
            profile.append((i, len(d) - 1))
        b = _univ_divmod_exact(b, d)
        c = [x - y for x, y in _pad(_univ_divmod_exact(c, d), _derive(b))]
        i += 1
    return profile


def _derive(coeffs):
    return [c * k for k, c in enumerate(coeffs)][1:]


def _pad(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return zip(a, b)


def univariate_coeffs(p, var):
    """Coefficient list (low first) of a WPoly that depends on var only."""
    i = p.ring.index(var)
    deg = p.degree_in(var)
    out = [Fraction(0)] * (deg + 1)
    for e, c in p.terms.items():
        if any(e[j] for j in range(len(e)) if j != i):
            raise ValueError("polynomial is not univariate in %r" % var)
        out[e[i]] = c
    return out
