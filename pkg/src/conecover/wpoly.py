"""Sparse multivariate polynomials over exact rationals with variable weights.

Everything in the package is built on two value types:

* ``WeightedRing`` -- an ordered list of variable names with positive integer
  weights, e.g. ``x0:1, x1:1, y:2`` for the coordinate ring of the weighted
  plane P(1,1,2).
* ``WPoly`` -- a sparse polynomial in such a ring, stored as a map from
  exponent tuples to nonzero ``Fraction`` coefficients.

All arithmetic is exact; there is no floating-point mode.  Values are
immutable after construction and safe to share between threads.

Monomials are ordered graded-lex: first by weighted degree, then
lexicographically on the exponent tuple (earlier variables more
significant).  The same order drives canonical printing, leading terms and
exact division.
"""

from fractions import Fraction
from math import gcd

from . import _kernels


class RingMismatchError(ValueError):
    pass


class ExactDivisionError(ArithmeticError):
    pass


def _as_fraction(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError("coefficients must be int or Fraction, got %r" % (c,))


class WeightedRing:
    """Ordered variable names with positive integer weights."""

    __slots__ = ("variables", "weights", "_index")

    def __init__(self, variables, weights):
        variables = tuple(variables)
        weights = tuple(int(w) for w in weights)
        if len(variables) != len(weights):
            raise ValueError("one weight per variable required")
        if len(set(variables)) != len(variables):
            raise ValueError("variable names must be unique")
        if any(w <= 0 for w in weights):
            raise ValueError("weights must be positive")
        self.variables = variables
        self.weights = weights
        self._index = {v: i for i, v in enumerate(variables)}

    @property
    def nvars(self):
        return len(self.variables)

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise KeyError("unknown variable %r in ring %s" % (name, self)) from None

    def weighted_degree(self, exponents):
        return sum(e * w for e, w in zip(exponents, self.weights))

    def zero(self):
        return WPoly(self, {})

    def one(self):
        return self.constant(1)

    def constant(self, c):
        c = _as_fraction(c)
        if c == 0:
            return WPoly(self, {})
        return WPoly(self, {(0,) * self.nvars: c})

    def variable(self, name):
        e = [0] * self.nvars
        e[self.index(name)] = 1
        return WPoly(self, {tuple(e): Fraction(1)})

    def gens(self):
        return [self.variable(v) for v in self.variables]

    def monomial(self, exponents, coeff=1):
        exponents = tuple(int(e) for e in exponents)
        if len(exponents) != self.nvars or any(e < 0 for e in exponents):
            raise ValueError("bad exponent vector %r" % (exponents,))
        c = _as_fraction(coeff)
        if c == 0:
            return WPoly(self, {})
        return WPoly(self, {exponents: c})

    def __eq__(self, other):
        return (
            isinstance(other, WeightedRing)
            and self.variables == other.variables
            and self.weights == other.weights
        )

    def __hash__(self):
        return hash((self.variables, self.weights))

    def __repr__(self):
        decl = ", ".join("%s:%d" % vw for vw in zip(self.variables, self.weights))
        return "WeightedRing(%s)" % decl


class WPoly:
    """Sparse polynomial with Fraction coefficients in a WeightedRing."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = {e: c for e, c in terms.items() if c}

    # -- basic predicates and degrees ------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return self.terms.get((0,) * self.ring.nvars, Fraction(0))

    def weighted_degree(self):
        """Common weighted degree of the terms, or None if inhomogeneous.

        Raises ValueError on the zero polynomial, where no degree is defined.
        """
        if not self.terms:
            raise ValueError("degree of the zero polynomial is undefined")
        degs = {self.ring.weighted_degree(e) for e in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return None

    def is_homogeneous(self):
        return self.is_zero() or self.weighted_degree() is not None

    def total_degree(self):
        """Maximal unweighted total degree of a term (-1 for zero)."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def order(self):
        """Order of vanishing at the origin: minimal total degree of a term."""
        if not self.terms:
            raise ValueError("order of the zero polynomial is undefined")
        return min(sum(e) for e in self.terms)

    def degree_in(self, var):
        i = self.ring.index(var)
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def coefficient(self, exponents):
        return self.terms.get(tuple(exponents), Fraction(0))

    def lowest_part(self):
        """Sum of the terms of minimal total degree (the tangent cone)."""
        m = self.order()
        return WPoly(self.ring, {e: c for e, c in self.terms.items() if sum(e) == m})

    def homogeneous_part(self, d):
        """Sum of terms of unweighted total degree exactly d."""
        return WPoly(self.ring, {e: c for e, c in self.terms.items() if sum(e) == d})

    # -- term order -------------------------------------------------------

    def _key(self, e):
        return (self.ring.weighted_degree(e), e)

    def sorted_terms(self):
        """Terms in descending graded-lex order."""
        return sorted(self.terms.items(), key=lambda item: self._key(item[0]), reverse=True)

    def leading(self):
        """(exponents, coefficient) of the graded-lex leading term."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=self._key)
        return e, self.terms[e]

    # -- arithmetic --------------------------------------------------------

    def _check_ring(self, other):
        if self.ring != other.ring:
            raise RingMismatchError("operands live in different rings")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        if not isinstance(other, WPoly):
            return NotImplemented
        self._check_ring(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            v = terms.get(e)
            s = c if v is None else v + c
            if s:
                terms[e] = s
            elif v is not None:
                del terms[e]
        return WPoly(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return WPoly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        if not isinstance(other, WPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if not c:
                return self.ring.zero()
            return WPoly(self.ring, {e: v * c for e, v in self.terms.items()})
        if not isinstance(other, WPoly):
            return NotImplemented
        self._check_ring(other)
        return WPoly(self.ring, _kernels.mul_terms(self.terms, other.terms))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if not c:
                raise ZeroDivisionError("division by zero scalar")
            return self * (1 / c)
        if isinstance(other, WPoly):
            return self.exact_div(other)
        return NotImplemented

    def __pow__(self, n):
        n = int(n)
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        if not isinstance(other, WPoly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- calculus and substitution ------------------------------------------

    def partial(self, var):
        """Formal partial derivative with respect to var."""
        i = self.ring.index(var)
        terms = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            e2 = list(e)
            e2[i] -= 1
            terms[tuple(e2)] = c * e[i]
        return WPoly(self.ring, terms)

    def substitute(self, assignment):
        """Compose with an assignment mapping every variable to a WPoly.

        The images must live in one common ring (Fraction/int images are
        lifted to constants there).  Returns the exact composed polynomial.
        """
        polys = [v for v in assignment.values() if isinstance(v, WPoly)]
        if not polys:
            raise ValueError("substitute needs at least one WPoly image to fix the target ring")
        target = polys[0].ring
        images = []
        for name in self.ring.variables:
            if name not in assignment:
                raise ValueError("assignment does not cover variable %r" % name)
            img = assignment[name]
            if isinstance(img, (int, Fraction)):
                img = target.constant(img)
            elif img.ring != target:
                raise RingMismatchError("substitution images live in different rings")
            images.append(img)
        # cache successive powers of each image
        powers = [[target.one(), img] for img in images]

        def power(i, k):
            cache = powers[i]
            while len(cache) <= k:
                cache.append(cache[-1] * cache[1])
            return cache[k]

        result = target.zero()
        for e, c in self.terms.items():
            term = target.constant(c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            result = result + term
        return result

    def evaluate(self, point):
        """Evaluate at a rational point given as {variable: value}."""
        value = Fraction(0)
        vals = [_as_fraction(point[v]) for v in self.ring.variables]
        for e, c in self.terms.items():
            t = c
            for xi, k in zip(vals, e):
                if k:
                    t *= xi**k
            value += t
        return value

    # -- exact division ------------------------------------------------------

    def exact_div(self, divisor):
        """Exact quotient self/divisor; raises ExactDivisionError otherwise."""
        if isinstance(divisor, (int, Fraction)):
            return self / divisor
        self._check_ring(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return self.ring.zero()
        de, dc = divisor.leading()
        rem = dict(self.terms)
        quot = {}
        ring = self.ring
        while rem:
            r = WPoly(ring, rem)
            e, c = r.leading()
            qe = tuple(a - b for a, b in zip(e, de))
            if any(x < 0 for x in qe):
                raise ExactDivisionError("polynomial is not divisible")
            qc = c / dc
            quot[qe] = qc
            step = _kernels.mul_terms({qe: qc}, divisor.terms)
            for ee, cc in step.items():
                v = rem.get(ee)
                s = -cc if v is None else v - cc
                if s:
                    rem[ee] = s
                elif v is not None:
                    del rem[ee]
        return WPoly(ring, quot)

    def divides(self, other):
        """True when self exactly divides other."""
        try:
            other.exact_div(self)
            return True
        except ExactDivisionError:
            return False

    # -- univariate views ------------------------------------------------------

    def as_univariate(self, var):
        """View as a polynomial in var: {exponent: coefficient WPoly}.

        Coefficients live in the same ring with the var-exponent zeroed.
        """
        i = self.ring.index(var)
        coeffs = {}
        for e, c in self.terms.items():
            k = e[i]
            e2 = list(e)
            e2[i] = 0
            coeffs.setdefault(k, {})[tuple(e2)] = c
        return {k: WPoly(self.ring, t) for k, t in coeffs.items()}

    def __repr__(self):
        from .textio import format_poly

        return format_poly(self)

    __str__ = __repr__


# -- content, gcd, squarefree parts ------------------------------------------


def rational_content(p):
    """Positive rational c with p/c integer-primitive; 0 for the zero poly."""
    if p.is_zero():
        return Fraction(0)
    num = 0
    den = 1
    for c in p.terms.values():
        num = gcd(num, abs(c.numerator))
        den = den * c.denominator // gcd(den, c.denominator)
    return Fraction(num, den)


def normalized(p):
    """Canonical associate: integer-primitive with positive leading coefficient."""
    if p.is_zero():
        return p
    c = rational_content(p)
    q = p * (1 / c)
    if q.leading()[1] < 0:
        q = -q
    return q


def _to_dense(p):
    """Integer dense recursive form of p (denominators cleared; gcd-safe).

    Level d of the nesting indexes powers of variable n-1-d, so the top
    level is the last ring variable and the leaves are ints.
    """
    from . import _dense

    n = p.ring.nvars
    den = 1
    for c in p.terms.values():
        den = den * c.denominator // gcd(den, c.denominator)
    items = [(e, int(c * den)) for e, c in p.terms.items()]

    def build(group, vi):
        if vi == 0:
            out = [0] * (max(e[0] for e, _ in group) + 1)
            for e, c in group:
                out[e[0]] = c
            return out
        buckets = {}
        for e, c in group:
            buckets.setdefault(e[vi], []).append((e, c))
        out = []
        for k in range(max(buckets) + 1):
            out.append(build(buckets[k], vi - 1) if k in buckets else _dense.zero(vi))
        return out

    return build(items, n - 1)


def _from_dense(node, ring):
    n = ring.nvars
    terms = {}

    def walk(nd, vi, suffix):
        if vi == 0:
            for k, c in enumerate(nd):
                if c:
                    terms[tuple([k] + suffix)] = Fraction(c)
            return
        for k, sub in enumerate(nd):
            walk(sub, vi - 1, [k] + suffix)

    walk(node, n - 1, [])
    return WPoly(ring, terms)


def poly_gcd(p, q):
    """Gcd over Q, canonically normalized.

    Computed over Z in a dense recursive representation with the primitive
    PRS; denominators are irrelevant because the gcd is only defined up to a
    unit and the result is re-normalized.
    """
    if p.ring != q.ring:
        raise RingMismatchError("gcd of polynomials in different rings")
    if p.is_zero():
        return normalized(q)
    if q.is_zero():
        return normalized(p)
    from . import _dense

    n = p.ring.nvars
    g = _dense.gcd(_to_dense(p), _to_dense(q), n)
    return normalized(_from_dense(g, p.ring))


def squarefree_part(p):
    """Product of the distinct irreducible factors of p, normalized.

    Computed as p / gcd(p, all partials); valid in characteristic zero.
    """
    if p.is_zero():
        raise ValueError("squarefree part of the zero polynomial is undefined")
    if p.is_constant():
        return p.ring.one()
    g = p
    for v in p.ring.variables:
        if p.degree_in(v) > 0:
            g = poly_gcd(g, p.partial(v))
        if g.is_constant():
            break
    return normalized(p.exact_div(g))


def is_squarefree(p):
    """True when p has the same total degree as its squarefree part."""
    return squarefree_part(p).total_degree() == p.total_degree()


# -- resultants ---------------------------------------------------------------


def _det_bareiss(mat, ring):
    """Determinant of a square matrix of WPoly entries (fraction-free)."""
    n = len(mat)
    if n == 0:
        return ring.one()
    m = [row[:] for row in mat]
    prev = ring.one()
    sign = 1
    for k in range(n - 1):
        if m[k][k].is_zero():
            piv = None
            for i in range(k + 1, n):
                if not m[i][k].is_zero():
                    piv = i
                    break
            if piv is None:
                return ring.zero()
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).exact_div(prev)
            m[i][k] = ring.zero()
        prev = m[k][k]
    d = m[n - 1][n - 1]
    return -d if sign < 0 else d


def resultant(p, q, var):
    """Resultant of p and q with respect to var (Sylvester determinant).

    The result is a WPoly free of var.  Raises ValueError when either
    polynomial has var-degree zero or is zero.
    """
    if p.ring != q.ring:
        raise RingMismatchError("resultant of polynomials in different rings")
    dp = p.degree_in(var)
    dq = q.degree_in(var)
    if p.is_zero() or q.is_zero():
        raise ValueError("resultant with a zero polynomial")
    if dp == 0 or dq == 0:
        raise ValueError("resultant needs positive degree in %r" % var)
    ring = p.ring
    pu = p.as_univariate(var)
    qu = q.as_univariate(var)
    zero = ring.zero()
    n = dp + dq
    rows = []
    for shift in range(dq):
        row = [zero] * n
        for k, c in pu.items():
            row[shift + dp - k] = c
        rows.append(row)
    for shift in range(dp):
        row = [zero] * n
        for k, c in qu.items():
            row[shift + dq - k] = c
        rows.append(row)
    return _det_bareiss(rows, ring)
