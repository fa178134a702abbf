"""Weighted linear systems on P(1,1,2) and exact condition ranks.

A linear system is the space of degree-d forms in the coordinate ring of
P(1,1,2) subject to linear conditions on the coefficients: point
multiplicities, infinitely-near triple points (the [3,3] conditions, realized
by a blow-up chart substitution), and simple tangency to a given direction.
Ranks are computed exactly over Q by fraction-free elimination.

Conditions at a smooth-locus point are written in an honest affine chart:
x0 = 1 with local coordinates (x1, y) when the point has nonzero first
coordinate, x1 = 1 otherwise.  The vertex (0:0:1) carries no chart here and
is rejected.
"""

import random
from fractions import Fraction

from . import _kernels
from .wpoly import WeightedRing, WPoly


class VertexPointError(ValueError):
    pass


def p112_ring():
    return WeightedRing(("x0", "x1", "y"), (1, 1, 2))


def germ_ring(u="u", v="v"):
    return WeightedRing((u, v), (1, 1))


def monomial_basis(ring, d):
    """All exponent vectors of weighted degree d, graded-lex descending."""
    if d < 0:
        return []
    out = []

    def rec(i, remaining, prefix):
        if i == ring.nvars:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        w = ring.weights[i]
        if i == ring.nvars - 1:
            if remaining % w == 0:
                out.append(tuple(prefix + [remaining // w]))
            return
        for e in range(remaining // w, -1, -1):
            rec(i + 1, remaining - e * w, prefix + [e])

    rec(0, d, [])
    out.sort(reverse=True)
    return out


def rank(rows):
    """Exact rank of a list of Fraction rows (0 for an empty list)."""
    rows = [r for r in rows if any(r)]
    if not rows:
        return 0
    return _kernels.bareiss_rank(rows)


def nullspace(rows, ncols):
    """Basis of the solution space {v : row . v = 0 for all rows}."""
    m = [[Fraction(c) for c in row] for row in rows if any(row)]
    pivots = []
    r = 0
    for col in range(ncols):
        piv = None
        for i in range(r, len(m)):
            if m[i][col]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][col]
        m[r] = [c * inv for c in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for row_i, pc in enumerate(pivots):
            v[pc] = -m[row_i][fc]
        basis.append(v)
    return basis


class PointWPS:
    """Rational point of P(1,1,2), normalized in its affine chart.

    Coordinates are (x0, x1, y); the weighted scaling is
    (x0, x1, y) ~ (t*x0, t*x1, t^2*y).  The vertex (0:0:1) is admissible as a
    value but carries no smooth chart.
    """

    __slots__ = ("coords", "chart")

    def __init__(self, x0, x1, y):
        x0, x1, y = Fraction(x0), Fraction(x1), Fraction(y)
        if x0 == x1 == 0 and y == 0:
            raise ValueError("(0,0,0) is not a point")
        if x0 != 0:
            t = 1 / x0
            self.coords = (Fraction(1), x1 * t, y * t * t)
            self.chart = "x0"
        elif x1 != 0:
            t = 1 / x1
            self.coords = (Fraction(0), Fraction(1), y * t * t)
            self.chart = "x1"
        else:
            self.coords = (Fraction(0), Fraction(0), Fraction(1))
            self.chart = "vertex"

    def is_vertex(self):
        return self.chart == "vertex"

    def local_coords(self):
        """Chart coordinates (u0, v0) of the point; vertex has none."""
        if self.chart == "x0":
            return (self.coords[1], self.coords[2])
        if self.chart == "x1":
            return (self.coords[0], self.coords[2])
        raise VertexPointError("the vertex (0:0:1) has no smooth chart")

    def __eq__(self, other):
        return isinstance(other, PointWPS) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return "(%s : %s : %s)" % self.coords


class TangentDir:
    """Tangent direction at a chart point, stored as a ratio (dy : dx).

    Normalized so that the first nonzero entry equals 1.  The chart ruling
    {x = const} is (1 : 0); every other direction has a finite slope dy/dx.
    """

    __slots__ = ("dy", "dx")

    def __init__(self, dy, dx):
        dy, dx = Fraction(dy), Fraction(dx)
        if dy == dx == 0:
            raise ValueError("zero tangent direction")
        scale = 1 / (dy if dy != 0 else dx)
        self.dy = dy * scale
        self.dx = dx * scale

    @classmethod
    def from_slope(cls, slope):
        return cls(Fraction(slope), 1)

    def is_ruling(self):
        return self.dx == 0

    def slope(self):
        if self.is_ruling():
            raise ValueError("ruling direction has no finite slope")
        return self.dy / self.dx

    def __eq__(self, other):
        return isinstance(other, TangentDir) and (self.dy, self.dx) == (other.dy, other.dx)

    def __hash__(self):
        return hash((self.dy, self.dx))

    def __repr__(self):
        return "(dy:dx)=(%s:%s)" % (self.dy, self.dx)


class ConditionSpec:
    """A prescription of vanishing behavior at one smooth-locus point.

    kind is one of 'mult' (with multiplicity m), 'quadruple' (mult 4),
    'threethree' (a [3,3] point with a prescribed tangent direction) or
    'tangency' (pass through the point tangent to the given direction).
    """

    __slots__ = ("point", "kind", "m", "tangent")

    def __init__(self, point, kind, m=None, tangent=None):
        if kind not in ("mult", "quadruple", "threethree", "tangency"):
            raise ValueError("unknown condition kind %r" % kind)
        if kind == "mult":
            if m is None or m < 1:
                raise ValueError("'mult' needs a multiplicity m >= 1")
        if kind == "quadruple":
            m = 4
        if kind in ("threethree", "tangency"):
            if tangent is None:
                raise ValueError("%r needs a tangent direction" % kind)
            if kind == "threethree" and tangent.is_ruling():
                raise ValueError(
                    "the ruling through the point cannot be the [3,3] tangent"
                )
        self.point = point
        self.kind = kind
        self.m = m
        self.tangent = tangent

    def __repr__(self):
        extra = ""
        if self.kind == "mult":
            extra = " m=%d" % self.m
        if self.tangent is not None:
            extra += " tangent=%r" % self.tangent
        return "<%s at %r%s>" % (self.kind, self.point, extra)


def _local_monomial(ring, e, point, germ):
    """Chart-local expansion of the monomial around the point, as a germ poly."""
    u, v = germ.gens()
    u0, v0 = point.local_coords()
    if point.chart == "x0":
        exps = (e[1], e[2])
    else:
        exps = (e[0], e[2])
    return (u + u0) ** exps[0] * (v + v0) ** exps[1]


def _mult_rows(locals_, germ, m):
    rows = []
    for i in range(m):
        for j in range(m - i):
            rows.append([p.coefficient((i, j)) for p in locals_])
    return rows


_STRICT33 = [(3, 0), (3, 1), (3, 2), (4, 0), (4, 1), (5, 0)]


def vanishing_conditions(spec, d, ring=None):
    """Condition rows over the degree-d monomial basis for one spec.

    The rank of the emitted rows equals the number of independent linear
    conditions the spec imposes.
    """
    ring = ring or p112_ring()
    if spec.point.is_vertex():
        raise VertexPointError("conditions at the vertex are not supported")
    basis = monomial_basis(ring, d)
    germ = germ_ring()
    locals_ = [_local_monomial(ring, e, spec.point, germ) for e in basis]
    if spec.kind in ("mult", "quadruple"):
        return _mult_rows(locals_, germ, spec.m)
    if spec.kind == "tangency":
        t = spec.tangent
        rows = [[p.coefficient((0, 0)) for p in locals_]]
        # derivative along the tangent vector (dx, dy)
        rows.append(
            [t.dx * p.coefficient((1, 0)) + t.dy * p.coefficient((0, 1)) for p in locals_]
        )
        return rows
    # [3,3]: multiplicity 3 plus multiplicity 3 of the strict transform at the
    # infinitely near point in the prescribed direction.  Substituting
    # (u, v) -> (s, s*(t0 + w)) turns the strict-transform conditions into the
    # total-transform coefficients of s^(3+a) w^b with a + b <= 2, which are
    # linear in the original coefficients.
    t0 = spec.tangent.slope()
    rows = _mult_rows(locals_, germ, 3)
    blow = germ_ring("s", "w")
    s, w = blow.gens()
    sub = {"u": s, "v": s * (w + t0)}
    blown = [p.substitute(sub) for p in locals_]
    for k, b in _STRICT33:
        rows.append([p.coefficient((k, b)) for p in blown])
    return rows


def condition_rank(spec, d, ring=None):
    return rank(vanishing_conditions(spec, d, ring))


class LinearSystem:
    """Degree-d system on a weighted ring with accumulated condition rows."""

    def __init__(self, ring, degree, specs=()):
        self.ring = ring
        self.degree = degree
        self.basis = monomial_basis(ring, degree)
        self.rows = []
        self.specs = []
        for spec in specs:
            self.add(spec)

    def add(self, spec):
        pts = [s.point for s in self.specs]
        if spec.point in pts and any(
            s.kind != "tangency" or spec.kind != "tangency" for s in self.specs if s.point == spec.point
        ):
            raise ValueError("specs must sit at pairwise distinct points")
        self.specs.append(spec)
        self.rows.extend(vanishing_conditions(spec, self.degree, self.ring))

    def conditions_rank(self):
        return rank(self.rows)

    def h0(self):
        return len(self.basis) - self.conditions_rank()

    def projective_dim(self):
        return self.h0() - 1

    def members(self):
        """Basis of the solution space, as polynomials."""
        coords = nullspace(self.rows, len(self.basis))
        return [self._from_vector(v) for v in coords]

    def _from_vector(self, v):
        return WPoly(self.ring, {e: c for e, c in zip(self.basis, v) if c})

    def general_member(self, seed):
        """Pseudo-random member with small integer coordinates (deterministic).

        Raises ValueError on an empty system.
        """
        kernel = nullspace(self.rows, len(self.basis))
        if not kernel:
            raise ValueError("empty linear system has no members")
        rng = random.Random(seed)
        for _ in range(64):
            combo = [rng.randint(-9, 9) for _ in kernel]
            vec = [
                sum(c * kv[i] for c, kv in zip(combo, kernel))
                for i in range(len(self.basis))
            ]
            if any(vec):
                return self._from_vector(vec)
        raise AssertionError("failed to draw a nonzero member")


def linear_system_dim(specs, d, ring=None):
    """(projective dimension, h0) of the conditioned degree-d system."""
    system = LinearSystem(ring or p112_ring(), d, specs)
    return system.projective_dim(), system.h0()
