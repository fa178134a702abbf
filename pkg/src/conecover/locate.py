"""Rational point location on P(1,1,2) and the plane.

Singular loci and intersections are found by exact elimination over Q:
resultants give candidate coordinates, rational roots give points, and the
remaining (irrational) candidate factors are reported through a completeness
flag instead of being guessed at.  Curves with a rational parametrization
(plane lines, hyperplane sections of the cone) get a complete treatment by
restriction.

All paper configurations have rational singular loci; the flag exists so
that inputs outside that regime fail loudly.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .roots import FactorizationLimit, rational_roots, univariate_coeffs
from .wpoly import WeightedRing, WPoly, poly_gcd, resultant, squarefree_part


class PositiveDimensionalError(ValueError):
    pass


class ProjPoint:
    """Point of a weighted projective plane, normalized in a weight-1 chart.

    The scaling acts as x_i -> t^{w_i} x_i; normalization picks the first
    weight-1 coordinate that is nonzero and scales it to 1.  On P(1,1,2) the
    vertex (0:0:1) has no such chart and is flagged.
    """

    __slots__ = ("ring", "coords", "chart")

    def __init__(self, ring, coords):
        coords = tuple(Fraction(c) for c in coords)
        if len(coords) != ring.nvars:
            raise ValueError("wrong number of coordinates")
        if all(c == 0 for c in coords):
            raise ValueError("all-zero coordinates")
        chart = None
        for i, (c, w) in enumerate(zip(coords, ring.weights)):
            if w == 1 and c != 0:
                chart = i
                break
        if chart is None:
            # only remaining rational point with all weight-1 coords zero
            self.chart = None
            norm = []
            for c, w in zip(coords, ring.weights):
                norm.append(Fraction(0) if c == 0 else Fraction(1))
            self.coords = tuple(norm)
        else:
            t = 1 / coords[chart]
            self.coords = tuple(c * t**w for c, w in zip(coords, ring.weights))
            self.chart = chart
        self.ring = ring

    def is_vertex(self):
        return self.chart is None

    def chart_var(self):
        if self.chart is None:
            raise ValueError("point has no weight-1 chart")
        return self.ring.variables[self.chart]

    def local_coords(self):
        return tuple(
            c for i, c in enumerate(self.coords) if i != self.chart
        )

    def __eq__(self, other):
        return (
            isinstance(other, ProjPoint)
            and self.ring == other.ring
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash((self.ring, self.coords))

    def __repr__(self):
        return "(" + " : ".join(str(c) for c in self.coords) + ")"


def local_ring(ring, chart_index):
    names = [v for i, v in enumerate(ring.variables) if i != chart_index]
    return WeightedRing(names, (1,) * (ring.nvars - 1))


def restrict_to_chart(F, chart_index):
    """Set the chart variable to 1; result lives in the 2-variable local ring."""
    lring = local_ring(F.ring, chart_index)
    images = {}
    j = 0
    for i, v in enumerate(F.ring.variables):
        if i == chart_index:
            images[v] = lring.one()
        else:
            images[v] = lring.variable(lring.variables[j])
            j += 1
    return F.substitute(images)


def localize(F, point):
    """Germ of F at the point: chart restriction translated to the origin."""
    f = restrict_to_chart(F, point.chart)
    lring = f.ring
    vals = point.local_coords()
    images = {
        name: lring.variable(name) + val for name, val in zip(lring.variables, vals)
    }
    return f.substitute(images)


@dataclass
class Located:
    points: list
    complete: bool
    notes: list = field(default_factory=list)


def _all_roots_rational(coeffs):
    """Do all roots of the squarefree part lie in Q?"""
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) <= 1:
        return True
    found = rational_roots(coeffs)
    # compare against the root count of the squarefree part
    der = [c * k for k, c in enumerate(coeffs)][1:]
    sqf_deg = len(coeffs) - 1 - (len(_univ_gcd(coeffs, der)) - 1)
    return len(found) == sqf_deg


def _roots_with_flag(coeffs):
    """(rational roots, all-roots-rational flag); factorization caps flag as False."""
    try:
        roots = [r for r, _ in rational_roots(coeffs)]
        return roots, _all_roots_rational(coeffs)
    except FactorizationLimit:
        return [], False


def _univariate_common(polys_1d):
    """Common rational zeros of univariate coefficient lists; (roots, complete)."""
    alive = [c for c in polys_1d if any(c)]
    if not alive:
        raise PositiveDimensionalError("all restrictions vanish identically")
    gc = alive[0]
    for other in alive[1:]:
        gc = _univ_gcd(gc, other)
        if len(gc) == 1:
            return [], True
    return _roots_with_flag(gc)


def _to_primitive_int(coeffs):
    from math import gcd as igcd

    den = 1
    for c in coeffs:
        d = Fraction(c).denominator
        den = den * d // igcd(den, d)
    ints = [int(Fraction(c) * den) for c in coeffs]
    g = 0
    for c in ints:
        g = igcd(g, c)
    if g > 1:
        ints = [c // g for c in ints]
    return ints


def _univ_gcd(a, b):
    """Gcd of univariate coefficient lists, primitive PRS over the integers.

    Naive Euclid over Q suffers exponential coefficient swell on the large
    resultants that feed this routine; pseudo-division with content removal
    keeps intermediate coefficients bounded.
    """
    from math import gcd as igcd

    def strip(c):
        while c and c[-1] == 0:
            c.pop()
        return c

    def primitive(c):
        g = 0
        for x in c:
            g = igcd(g, x)
        if g > 1:
            c = [x // g for x in c]
        if c and c[-1] < 0:
            c = [-x for x in c]
        return c

    a = strip(_to_primitive_int(a))
    b = strip(_to_primitive_int(b))
    if not a:
        return [Fraction(c) for c in b] or [Fraction(0)]
    if not b:
        return [Fraction(c) for c in a]
    if len(a) < len(b):
        a, b = b, a
    while b:
        # pseudo-remainder of a by b
        r = list(a)
        lb = b[-1]
        while r and len(r) >= len(b):
            lr = r[-1]
            shift = len(r) - len(b)
            r = [c * lb for c in r]
            for i, c in enumerate(b):
                r[shift + i] -= lr * c
            r = strip(r)
        a, b = b, primitive(r)
    return [Fraction(c) for c in a]


def _substitute_u(p, u_name, v_name, u0):
    """Coefficient list in v of p(u0, v)."""
    ring = p.ring
    iu = ring.index(u_name)
    iv = ring.index(v_name)
    deg = p.degree_in(v_name)
    out = [Fraction(0)] * (deg + 1)
    for e, c in p.terms.items():
        out[e[iv]] += c * u0 ** e[iu]
    return out


def affine_common_zeros(polys, ring2):
    """Common zeros in Q^2 of two-variable polynomials, with completeness.

    Returns Located with points as (u0, v0) pairs.  Raises
    PositiveDimensionalError when the polynomials share a factor.
    """
    u_name, v_name = ring2.variables
    alive = [p for p in polys if not p.is_zero()]
    if not alive:
        raise PositiveDimensionalError("empty system")
    g = alive[0]
    for p in alive[1:]:
        g = poly_gcd(g, p)
    if g.total_degree() > 0:
        raise PositiveDimensionalError("system has a common curve component")
    if any(p.is_constant() for p in alive):
        return Located([], True)

    notes = []
    # every common zero has a u-coordinate killing all of these: the v-free
    # polynomials themselves plus the resultants of v-positive coprime pairs
    constraints = [
        univariate_coeffs(p, u_name) for p in alive if p.degree_in(v_name) == 0
    ]
    vpos = sorted(
        (p for p in alive if p.degree_in(v_name) > 0),
        key=lambda p: p.degree_in(v_name),
    )
    for i in range(len(vpos)):
        for j in range(i + 1, len(vpos)):
            if poly_gcd(vpos[i], vpos[j]).total_degree() > 0:
                continue
            r = resultant(vpos[i], vpos[j], v_name)
            if not r.is_zero():
                constraints.append(univariate_coeffs(r, u_name))
    if not constraints:
        raise PositiveDimensionalError("no usable elimination constraint")
    gc = constraints[0]
    for c in constraints[1:]:
        gc = _univ_gcd(gc, c)
        if len(gc) == 1:
            break
    if len(gc) == 1:
        return Located([], True)
    u_candidates, complete_u = _roots_with_flag(gc)
    if not complete_u:
        notes.append("irrational candidate coordinates remain")

    points = []
    complete = complete_u
    for u0 in u_candidates:
        columns = [_substitute_u(p, u_name, v_name, u0) for p in alive]
        try:
            vroots, ok = _univariate_common(columns)
        except PositiveDimensionalError:
            raise
        if not ok:
            complete = False
            notes.append("irrational second coordinate over u=%s" % u0)
        for v0 in vroots:
            points.append((u0, v0))
    return Located(points, complete, notes)


def common_zeros(polys, ring):
    """Common zeros of homogeneous forms on the weighted plane, located over Q."""
    charts = [i for i, w in enumerate(ring.weights) if w == 1]
    seen = {}
    complete = True
    notes = []
    for idx, chart in enumerate(charts):
        restricted = [restrict_to_chart(F, chart) for F in polys]
        lring = restricted[0].ring
        if all(p.is_zero() for p in restricted):
            raise PositiveDimensionalError("forms vanish on a whole chart")
        loc = affine_common_zeros(restricted, lring)
        complete = complete and loc.complete
        notes.extend(loc.notes)
        for u0, v0 in loc.points:
            coords = [None] * ring.nvars
            coords[chart] = Fraction(1)
            j = 0
            for i in range(ring.nvars):
                if i != chart:
                    coords[i] = (u0, v0)[j]
                    j += 1
            pt = ProjPoint(ring, coords)
            seen[pt.coords] = pt
    # points outside every weight-1 chart (the vertex on P(1,1,2))
    heavy = [i for i, w in enumerate(ring.weights) if w > 1]
    if len(heavy) == 1 and len(charts) == ring.nvars - 1:
        coords = [Fraction(0)] * ring.nvars
        coords[heavy[0]] = Fraction(1)
        if all(F.evaluate(dict(zip(ring.variables, coords))) == 0 for F in polys):
            pt = ProjPoint(ring, coords)
            seen[pt.coords] = pt
    return Located(list(seen.values()), complete, notes)


def singular_points_of(F, ring):
    """Singular points of the curve {F = 0} located over Q."""
    charts = [i for i, w in enumerate(ring.weights) if w == 1]
    seen = {}
    complete = True
    notes = []
    for chart in charts:
        f = restrict_to_chart(F, chart)
        lring = f.ring
        u, v = lring.variables
        system = [f, f.partial(u), f.partial(v)]
        loc = affine_common_zeros(system, lring)
        complete = complete and loc.complete
        notes.extend(loc.notes)
        for u0, v0 in loc.points:
            coords = [None] * ring.nvars
            coords[chart] = Fraction(1)
            j = 0
            for i in range(ring.nvars):
                if i != chart:
                    coords[i] = (u0, v0)[j]
                    j += 1
            pt = ProjPoint(ring, coords)
            seen[pt.coords] = pt
    heavy = [i for i, w in enumerate(ring.weights) if w > 1]
    if len(heavy) == 1 and len(charts) == ring.nvars - 1:
        # the vertex is a surface singularity; curve singularity analysis
        # there is handled separately by the vertex operations
        pass
    return Located(list(seen.values()), complete, notes)


def pairwise_intersections(A, B, ring):
    """Rational intersection points of two coprime curves, with completeness."""
    return common_zeros([A, B], ring)


def parametrize_hyperplane_section(H):
    """Rational parametrization of a hyperplane section a*y + q(x0,x1) on P(1,1,2).

    Returns (binary ring in (s,t), images dict) with the section traced by
    (x0, x1, y) = (s, t, -q(s,t)/a).  Requires a nonzero y-coefficient (a
    section through the vertex splits into rulings and is not accepted).
    """
    ring = H.ring
    x0, x1, y = ring.variables
    a = H.coefficient((0, 0, 1))
    if H.weighted_degree() != 2:
        raise ValueError("not a hyperplane section (weighted degree 2 expected)")
    if a == 0:
        raise ValueError("section through the vertex: no rational parametrization here")
    bring = WeightedRing(("s", "t"), (1, 1))
    s, t = bring.gens()
    q = H - ring.monomial((0, 0, 1), a)
    qst = q.substitute({x0: s, x1: t, y: bring.zero()})
    return bring, {x0: s, x1: t, y: qst * (-1 / a)}


def parametrize_line(L):
    """Rational parametrization of a line on the plane P^2."""
    ring = L.ring
    if set(ring.weights) != {1} or ring.nvars != 3:
        raise ValueError("expected the plane P^2")
    if L.weighted_degree() != 1:
        raise ValueError("not a line")
    coeffs = [L.coefficient(tuple(1 if j == i else 0 for j in range(3))) for i in range(3)]
    # two independent points spanning the line
    basis = []
    for trial in ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 0, 1), (0, 1, 1)):
        if sum(c * t for c, t in zip(coeffs, trial)) == 0:
            if not basis or not _parallel(basis[0], trial):
                basis.append(tuple(Fraction(x) for x in trial))
        if len(basis) == 2:
            break
    if len(basis) < 2:
        # generic fallback: solve the single linear equation
        i = next(i for i, c in enumerate(coeffs) if c != 0)
        basis = []
        for j in range(3):
            if j == i:
                continue
            pt = [Fraction(0)] * 3
            pt[j] = Fraction(1)
            pt[i] = -coeffs[j] / coeffs[i]
            basis.append(tuple(pt))
    bring = WeightedRing(("s", "t"), (1, 1))
    s, t = bring.gens()
    images = {}
    for i, v in enumerate(ring.variables):
        images[v] = s * basis[0][i] + t * basis[1][i]
    return bring, images


def _parallel(a, b):
    for i in range(3):
        for j in range(i + 1, 3):
            if a[i] * b[j] - a[j] * b[i] != 0:
                return False
    return True


def restrict_along(F, bring, images):
    """Binary form obtained by substituting a parametrization into F."""
    return F.substitute(images)


def binary_form_points(form, bring, images, ring):
    """Zeros of a homogeneous binary form pushed through a parametrization.

    Returns a list of (ProjPoint, multiplicity) for the rational zeros and a
    completeness flag (False when irrational zeros exist).
    """
    if form.is_zero():
        raise PositiveDimensionalError("form vanishes along the curve")
    total = form.weighted_degree()
    if total is None:
        raise ValueError("restriction is not homogeneous")
    g = [Fraction(0)] * (total + 1)
    for e, c in form.terms.items():
        g[e[1]] += c
    while g and g[-1] == 0:
        g.pop()
    k_inf = total - (len(g) - 1)
    out = []
    complete = True
    if len(g) > 1:
        found = rational_roots(g)
        for r, m in found:
            out.append((_param_point(images, ring, Fraction(1), r), m))
        if sum(m for _, m in found) < len(g) - 1:
            complete = False
    if k_inf >= 1:
        out.append((_param_point(images, ring, Fraction(0), Fraction(1)), k_inf))
    return out, complete


def _param_point(images, ring, s0, t0):
    point = [images[v].evaluate({"s": s0, "t": t0}) for v in ring.variables]
    return ProjPoint(ring, point)
