"""Canonical models: the degree-10 hypersurface and the (6,6) intersection.

The two ambient rings are

* S1 = Q[x0, x1, y, z] with weights (1, 1, 2, 5), hosting canonical models
  with p_g = 2 as hypersurfaces of weighted degree 10;
* S2 = Q[x0, y1, y2, z1, z2] with weights (1, 2, 2, 3, 3), hosting the
  p_g = 1 models as complete intersections of bidegree (6, 6).

Hilbert functions are computed combinatorially from the degrees, with an
optional exact-rank certificate that the defining equations behave like a
(regular sequence of a) hypersurface in the range checked.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .covers import BranchDivisorQ
from .linsys import monomial_basis, p112_ring, rank
from .wpoly import WeightedRing, WPoly, poly_gcd


class ModelError(ValueError):
    pass


def s1_ring():
    return WeightedRing(("x0", "x1", "y", "z"), (1, 1, 2, 5))


def s2_ring():
    return WeightedRing(("x0", "y1", "y2", "z1", "z2"), (1, 2, 2, 3, 3))


def _mono_count(ring, d):
    if d < 0:
        return 0
    return len(monomial_basis(ring, d))


@dataclass
class HypersurfaceModel:
    """A weighted-degree-10 form in S1 cutting the canonical model."""

    f: WPoly

    def __post_init__(self):
        if self.f.ring != s1_ring():
            raise ModelError("hypersurface model lives in S1 = Q[x0,x1,y,z](1,1,2,5)")
        if self.f.is_zero() or self.f.weighted_degree() != 10:
            raise ModelError("defining equation must be weighted homogeneous of degree 10")

    def z_square_coeff(self):
        return self.f.coefficient((0, 0, 0, 2))

    def y_fifth_coeff(self):
        return self.f.coefficient((0, 0, 5, 0))


@dataclass
class CIModel:
    """A (6,6) complete intersection in S2 in the normalized format.

    f1 = z1^2 + z2*x0*a1 + b1 and f2 = z2^2 + z1*x0*a2 + b2: completing the
    squares removes the z1-linear terms from f1 and the z2-linear terms from
    f2, and reducing the pencil removes z2^2 from f1 and z1^2 from f2.
    """

    f1: WPoly
    f2: WPoly

    def __post_init__(self):
        ring = s2_ring()
        if self.f1.ring != ring or self.f2.ring != ring:
            raise ModelError("CI model lives in S2 = Q[x0,y1,y2,z1,z2](1,2,2,3,3)")
        for f in (self.f1, self.f2):
            if f.is_zero() or f.weighted_degree() != 6:
                raise ModelError("both equations must be weighted homogeneous of degree 6")
        iz1 = ring.index("z1")
        iz2 = ring.index("z2")
        for f, own, other in ((self.f1, iz1, iz2), (self.f2, iz2, iz1)):
            for e in f.terms:
                if e[own] not in (0, 2):
                    raise ModelError("format violation: stray z-linear term")
                if e[own] == 2 and any(e[i] for i in range(5) if i != own):
                    raise ModelError("format violation: z^2 must appear alone")
                if e[other] >= 2:
                    raise ModelError("format violation: wrong z^2 in the equation")

    def parts(self, which):
        """(z^2 coefficient, a, b) of equation `which` in {1, 2}."""
        ring = s2_ring()
        f = self.f1 if which == 1 else self.f2
        own = ring.index("z1" if which == 1 else "z2")
        other = ring.index("z2" if which == 1 else "z1")
        ix0 = ring.index("x0")
        csq = Fraction(0)
        a = ring.zero()
        b = ring.zero()
        for e, c in f.terms.items():
            if e[own] == 2:
                csq = c
            elif e[other] == 1:
                if e[ix0] < 1:
                    raise ModelError("format violation: cross term without x0")
                e2 = list(e)
                e2[other] = 0
                e2[ix0] -= 1
                a = a + WPoly(ring, {tuple(e2): c})
            else:
                b = b + WPoly(ring, {e: c})
        return csq, a, b


def hilbert_hypersurface(model, m_max):
    """h^0(m K) for the hypersurface model, m = 0 .. m_max."""
    ring = s1_ring()
    return [_mono_count(ring, m) - _mono_count(ring, m - 10) for m in range(m_max + 1)]


def hilbert_ci(model, m_max):
    """h^0(m K) for the complete-intersection model, m = 0 .. m_max."""
    ring = s2_ring()
    return [
        _mono_count(ring, m) - 2 * _mono_count(ring, m - 6) + _mono_count(ring, m - 12)
        for m in range(m_max + 1)
    ]


def hilbert_closed_form(chi, m):
    """chi + m(m-1)/2, valid for m >= 2 (and m = 0 with the convention h0 = 1)."""
    return chi + m * (m - 1) // 2


def verify_multiplication_rank(model, m_max=12):
    """Exact-rank certificate for the combinatorial Hilbert function.

    Hypersurface: multiplication by f from degree m-10 to degree m must be
    injective.  CI: the span of f1*S_(m-6) + f2*S_(m-6) must have dimension
    2 N_{m-6} - N_{m-12} (only the Koszul syzygy).  Returns True when the
    certificate holds for every m <= m_max.
    """
    if isinstance(model, HypersurfaceModel):
        ring = s1_ring()
        for m in range(10, m_max + 1):
            src = monomial_basis(ring, m - 10)
            dst = {e: i for i, e in enumerate(monomial_basis(ring, m))}
            rows = []
            for e in src:
                prod = WPoly(ring, {e: Fraction(1)}) * model.f
                row = [Fraction(0)] * len(dst)
                for ee, c in prod.terms.items():
                    row[dst[ee]] = c
                rows.append(row)
            if rank(rows) != len(src):
                return False
        return True
    ring = s2_ring()
    for m in range(6, m_max + 1):
        src = monomial_basis(ring, m - 6)
        dst = {e: i for i, e in enumerate(monomial_basis(ring, m))}
        rows = []
        for f in (model.f1, model.f2):
            for e in src:
                prod = WPoly(ring, {e: Fraction(1)}) * f
                row = [Fraction(0)] * len(dst)
                for ee, c in prod.terms.items():
                    row[dst[ee]] = c
                rows.append(row)
        expected = 2 * _mono_count(ring, m - 6) - _mono_count(ring, m - 12)
        if rank(rows) != expected:
            return False
    return True


@dataclass
class AmbientCheck:
    ok: bool
    reasons: list


def ambient_smoothness_check(model):
    """Does the model avoid the singular locus of its weighted ambient space?

    Hypersurface: the points (0:0:1:0) and (0:0:0:1) avoid X iff f contains
    y^5 and z^2.  CI: the lines P(2,2) and P(3,3) avoid X iff z1^2, z2^2 are
    present and b1(0,y1,y2), b2(0,y1,y2) are coprime.
    """
    reasons = []
    if isinstance(model, HypersurfaceModel):
        if model.z_square_coeff() == 0:
            reasons.append("missing z^2: the model passes through (0:0:0:1)")
        if model.y_fifth_coeff() == 0:
            reasons.append("missing y^5: the model passes through (0:0:1:0)")
        return AmbientCheck(not reasons, reasons)
    ring = s2_ring()
    c1, a1, b1 = model.parts(1)
    c2, a2, b2 = model.parts(2)
    if c1 == 0:
        reasons.append("missing z1^2 in the first equation")
    if c2 == 0:
        reasons.append("missing z2^2 in the second equation")
    bring = WeightedRing(("y1", "y2"), (2, 2))
    imgs = {
        "x0": bring.zero(),
        "y1": bring.variable("y1"),
        "y2": bring.variable("y2"),
        "z1": bring.zero(),
        "z2": bring.zero(),
    }
    b1bar = b1.substitute(imgs)
    b2bar = b2.substitute(imgs)
    if b1bar.is_zero() or b2bar.is_zero():
        reasons.append("restriction of b_i to x0 = 0 vanishes: model meets P(2,2)")
    elif poly_gcd(b1bar, b2bar).total_degree() > 0:
        reasons.append("b1(0,y1,y2), b2(0,y1,y2) share a factor: model meets P(2,2)")
    return AmbientCheck(not reasons, reasons)


def complete_square_in_z(f):
    """Remove the z-linear part of a degree-10 form by z -> z - h/(2c).

    Returns (g, z_shift): g has no z-linear terms, g = f after substituting
    z -> z + z_shift.
    """
    ring = s1_ring()
    iz = ring.index("z")
    c = f.coefficient((0, 0, 0, 2))
    if c == 0:
        raise ModelError("cannot complete the square without z^2")
    h = ring.zero()
    for e, coeff in f.terms.items():
        if e[iz] == 1:
            e2 = list(e)
            e2[iz] = 0
            h = h + WPoly(ring, {tuple(e2): coeff})
    if h.is_zero():
        return f, ring.zero()
    shift = h * Fraction(-1, 2) / c
    z = ring.variable("z")
    g = f.substitute(
        {"x0": ring.variable("x0"), "x1": ring.variable("x1"), "y": ring.variable("y"), "z": z + shift}
    )
    return g, shift


def bicanonical_branch(model):
    """Branch divisor of the bicanonical double cover onto P(1,1,2).

    After completing the square, f = c z^2 + r(x0, x1, y) and the branch
    quintic section is r/c; the model is branched over it and the vertex.
    The vertex avoids the branch curve exactly when y^5 survives.
    """
    check = ambient_smoothness_check(model)
    if not check.ok:
        raise ModelError("; ".join(check.reasons))
    g, _ = complete_square_in_z(model.f)
    ring = s1_ring()
    c = g.coefficient((0, 0, 0, 2))
    r = g - ring.monomial((0, 0, 0, 2), c)
    if any(e[3] for e in r.terms):
        raise AssertionError("square completion left z-terms behind")
    target = p112_ring()
    imgs = {
        "x0": target.variable("x0"),
        "x1": target.variable("x1"),
        "y": target.variable("y"),
        "z": target.zero(),
    }
    branch_poly = r.substitute(imgs) / c
    return BranchDivisorQ([(branch_poly, 1)])


def hypersurface_from_branch(branch):
    """Reconstruct the canonical model z^2 + Delta from a branch quintic."""
    if len(branch.components) != 1 or branch.components[0][1] != 1:
        f = branch.full_equation()
    else:
        f = branch.components[0][0]
    ring = s1_ring()
    imgs = {
        "x0": ring.variable("x0"),
        "x1": ring.variable("x1"),
        "y": ring.variable("y"),
    }
    lifted = f.substitute(imgs)
    return HypersurfaceModel(ring.monomial((0, 0, 0, 2), 1) + lifted)


@dataclass
class CurveRestriction:
    valid: bool
    relation: WPoly  # z^2 + h(x1, y) in the ring (x1, y, z)
    residual: WPoly  # h with the y^5 part removed, divided by x1^2 when valid
    reason: str


def canonical_curve_restriction(model):
    """Restrict to the canonical curve x0 = 0 and normalize the relation.

    The result is z^2 + h(x1, y); the model comes from a degree-1 line
    bundle on an integral curve exactly when h is not divisible by x1^2,
    i.e. when y^5 survives the restriction.
    """
    check = ambient_smoothness_check(model)
    if not check.ok:
        raise ModelError("; ".join(check.reasons))
    bring = WeightedRing(("x1", "y", "z"), (1, 2, 5))
    imgs = {
        "x0": bring.zero(),
        "x1": bring.variable("x1"),
        "y": bring.variable("y"),
        "z": bring.variable("z"),
    }
    fbar = model.f.substitute(imgs)
    # complete the square in z within the restricted ring
    c = fbar.coefficient((0, 0, 2))
    if c == 0:
        raise ModelError("restriction lost z^2")
    h_lin = bring.zero()
    for e, coeff in fbar.terms.items():
        if e[2] == 1:
            h_lin = h_lin + WPoly(bring, {(e[0], e[1], 0): coeff})
    z = bring.variable("z")
    fbar = fbar.substitute(
        {"x1": bring.variable("x1"), "y": bring.variable("y"), "z": z - h_lin / (2 * c)}
    )
    fbar = fbar / c
    h = fbar - bring.monomial((0, 0, 2), 1)
    a5 = h.coefficient((0, 5, 0))
    if a5 == 0:
        return CurveRestriction(
            valid=False,
            relation=fbar,
            residual=bring.zero(),
            reason="h is divisible by x1^2: the point (0:1:0) would be a"
            " singular base point of a degree-1 bundle",
        )
    x1sq = bring.monomial((2, 0, 0), 1)
    residual = (h - bring.monomial((0, 5, 0), a5)).exact_div(x1sq) if h != bring.monomial((0, 5, 0), a5) else bring.zero()
    return CurveRestriction(valid=True, relation=fbar, residual=residual, reason="")


def base_point(model):
    """The base point of |K|: the common zero of x0, x1 on the model.

    For f = a z^2 + b y^5 + (terms with x0 or x1) this is the single point
    (0 : 0 : -a b : a^2 b^3) of P(1,1,2,5), reduced to a canonical integer
    representative.
    """
    check = ambient_smoothness_check(model)
    if not check.ok:
        raise ModelError("; ".join(check.reasons))
    a = model.z_square_coeff()
    b = model.y_fifth_coeff()
    return _reduce_weighted_point(-a * b, a * a * b**3)


def _reduce_weighted_point(y0, z0):
    y0 = Fraction(y0)
    z0 = Fraction(z0)
    # clear denominators with t^2 | y, t^5 | z scaling
    den = (y0.denominator * z0.denominator)
    y0, z0 = y0 * den**2, z0 * den**5
    yi, zi = int(y0), int(z0)
    t = 2
    while t**2 <= abs(yi):
        while yi % t**2 == 0 and zi % t**5 == 0:
            yi //= t**2
            zi //= t**5
        t += 1
    return (Fraction(0), Fraction(0), Fraction(yi), Fraction(zi))


def bicanonical_basis(model):
    """Monomial basis of H^0(2K) for the hypersurface model."""
    return monomial_basis(s1_ring(), 2)
