"""Branch data to stable-surface invariants.

Two constructions are covered:

* double covers of the quadric cone Q (the image of P(1,1,2) in P^3)
  branched over a quintic section Delta and the vertex; these carry K^2 = 1,
  chi = 3, and their singularities are read off from the singularities of
  Delta;
* bi-double covers of the plane with branch data (D0, D1, D2) of degrees
  (1,3,3), carrying K^2 = 1, chi = 2.

Reports are exact: classification happens on located rational points, and a
separate certificate records that every unlocated singular point of the
support is at most a double point (hence negligible for the cover).
"""

from dataclasses import dataclass, field
from fractions import Fraction

from . import germs
from .germs import (
    ELLIPTIC_DEG1,
    ELLIPTIC_DEG2,
    ELLIPTIC_DEG4,
    NEGLIGIBLE,
    NOT_SLC,
    QUARTER_POINT,
    SingularityReport,
    classify_components,
)
from .linsys import ConditionSpec, PointWPS, TangentDir, monomial_basis, p112_ring, rank, vanishing_conditions
from .locate import (
    Located,
    ProjPoint,
    binary_form_points,
    localize,
    parametrize_hyperplane_section,
    parametrize_line,
    pairwise_intersections,
    singular_points_of,
)
from .roots import squarefree_profile
from .textio import format_poly
from .wpoly import WeightedRing, WPoly, poly_gcd


class InvalidBranchDataError(ValueError):
    pass


class NotLogCanonicalError(ValueError):
    def __init__(self, message, point=None):
        super().__init__(message)
        self.point = point


def p2_ring():
    return WeightedRing(("y0", "y1", "y2"), (1, 1, 1))


# ---------------------------------------------------------------------------
# branch divisors on the quadric cone
# ---------------------------------------------------------------------------


VERTEX = (Fraction(0), Fraction(0), Fraction(1))


@dataclass
class BranchDivisorQ:
    """A quintic section of the cone given as components with multiplicities.

    Each component is asserted irreducible by the caller; the support must
    be reduced (squarefree components, pairwise coprime).  Multiplicities
    above 2 are admitted at construction and reported as non-lc by the
    analysis rather than rejected here.
    """

    components: list  # [(WPoly on P(1,1,2), int multiplicity)]

    def __post_init__(self):
        if not self.components:
            raise InvalidBranchDataError("no components")
        ring = self.components[0][0].ring
        total = 0
        for poly, mult in self.components:
            if poly.ring != ring:
                raise InvalidBranchDataError("components in different rings")
            if poly.is_zero():
                raise InvalidBranchDataError("zero component")
            d = poly.weighted_degree()
            if d is None:
                raise InvalidBranchDataError("inhomogeneous component")
            if mult < 1:
                raise InvalidBranchDataError("multiplicities must be >= 1")
            total += mult * d
        if total != 10:
            raise InvalidBranchDataError(
                "total weighted degree %d != 10 (Delta must lie in |O_Q(5)|)" % total
            )

    @property
    def ring(self):
        return self.components[0][0].ring

    def support(self):
        f = self.ring.one()
        for poly, _ in self.components:
            f = f * poly
        return f

    def full_equation(self):
        f = self.ring.one()
        for poly, mult in self.components:
            f = f * poly**mult
        return f

    def is_reduced(self):
        return all(m == 1 for _, m in self.components)

    def contains_vertex(self):
        point = dict(zip(self.ring.variables, VERTEX))
        return any(p.evaluate(point) == 0 for p, _ in self.components)


def _validate_reduced_support(components):
    from .wpoly import is_squarefree

    for poly, _ in components:
        if not is_squarefree(poly):
            raise InvalidBranchDataError(
                "component is not squarefree: %s" % format_poly(poly)
            )
    for i in range(len(components)):
        for j in range(i + 1, len(components)):
            if poly_gcd(components[i][0], components[j][0]).total_degree() > 0:
                raise InvalidBranchDataError(
                    "components %d and %d share a factor" % (i, j)
                )


@dataclass
class BranchPoint:
    point: ProjPoint
    report: SingularityReport
    lc: bool
    local_mults: tuple  # order of each component at the point (input order)
    extra: dict = field(default_factory=dict)

    def verdict(self):
        return self.report.verdict


@dataclass
class BranchAnalysis:
    lc: bool
    reason: str
    points: list  # BranchPoint, germ order >= 2 only
    rest_negligible_certified: bool
    warnings: list
    vertex_order: object  # int when the support passes through the vertex, else None
    matching_pairs: list  # [(i, j)] indices into points, [3,3] matching tangents

    def elliptic_points(self):
        return [bp for bp in self.points if bp.report.is_elliptic()]

    def elliptic_degrees(self):
        return sorted(bp.report.elliptic_degree() for bp in self.elliptic_points())

    def offending_points(self):
        return [bp for bp in self.points if not bp.lc]


def _is_section_parametrizable(poly):
    return (
        poly.ring.weights == (1, 1, 2)
        and poly.weighted_degree() == 2
        and poly.coefficient((0, 0, 1)) != 0
    )


def _is_plane_line(poly):
    return poly.ring.weights == (1, 1, 1) and poly.weighted_degree() == 1


def _restrict_and_locate(curve, others, ring):
    """Complete common zeros of `others` along a rationally parametrized curve."""
    if _is_section_parametrizable(curve):
        bring, images = parametrize_hyperplane_section(curve)
    elif _is_plane_line(curve):
        bring, images = parametrize_line(curve)
    else:
        return None
    form = others[0].substitute(images)
    if form.is_zero():
        return None
    pts, complete = binary_form_points(form, bring, images, ring)
    out = []
    for pt, m in pts:
        if all(
            other.evaluate(dict(zip(ring.variables, pt.coords))) == 0
            for other in others[1:]
        ):
            out.append(pt)
    return Located(out, complete)


def _triple_locus(a, b, c, ring):
    """Common zeros of three pairwise-coprime forms, preferring restrictions."""
    for curve, others in ((a, (b, c)), (b, (a, c)), (c, (a, b))):
        loc = _restrict_and_locate(curve, list(others), ring)
        if loc is not None and loc.complete:
            return loc
    from .locate import common_zeros

    return common_zeros([a, b, c], ring)


def _analyze_support(components, coefficients, ring, extra_points=()):
    """Locate and classify the singular points of a component-list support.

    components: list of (poly, anything); coefficients: pair coefficients for
    the lc test, one per component.
    """
    polys = [p for p, _ in components]
    warnings = []
    candidates = {}
    sing_complete = True
    for p in polys:
        loc = singular_points_of(p, ring)
        sing_complete = sing_complete and loc.complete
        warnings.extend(loc.notes)
        for pt in loc.points:
            candidates[pt.coords] = pt
    pair_complete = True
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            loc = _restrict_and_locate(polys[i], [polys[j]], ring)
            if loc is None:
                loc = _restrict_and_locate(polys[j], [polys[i]], ring)
            if loc is None:
                loc = pairwise_intersections(polys[i], polys[j], ring)
            pair_complete = pair_complete and loc.complete
            for pt in loc.points:
                candidates[pt.coords] = pt
    for pt in extra_points:
        candidates[pt.coords] = pt
    # triple-overlap completeness: unlocated pair intersections are double
    # points unless a third component also passes through
    triple_complete = True
    if not pair_complete:
        for i in range(len(polys)):
            for j in range(i + 1, len(polys)):
                for k in range(j + 1, len(polys)):
                    loc = _triple_locus(polys[i], polys[j], polys[k], ring)
                    triple_complete = triple_complete and loc.complete
                    for pt in loc.points:
                        candidates[pt.coords] = pt
    rest_certified = sing_complete and (pair_complete or triple_complete)
    if not rest_certified:
        warnings.append("singular-point location incomplete; rest-negligible not certified")

    points = []
    for pt in candidates.values():
        if pt.is_vertex():
            continue  # vertex handled separately by the cone analysis
        local = []
        mults = []
        for p in polys:
            germ = localize(p, pt)
            order = 0 if germ.coefficient(tuple([0] * (ring.nvars - 1))) != 0 else germ.order()
            mults.append(order)
            if order >= 1:
                local.append(germ)
        through = [g for g in local]
        total = sum(mults)
        if total < 2:
            continue
        report = classify_components(through)
        res = germs.resolve(through)
        coeffs_here = [c for c, m in zip(coefficients, mults) if m >= 1]
        lc_here = res.log_canonical(coeffs_here)
        report.point = pt
        points.append(BranchPoint(point=pt, report=report, lc=lc_here, local_mults=tuple(mults)))
    points.sort(key=lambda bp: bp.point.coords)
    return points, rest_certified, warnings


def check_hurwitz_slc(branch, extra_points=()):
    """Log-canonicity and singularity report for (Q, 1/2 Delta).

    Component multiplicities above 2 yield an immediate not-lc verdict.
    Vertex behavior (when the support passes through the vertex) is analyzed
    on the orbifold chart and included in the lc verdict.
    """
    ring = branch.ring
    if any(m > 2 for _, m in branch.components):
        return BranchAnalysis(
            lc=False,
            reason="a component has multiplicity > 2, so 1/2 Delta has a coefficient > 1",
            points=[],
            rest_negligible_certified=True,
            warnings=[],
            vertex_order=None,
            matching_pairs=[],
        )
    _validate_reduced_support(branch.components)
    coefficients = [Fraction(m, 2) for _, m in branch.components]
    points, certified, warnings = _analyze_support(
        branch.components, coefficients, ring, extra_points
    )
    lc = all(bp.lc for bp in points)
    reason = ""
    offenders = [bp for bp in points if not bp.lc]
    if offenders:
        reason = "pair is not lc at %r" % (offenders[0].point,)

    vertex_order = None
    if branch.contains_vertex():
        vertex_order = vertex_order_at_O(branch)
        vgerm_comps = []
        vcoeffs = []
        lring = WeightedRing(("x0", "x1"), (1, 1))
        for (p, m), c in zip(branch.components, coefficients):
            germ = p.substitute(
                {"x0": lring.variable("x0"), "x1": lring.variable("x1"), "y": lring.one()}
            )
            if germ.coefficient((0, 0)) == 0:
                vgerm_comps.append(germ)
                vcoeffs.append(c)
        if vgerm_comps:
            vres = germs.resolve(vgerm_comps)
            if not vres.log_canonical(vcoeffs):
                lc = False
                reason = reason or "pair is not lc at the vertex"

    matching = []
    ell1 = [
        (i, bp)
        for i, bp in enumerate(points)
        if bp.report.verdict == ELLIPTIC_DEG1 and bp.report.tangent is not None
    ]
    for a in range(len(ell1)):
        for b in range(a + 1, len(ell1)):
            ia, bpa = ell1[a]
            ib, bpb = ell1[b]
            if tangents_match(bpa.point, bpa.report.tangent, bpb.point, bpb.report.tangent):
                matching.append((ia, ib))
    return BranchAnalysis(
        lc=lc,
        reason=reason,
        points=points,
        rest_negligible_certified=certified,
        warnings=warnings,
        vertex_order=vertex_order,
        matching_pairs=matching,
    )


def tangents_match(point_a, dir_a, point_b, dir_b):
    """Is there one hyperplane section tangent to both prescribed directions?

    Four linear conditions (pass through and simple tangency at each point)
    on the four coefficients of a degree-2 form; a matching tangent
    hyperplane exists exactly when they are dependent.
    """
    ring = p112_ring()
    rows = []
    for pt, d in ((point_a, dir_a), (point_b, dir_b)):
        wps = PointWPS(*pt.coords)
        spec = ConditionSpec(wps, "tangency", tangent=d)
        rows.extend(vanishing_conditions(spec, 2, ring))
    return rank(rows) < 4


def vertex_order_at_O(branch):
    """Order of the full branch equation at the vertex chart (x0, x1)."""
    f = branch.full_equation()
    order = min(e[0] + e[1] for e in f.terms)
    return order


VERTEX_LABELS = {
    0: "smooth point over the vertex",
    2: "quarter point 1/4(1,1) over the vertex",
    4: "Z/2-quotient of an elliptic singularity over the vertex",
}


@dataclass
class VertexReport:
    order: int
    label: str
    kodaira_note: str


def vertex_behavior(branch):
    """Intersection of the strict transform with the exceptional curve over O.

    The order is always even; 0, 2, 4 correspond to a smooth point, a
    1/4(1,1) point and a Z/2-quotient of an elliptic singularity on the
    cover.  Orders above 4 are rejected as non-lc.
    """
    analysis = check_hurwitz_slc(branch)
    if not analysis.lc:
        raise NotLogCanonicalError(analysis.reason or "branch pair is not lc")
    order = vertex_order_at_O(branch) if branch.contains_vertex() else 0
    if order % 2 == 1:
        raise AssertionError("parity violation: vertex order must be even")
    if order > 4:
        raise NotLogCanonicalError(
            "strict transform meets the exceptional curve with multiplicity > 4"
        )
    notes = {
        0: "cover is Gorenstein over the vertex",
        2: "minimal resolution is properly elliptic (Kodaira dimension 1)",
        4: "minimal resolution is properly elliptic (Kodaira dimension 1)",
    }
    return VertexReport(order=order, label=VERTEX_LABELS[order], kodaira_note=notes[order])


# Table 1: minimal resolution and Kodaira dimension by elliptic degrees
# (with the matching-tangent flag separating the two {1,1} strata).
NORMAL_STRATA_TABLE = {
    (): ("M13", "surface of general type", "2"),
    (2,): ("N2", "blow-up of a K3 surface", "0"),
    (1,): ("N1", "minimal elliptic surface with chi = 2", "1"),
    (2, 2): ("N22", "rational surface", "-oo"),
    (1, 2): ("N12", "rational surface", "-oo"),
    (1, 1, "R"): ("N11R", "rational surface", "-oo"),
    (1, 1, "E"): ("N11E", "blow-up of an Enriques surface", "0"),
    (1, 1, 2): ("N112", "ruled surface with chi = 0", "-oo"),
    (1, 1, 1): ("N111", "ruled surface with chi = 0", "-oo"),
}

NON_NORMAL_TABLE = {
    "P": ("the projective plane", "-oo"),
    "dP": ("del Pezzo surface of degree 1", "-oo"),
    "E-": ("minimal ruled surface with chi = 0", "-oo"),
}


@dataclass
class CoverReport:
    k_squared: Fraction
    chi: int
    cartier_index: int
    gorenstein: bool
    normal: bool
    singularities: list  # BranchPoint
    rest_negligible_certified: bool
    warnings: list
    stratum: object = None
    normalisation: object = None
    resolution: object = None  # (description, kodaira dimension string)
    vertex: object = None

    def singularity_names(self):
        return sorted(bp.report.verdict for bp in self.singularities)


def double_cover_report(branch, extra_points=()):
    """Invariants of the double cover of the cone with Hurwitz divisor Delta/2.

    Raises NotLogCanonicalError (with the offending point) on non-lc input.
    """
    analysis = check_hurwitz_slc(branch, extra_points)
    if not analysis.lc:
        off = analysis.offending_points()
        raise NotLogCanonicalError(
            analysis.reason or "branch pair is not lc",
            point=off[0].point if off else None,
        )
    through_vertex = branch.contains_vertex()
    normal = branch.is_reduced()
    report = CoverReport(
        k_squared=Fraction(1),
        chi=3,
        cartier_index=2 if through_vertex else 1,
        gorenstein=not through_vertex,
        normal=normal,
        singularities=[bp for bp in analysis.points if bp.report.verdict != "smooth"],
        rest_negligible_certified=analysis.rest_negligible_certified,
        warnings=list(analysis.warnings),
    )
    if through_vertex:
        report.vertex = vertex_behavior(branch)
    if normal and report.gorenstein:
        degs = tuple(analysis.elliptic_degrees())
        key = degs
        if degs == (1, 1):
            key = (1, 1, "E" if analysis.matching_pairs else "R")
        if key in NORMAL_STRATA_TABLE:
            name, desc, kappa = NORMAL_STRATA_TABLE[key]
            report.stratum = name
            report.resolution = (desc, kappa)
    elif not normal:
        label = normalisation_type(branch)
        report.normalisation = label
        desc, kappa = NON_NORMAL_TABLE[label]
        report.resolution = (desc, kappa)
    return report


def normalisation_type(branch):
    """Type of the normalisation for a non-reduced lc branch divisor.

    Delta = Delta0 + 2*Delta1 with Delta1 in |O_Q(k)|: k = 2 gives (P),
    k = 1 gives (dP), or (E-) when the residual curve carries a [3,3]-point.
    """
    doubled = [(p, m) for p, m in branch.components if m == 2]
    if not doubled:
        raise InvalidBranchDataError("branch divisor is reduced")
    if any(m > 2 for _, m in branch.components):
        raise NotLogCanonicalError("component of multiplicity > 2")
    deg1 = sum(p.weighted_degree() for p, _ in doubled)
    if deg1 not in (2, 4):
        raise InvalidBranchDataError(
            "doubled part has weighted degree %d, expected 2 or 4" % deg1
        )
    analysis = check_hurwitz_slc(branch)
    if not analysis.lc:
        raise NotLogCanonicalError(analysis.reason or "branch pair is not lc")
    if deg1 == 4:
        return "P"
    residual = [(p, m) for p, m in branch.components if m == 1]
    res_branch_points = []
    for bp in analysis.points:
        mults = [
            m
            for (poly, mult), m in zip(branch.components, bp.local_mults)
            if mult == 1 and m >= 1
        ]
        if sum(mults) >= 2:
            residual_germs = [
                localize(poly, bp.point)
                for (poly, mult), m in zip(branch.components, bp.local_mults)
                if mult == 1 and m >= 1
            ]
            res_branch_points.append(classify_components(residual_germs))
    if any(rep.verdict == ELLIPTIC_DEG1 for rep in res_branch_points):
        return "E-"
    return "dP"


# ---------------------------------------------------------------------------
# bi-double covers of the plane
# ---------------------------------------------------------------------------


@dataclass
class BiDoubleData:
    """Branch data (D0, D1, D2) of a (Z/2)^2-cover of the plane.

    Each divisor is a list of (poly, multiplicity) on P^2; divisors may be
    empty, components may repeat across divisors (but a component with total
    multiplicity above 2 makes the Hurwitz divisor non-reduced and is
    rejected by the report).
    """

    divisors: list

    def __post_init__(self):
        if len(self.divisors) != 3:
            raise InvalidBranchDataError("need exactly three branch divisors")
        ring = None
        for div in self.divisors:
            for poly, mult in div:
                if ring is None:
                    ring = poly.ring
                if poly.ring != ring:
                    raise InvalidBranchDataError("components in different rings")
                if poly.is_zero() or poly.weighted_degree() is None:
                    raise InvalidBranchDataError("bad component")
                if mult < 1:
                    raise InvalidBranchDataError("multiplicities must be >= 1")
        if ring is None:
            raise InvalidBranchDataError("empty branch data")
        if ring.weights != (1, 1, 1):
            raise InvalidBranchDataError("bi-double branch data lives on P^2")

    @property
    def ring(self):
        for div in self.divisors:
            if div:
                return div[0][0].ring
        raise InvalidBranchDataError("empty branch data")

    def degrees(self):
        return tuple(
            sum(m * p.weighted_degree() for p, m in div) for div in self.divisors
        )

    def flat_components(self):
        """Merged component list: (poly, per-divisor multiplicities)."""
        flat = []
        for i, div in enumerate(self.divisors):
            for poly, mult in div:
                key = _canonical(poly)
                for entry in flat:
                    if entry[0] == key:
                        entry[1][i] += mult
                        break
                else:
                    flat.append([key, [0, 0, 0]])
                    flat[-1][1][i] = mult
        return [(poly, tuple(mults)) for poly, mults in flat]


def _canonical(poly):
    from .wpoly import normalized

    return normalized(poly)


def bidouble_invariants(degrees):
    """(a0, a1, a2), chi and the degree of O(1)-pullback class of 2K."""
    d0, d1, d2 = degrees
    if (d0 - d1) % 2 or (d0 - d2) % 2:
        raise InvalidBranchDataError("degrees must agree modulo 2")
    a = ((d1 + d2) // 2, (d0 + d2) // 2, (d0 + d1) // 2)
    chi2 = 8 + sum(ai * (ai - 3) for ai in a)
    if chi2 % 2:
        raise AssertionError("chi formula did not produce an integer")
    chi = chi2 // 2
    two_k = d0 + d1 + d2 - 6
    return a, chi, two_k


@dataclass
class BiDoubleReport:
    degrees: tuple
    a: tuple
    chi: int
    two_k_degree: int
    k_squared: Fraction
    slc: bool
    gorenstein: bool
    normal: bool
    cartier_index: int
    singularities: list  # BranchPoint with bi-double verdicts
    non_normal_components: list
    rest_negligible_certified: bool
    warnings: list
    normalisation: object = None
    resolution: object = None

    def elliptic_degrees(self):
        return sorted(
            bp.report.elliptic_degree()
            for bp in self.singularities
            if bp.report.is_elliptic()
        )


def _bidouble_point_verdict(bp, flat, ring):
    """Cover-singularity type over a singular point of the branch locus.

    Requires the support germ and the distribution of its branches over the
    three divisors; only the configurations arising for (1,3,3) branch data
    are in the catalog, everything else keeps the germ report with the
    verdict 'lc_uncataloged'.
    """
    per_divisor = [0, 0, 0]
    on_non_normal_locus = False
    for (poly, mults), order in zip(flat, bp.local_mults):
        if order < 1:
            continue
        if sum(mults) >= 2:
            on_non_normal_locus = True
        for i in range(3):
            if mults[i]:
                per_divisor[i] += mults[i] * order
    total = sum(per_divisor)
    ordinary = germs.is_ordinary_germ(
        [localize(poly, bp.point) for (poly, mults), o in zip(flat, bp.local_mults) if o >= 1]
    )
    if on_non_normal_locus:
        # the point sits on the conductor; its singularities belong to the
        # normalisation, which is analyzed on the normalized branch data
        verdict = "non_normal_locus"
    elif total == 4 and ordinary:
        split = sorted(per_divisor)
        if split == [0, 1, 3]:
            verdict = ELLIPTIC_DEG1
        elif split == [0, 2, 2]:
            verdict = ELLIPTIC_DEG4
        else:
            verdict = "lc_uncataloged"
    elif total == 3 and ordinary and sorted(per_divisor) == [1, 1, 1]:
        verdict = QUARTER_POINT
    elif total == 2:
        verdict = NEGLIGIBLE
    else:
        verdict = "lc_uncataloged"
    report = SingularityReport(
        verdict=verdict,
        multiplicity_sequence=bp.report.multiplicity_sequence,
        lct=bp.report.lct,
        tangent=bp.report.tangent,
        point=bp.point,
    )
    lone = [i for i in range(3) if per_divisor[i] == 1]
    extra = {"per_divisor": tuple(per_divisor)}
    if verdict == ELLIPTIC_DEG1 and lone:
        extra["lone_divisor"] = lone[0]
    return BranchPoint(
        point=bp.point, report=report, lc=bp.lc, local_mults=bp.local_mults, extra=extra
    )


def bidouble_report(data, extra_points=()):
    """Invariants and singularities of the bi-double cover of the plane.

    The numerical invariants are computed for any degrees satisfying the
    parity condition; the singularity catalog is for the stable-surface
    regime (degrees (1,3,3) and its normalisations).
    """
    ring = data.ring
    degrees = data.degrees()
    a, chi, two_k = bidouble_invariants(degrees)
    flat = data.flat_components()
    for poly, mults in flat:
        if sum(mults) > 2:
            raise InvalidBranchDataError(
                "Hurwitz divisor has a component of multiplicity > 1: %s"
                % format_poly(poly)
            )
    _validate_reduced_support([(p, 1) for p, _ in flat])
    coefficients = [Fraction(sum(mults), 2) for _, mults in flat]

    shared = [poly for poly, mults in flat if sum(1 for m in mults if m) >= 2]
    doubled = [poly for poly, mults in flat if max(mults) >= 2]
    non_normal = [poly for poly, mults in flat if sum(mults) == 2]

    # triple intersections decide the Gorenstein property; locate them
    triple_points = []
    triple_complete = True
    if not shared:
        for c0, m0 in data.divisors[0]:
            for c1, m1 in data.divisors[1]:
                for c2, m2 in data.divisors[2]:
                    loc = _triple_locus(c0, c1, c2, ring)
                    triple_complete = triple_complete and loc.complete
                    triple_points.extend(loc.points)
    gorenstein = not shared and not triple_points and triple_complete

    comps_for_analysis = [(p, None) for p, _ in flat]
    points, certified, warnings = _analyze_support(
        comps_for_analysis,
        coefficients,
        ring,
        tuple(extra_points) + tuple(triple_points),
    )
    slc = all(bp.lc for bp in points)
    if not triple_complete:
        warnings.append("triple-intersection location incomplete")

    singular = []
    for bp in points:
        if bp.report.verdict == "smooth":
            continue
        relabeled = _bidouble_point_verdict(bp, flat, ring)
        if relabeled.report.verdict not in (NEGLIGIBLE, "non_normal_locus"):
            singular.append(relabeled)

    report = BiDoubleReport(
        degrees=degrees,
        a=a,
        chi=chi,
        two_k_degree=two_k,
        k_squared=Fraction(two_k) ** 2,
        slc=slc,
        gorenstein=gorenstein,
        normal=not non_normal,
        cartier_index=1 if gorenstein else 2,
        singularities=singular,
        non_normal_components=non_normal,
        rest_negligible_certified=certified,
        warnings=warnings,
    )
    if not report.normal and report.gorenstein:
        normalized_data = bidouble_normalise(data)
        sub = bidouble_report(normalized_data)
        if sub.elliptic_degrees() == [1]:
            report.normalisation = "E-"
        elif sorted(normalized_data.degrees()) == [1, 1, 1]:
            report.normalisation = "P"
        else:
            report.normalisation = "dP"
        report.resolution = NON_NORMAL_TABLE[report.normalisation]
    return report


def bidouble_normalise(data):
    """Branch data of the normalisation of a standard bi-double cover.

    Reduces multiplicities inside each divisor modulo 2, drops components
    common to all three divisors, and moves a component shared by exactly
    two divisors into the third.  Idempotent; preserves degrees modulo 2.
    """
    table = {}
    order = []
    for i, div in enumerate(data.divisors):
        for poly, mult in div:
            key = _canonical(poly)
            fp = format_poly(key)
            if fp not in table:
                table[fp] = [key, [0, 0, 0]]
                order.append(fp)
            table[fp][1][i] += mult
    changed = True
    while changed:
        changed = False
        for fp in order:
            poly, mults = table[fp]
            for i in range(3):
                if mults[i] >= 2:
                    mults[i] -= 2 * (mults[i] // 2)
                    changed = True
            if all(m >= 1 for m in mults):
                for i in range(3):
                    mults[i] -= 1
                changed = True
            present = [i for i in range(3) if mults[i] >= 1]
            if len(present) == 2:
                third = 3 - sum(present)
                for i in present:
                    mults[i] -= 1
                mults[third] += 1
                changed = True
    divisors = [[], [], []]
    for fp in order:
        poly, mults = table[fp]
        for i in range(3):
            if mults[i]:
                divisors[i].append((poly, mults[i]))
    return BiDoubleData(divisors)


# ---------------------------------------------------------------------------
# the Z/4 cover of the plane
# ---------------------------------------------------------------------------


@dataclass
class Z4Report:
    degrees: tuple
    pushforward_degrees: tuple
    two_k_degree: int
    cartier_index: int
    lc: bool
    quarter_points: int
    a1_points: int
    higher_tangency: list
    warnings: list


def z4_cover_invariants(d1, d2, d3):
    """Numerical report for the Z/4-cover with 4L = D1 + 2 D2 + 3 D3.

    D1, D2 are lines and D3 a reduced cubic; the Hurwitz divisor is
    (3/4)(D1 + D3) + (1/2) D2.  Quarter points sit over the transverse
    points of D1 and D3, A1 points over the transverse points of D2 with
    D1 + D3; tangencies lower those counts and are reported separately.
    """
    ring = d1.ring
    degs = (d1.weighted_degree(), d2.weighted_degree(), d3.weighted_degree())
    if degs != (1, 1, 3):
        raise InvalidBranchDataError("expected two lines and a cubic, got degrees %s" % (degs,))
    if degs[0] + 2 * degs[1] + 3 * degs[2] != 12:
        raise InvalidBranchDataError("degree relation 4*3 = d1 + 2 d2 + 3 d3 violated")
    _validate_reduced_support([(d1, 1), (d2, 1), (d3, 1)])
    comps = [(d1, None), (d2, None), (d3, None)]
    coefficients = [Fraction(3, 4), Fraction(1, 2), Fraction(3, 4)]
    points, certified, warnings = _analyze_support(comps, coefficients, ring)
    lc = all(bp.lc for bp in points)

    bring, images = parametrize_line(d1)
    profile_13 = _binary_profile(d3.substitute(images))
    quarter = sum(count for mult, count in profile_13 if mult == 1)
    bring2, images2 = parametrize_line(d2)
    profile_2 = _binary_profile((d1 * d3).substitute(images2))
    a1 = sum(count for mult, count in profile_2 if mult == 1)
    higher = [(mult, count) for mult, count in profile_13 + profile_2 if mult > 1]
    if not certified:
        warnings.append("branch intersection location incomplete")
    return Z4Report(
        degrees=degs,
        pushforward_degrees=(0, 2, 2, 3),
        two_k_degree=1,
        cartier_index=2,
        lc=lc,
        quarter_points=quarter,
        a1_points=a1,
        higher_tangency=higher,
        warnings=warnings,
    )


def _binary_profile(form):
    """Root multiplicity profile of a binary form, infinity included.

    Returns (multiplicity, count) pairs covering every projective root, so
    the counts sum to deg(form) when weighted by multiplicity.
    """
    total = form.weighted_degree()
    g = [Fraction(0)] * (total + 1)
    for e, c in form.terms.items():
        g[e[1]] += c
    while g and g[-1] == 0:
        g.pop()
    k_inf = total - (len(g) - 1)
    profile = dict(squarefree_profile(g)) if len(g) > 1 else {}
    if k_inf >= 1:
        profile[k_inf] = profile.get(k_inf, 0) + 1
    return sorted(profile.items())
