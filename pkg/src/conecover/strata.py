"""Moduli strata dimensions from linear systems and automorphism stabilizers.

Every automorphism of P(1,1,2) has the shape

    (x0, x1, y) -> (a x0 + b x1, c x0 + d x1, e y + q(x0, x1)),

an 8-parameter family whose action has a 1-dimensional kernel (the weighted
scaling), so the automorphism group has dimension 7.  Stabilizer dimensions
of configurations (points, tangent directions, hyperplane sections) are
computed infinitesimally: linear conditions on the 8-dimensional Lie algebra
of vector fields

    (A x0 + B x1) d/dx0 + (C x0 + D x1) d/dx1 + (E y + q(x0,x1)) d/dy.

A stratum dimension is (projective dimension of the conditioned linear
system) minus (stabilizer dimension of the pinned configuration).
"""

import random
from dataclasses import dataclass
from fractions import Fraction

from .linsys import (
    ConditionSpec,
    LinearSystem,
    PointWPS,
    TangentDir,
    monomial_basis,
    p112_ring,
    rank,
    vanishing_conditions,
)
from .wpoly import WPoly


# the eight basis vector fields as coefficient triples (f0, f1, f2):
# field = f0 d/dx0 + f1 d/dx1 + f2 d/dy, with q-part split into monomials
def _basis_fields(ring):
    x0, x1, y = ring.gens()
    z = ring.zero()
    return [
        (x0, z, z),
        (x1, z, z),
        (z, x0, z),
        (z, x1, z),
        (z, z, y),
        (z, z, x0 * x0),
        (z, z, x0 * x1),
        (z, z, x1 * x1),
    ]


@dataclass
class FixPoint:
    point: PointWPS


@dataclass
class FixTangent:
    point: PointWPS
    direction: TangentDir


@dataclass
class FixSection:
    poly: WPoly  # weighted degree 2


def _eval_field(field, point):
    coords = dict(zip(("x0", "x1", "y"), point.coords))
    return tuple(f.evaluate(coords) for f in field)


def _chart_field(field, point, ring):
    """The induced plane vector field (du/dt, dv/dt) in the point's chart."""
    from .locate import restrict_to_chart

    f0, f1, f2 = field
    if point.chart == "x0":
        chart_index = 0
        g_u = restrict_to_chart(f1, chart_index) - restrict_to_chart(
            f0, chart_index
        ) * _chart_u(ring, chart_index)
        g_v = restrict_to_chart(f2, chart_index) - 2 * restrict_to_chart(
            f0, chart_index
        ) * _chart_v(ring, chart_index)
    else:
        chart_index = 1
        g_u = restrict_to_chart(f0, chart_index) - restrict_to_chart(
            f1, chart_index
        ) * _chart_u(ring, chart_index)
        g_v = restrict_to_chart(f2, chart_index) - 2 * restrict_to_chart(
            f1, chart_index
        ) * _chart_v(ring, chart_index)
    return g_u, g_v


def _chart_u(ring, chart_index):
    from .locate import local_ring

    lring = local_ring(ring, chart_index)
    return lring.variable(lring.variables[0])


def _chart_v(ring, chart_index):
    from .locate import local_ring

    lring = local_ring(ring, chart_index)
    return lring.variable(lring.variables[1])


def stabilizer_dim(config):
    """Dimension of the automorphism subgroup fixing every config item.

    Items are FixPoint, FixTangent (whose base point must also be fixed) and
    FixSection (a hyperplane section preserved as a set).  The vertex is not
    supported (it has no smooth chart for the tangent calculus).
    """
    ring = p112_ring()
    fields = _basis_fields(ring)
    n_aux = 0
    aux_index = {}
    for item in config:
        if isinstance(item, FixPoint):
            if item.point.is_vertex():
                raise ValueError("stabilizer at the vertex is not supported")
            aux_index[("mu", item.point.coords)] = 8 + n_aux
            n_aux += 1
        elif isinstance(item, FixSection):
            aux_index[("lam", id(item))] = 8 + n_aux
            n_aux += 1
    fixed_points = {item.point.coords for item in config if isinstance(item, FixPoint)}
    for item in config:
        if isinstance(item, FixTangent) and item.point.coords not in fixed_points:
            raise ValueError("FixTangent requires its base point in the config")

    ncols = 8 + n_aux
    rows = []
    deg2 = monomial_basis(ring, 2)
    for item in config:
        if isinstance(item, FixPoint):
            p = item.point.coords
            mu = aux_index[("mu", item.point.coords)]
            euler = (p[0], p[1], 2 * p[2])
            for comp in range(3):
                row = [Fraction(0)] * ncols
                for k, field in enumerate(fields):
                    row[k] = _eval_field(field, item.point)[comp]
                row[mu] = -euler[comp]
                rows.append(row)
        elif isinstance(item, FixSection):
            h = item.poly
            if h.weighted_degree() != 2:
                raise ValueError("FixSection needs a weighted degree 2 form")
            lam = aux_index[("lam", id(item))]
            x0, x1, y = ring.variables
            for e in deg2:
                row = [Fraction(0)] * ncols
                for k, (f0, f1, f2) in enumerate(fields):
                    dh = f0 * h.partial(x0) + f1 * h.partial(x1) + f2 * h.partial(y)
                    row[k] = dh.coefficient(e)
                row[lam] = -h.coefficient(e)
                rows.append(row)
        elif isinstance(item, FixTangent):
            u0, v0 = item.point.local_coords()
            t = (item.direction.dx, item.direction.dy)
            row = [Fraction(0)] * ncols
            for k, field in enumerate(fields):
                g_u, g_v = _chart_field(field, item.point, ring)
                lring = g_u.ring
                un, vn = lring.variables
                at = {un: u0, vn: v0}
                j = [
                    [g_u.partial(un).evaluate(at), g_u.partial(vn).evaluate(at)],
                    [g_v.partial(un).evaluate(at), g_v.partial(vn).evaluate(at)],
                ]
                jt = (j[0][0] * t[0] + j[0][1] * t[1], j[1][0] * t[0] + j[1][1] * t[1])
                row[k] = jt[0] * t[1] - jt[1] * t[0]
            rows.append(row)
        else:
            raise TypeError("unknown config item %r" % (item,))
    nullity = ncols - rank(rows)
    return nullity - 1


@dataclass
class StratumRow:
    name: str
    degree: int
    specs: list
    stabilizer: list
    expected_dim: int
    expected_conditions: object = None  # expected rank of the condition rows


def _standard_points():
    return PointWPS(1, 0, 0), PointWPS(0, 1, 0), PointWPS(1, 1, 0)


def normal_strata_rows():
    """Table rows for the strata of normal surfaces (dimension data)."""
    P, Q, R = _standard_points()
    dir_h = TangentDir(0, 1)  # the section {y = 0}
    dir_generic = TangentDir(1, 1)
    dir_match = TangentDir(-1, 1)  # the section {x0*x1 + y = 0} at P and Q
    ring = p112_ring()
    from .textio import parse_poly

    h0_section = parse_poly("y", ring)
    t33 = lambda pt, d: ConditionSpec(pt, "threethree", tangent=d)
    quad = lambda pt: ConditionSpec(pt, "quadruple")
    return [
        StratumRow("M13", 10, [], [], 28, 0),
        StratumRow("N2", 10, [quad(P)], [FixPoint(P)], 20, 10),
        StratumRow("N1", 10, [t33(P, dir_h)], [FixPoint(P), FixTangent(P, dir_h)], 19, 12),
        StratumRow("N22", 10, [quad(P), quad(Q)], [FixPoint(P), FixPoint(Q)], 12, 20),
        StratumRow(
            "N12",
            10,
            [t33(P, dir_h), quad(Q)],
            [FixPoint(P), FixTangent(P, dir_h), FixPoint(Q)],
            11,
            22,
        ),
        StratumRow(
            "N11R",
            10,
            [t33(P, dir_h), t33(Q, dir_generic)],
            [FixPoint(P), FixTangent(P, dir_h), FixPoint(Q), FixTangent(Q, dir_generic)],
            10,
            24,
        ),
        StratumRow(
            "N11E",
            10,
            [t33(P, dir_h), t33(Q, dir_h)],
            [FixPoint(P), FixPoint(Q), FixSection(h0_section)],
            10,
            23,
        ),
        StratumRow(
            "N112",
            10,
            [t33(P, dir_match), t33(Q, dir_match), quad(R)],
            [FixPoint(P), FixPoint(Q), FixPoint(R), FixTangent(P, dir_match)],
            2,
            33,
        ),
        StratumRow(
            "N111",
            10,
            [t33(P, dir_match), t33(Q, dir_match), t33(R, TangentDir(1, 1))],
            [FixPoint(P), FixPoint(Q), FixPoint(R), FixTangent(P, dir_match)],
            1,
            34,
        ),
    ]


def non_normal_strata_rows():
    """Table rows for the strata of non-normal surfaces."""
    ring = p112_ring()
    from .textio import parse_poly

    h0_section = parse_poly("y", ring)
    P_off = PointWPS(1, 0, 1)  # a point off the fixed section {y = 0}
    dir_e = TangentDir(1, 1)
    return [
        StratumRow("dP", 6, [], [FixSection(h0_section)], 11, 0),
        StratumRow("P", 4, [], [FixSection(h0_section)], 4, 0),
        StratumRow(
            "E",
            6,
            [ConditionSpec(P_off, "threethree", tangent=dir_e)],
            [FixSection(h0_section), FixPoint(P_off), FixTangent(P_off, dir_e)],
            2,
            12,
        ),
    ]


@dataclass
class TableRecord:
    name: str
    expected: int
    computed: int
    h0: int
    conditions_rank: int
    stabilizer: int
    ok: bool


def stratum_dim(row):
    """(record,) computation for one stratum row."""
    system = LinearSystem(p112_ring(), row.degree, row.specs)
    cond_rank = system.conditions_rank()
    proj = system.projective_dim()
    stab = stabilizer_dim(row.stabilizer)
    computed = proj - stab
    ok = computed == row.expected_dim
    if row.expected_conditions is not None:
        ok = ok and cond_rank == row.expected_conditions
    return TableRecord(
        name=row.name,
        expected=row.expected_dim,
        computed=computed,
        h0=system.h0(),
        conditions_rank=cond_rank,
        stabilizer=stab,
        ok=ok,
    )


def verify_tables():
    """Recompute both strata dimension tables; one record per row."""
    records = [stratum_dim(row) for row in normal_strata_rows()]
    records.extend(stratum_dim(row) for row in non_normal_strata_rows())
    return records


# ---------------------------------------------------------------------------
# the automorphism action on branch divisors (used by invariance tests)
# ---------------------------------------------------------------------------


def automorphism_substitution(a, b, c, d, e, q00, q01, q11):
    """Substitution dict realizing an automorphism of P(1,1,2)."""
    a, b, c, d, e = (Fraction(t) for t in (a, b, c, d, e))
    if a * d - b * c == 0:
        raise ValueError("linear part is singular")
    if e == 0:
        raise ValueError("y-scaling must be nonzero")
    ring = p112_ring()
    x0, x1, y = ring.gens()
    return {
        "x0": a * x0 + b * x1,
        "x1": c * x0 + d * x1,
        "y": e * y + q00 * x0 * x0 + q01 * x0 * x1 + q11 * x1 * x1,
    }


def random_automorphism(rng):
    while True:
        a, b, c, d = (rng.randint(-3, 3) for _ in range(4))
        if a * d - b * c != 0:
            break
    e = rng.choice([1, 2, 3, -1, -2])
    q = [rng.randint(-2, 2) for _ in range(3)]
    return automorphism_substitution(a, b, c, d, e, *q)


def transform_branch(branch, substitution):
    from .covers import BranchDivisorQ

    return BranchDivisorQ(
        [(p.substitute(substitution), m) for p, m in branch.components]
    )
