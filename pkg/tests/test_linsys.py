import random
from fractions import Fraction

import pytest

from conecover.linsys import (
    ConditionSpec,
    LinearSystem,
    PointWPS,
    TangentDir,
    VertexPointError,
    condition_rank,
    germ_ring,
    linear_system_dim,
    monomial_basis,
    p112_ring,
)
from conecover.textio import parse_poly
from conecover.wpoly import WPoly, WeightedRing

R = p112_ring()
P = PointWPS(1, 0, 0)
Q = PointWPS(0, 1, 0)
DIR_H = TangentDir(0, 1)  # the direction of {y = 0}


def test_monomial_counts():
    assert len(monomial_basis(R, 10)) == 36
    S1 = WeightedRing(("x0", "x1", "y", "z"), (1, 1, 2, 5))
    # enumeration oracle: split by the z-exponent, 36 + 12 + 1
    by_z = {0: 0, 1: 0, 2: 0}
    for e in monomial_basis(S1, 10):
        by_z[e[3]] += 1
    assert by_z == {0: 36, 1: 12, 2: 1}
    assert len(monomial_basis(S1, 10)) == 49
    assert monomial_basis(R, 0) == [(0, 0, 0)]
    assert monomial_basis(R, -1) == []


def test_closed_form_count():
    for d in range(21):
        expected = sum(d - 2 * c + 1 for c in range(d // 2 + 1))
        assert len(monomial_basis(R, d)) == expected


def test_point_normalization():
    assert PointWPS(2, 4, 8).coords == (1, 2, 2)
    assert PointWPS(0, 3, 9).coords == (0, 1, 1)
    assert PointWPS(0, 0, 5).is_vertex()
    with pytest.raises(ValueError):
        PointWPS(0, 0, 0)


def test_tangent_dir():
    t = TangentDir(2, 4)
    assert (t.dy, t.dx) == (1, 2)
    assert TangentDir(0, 5) == DIR_H
    assert TangentDir(1, 0).is_ruling()
    with pytest.raises(ValueError):
        TangentDir(0, 0)


def test_condition_ranks_from_the_tables():
    assert condition_rank(ConditionSpec(P, "quadruple"), 10) == 10
    assert condition_rank(ConditionSpec(P, "threethree", tangent=DIR_H), 10) == 12
    assert condition_rank(ConditionSpec(PointWPS(1, 2, 3), "mult", m=1), 10) == 1
    two = LinearSystem(
        R,
        10,
        [
            ConditionSpec(P, "threethree", tangent=DIR_H),
            ConditionSpec(Q, "threethree", tangent=DIR_H),
        ],
    )
    assert two.conditions_rank() == 23  # matching tangents: one short of 24
    assert two.projective_dim() == 12
    other = LinearSystem(
        R,
        10,
        [
            ConditionSpec(P, "threethree", tangent=DIR_H),
            ConditionSpec(Q, "threethree", tangent=TangentDir(1, 1)),
        ],
    )
    assert other.conditions_rank() == 24


def test_single_threethree_projective_dim():
    proj, h0 = linear_system_dim([ConditionSpec(P, "threethree", tangent=DIR_H)], 10)
    assert (proj, h0) == (23, 24)
    proj, h0 = linear_system_dim([], 10)
    assert (proj, h0) == (35, 36)


def test_ruling_tangent_rejected():
    with pytest.raises(ValueError):
        ConditionSpec(P, "threethree", tangent=TangentDir(1, 0))


def test_vertex_rejected():
    with pytest.raises(VertexPointError):
        condition_rank(ConditionSpec(PointWPS(0, 0, 1), "mult", m=2), 10)


def test_taylor_order_oracle():
    # members of the multiplicity-m system vanish to order >= m: check by
    # brute-force expansion in the chart
    rng = random.Random(23)
    germ = germ_ring()
    for trial in range(6):
        pt = PointWPS(1, rng.randint(-2, 2), rng.randint(-2, 2))
        m = rng.choice([2, 3, 4])
        d = rng.choice([6, 8, 10])
        system = LinearSystem(R, d, [ConditionSpec(pt, "mult", m=m)])
        member = system.general_member(trial)
        u0, v0 = pt.local_coords()
        u, v = germ.gens()
        local = member.substitute({"x0": germ.one(), "x1": u + u0, "y": v + v0})
        assert local.order() >= m
    # and the conditions cut exactly the order->= m locus: a generic degree-d
    # form has order 0
    assert condition_rank(ConditionSpec(P, "mult", m=3), 10) == 6


def test_monotonicity_of_h0():
    base = LinearSystem(R, 10, [ConditionSpec(P, "quadruple")])
    h0 = base.h0()
    more = LinearSystem(
        R, 10, [ConditionSpec(P, "quadruple"), ConditionSpec(Q, "mult", m=2)]
    )
    assert more.h0() <= h0


def test_matching_tangent_forces_section():
    system = LinearSystem(
        R,
        10,
        [
            ConditionSpec(P, "threethree", tangent=DIR_H),
            ConditionSpec(Q, "threethree", tangent=DIR_H),
        ],
    )
    y = parse_poly("y", R)
    for seed in range(5):
        member = system.general_member(seed)
        assert y.divides(member)


def test_general_member_deterministic():
    system = LinearSystem(R, 10, [ConditionSpec(P, "quadruple")])
    assert system.general_member(9) == system.general_member(9)
    assert system.general_member(9) != system.general_member(10)


def test_empty_system_raises():
    specs = [ConditionSpec(PointWPS(1, i, 0), "quadruple") for i in range(4)]
    system = LinearSystem(R, 10, specs)
    if system.h0() == 0:
        with pytest.raises(ValueError):
            system.general_member(0)


def test_rank_independent_of_spec_order():
    specs = [
        ConditionSpec(P, "threethree", tangent=DIR_H),
        ConditionSpec(Q, "quadruple"),
    ]
    a = LinearSystem(R, 10, specs).conditions_rank()
    b = LinearSystem(R, 10, specs[::-1]).conditions_rank()
    assert a == b == 22
