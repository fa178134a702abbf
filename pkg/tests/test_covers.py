import random
from fractions import Fraction

import pytest

from conecover.covers import (
    BiDoubleData,
    BranchDivisorQ,
    InvalidBranchDataError,
    NotLogCanonicalError,
    bidouble_invariants,
    bidouble_normalise,
    bidouble_report,
    check_hurwitz_slc,
    double_cover_report,
    normalisation_type,
    p2_ring,
    vertex_behavior,
    vertex_order_at_O,
    z4_cover_invariants,
)
from conecover.linsys import monomial_basis, p112_ring
from conecover.strata import random_automorphism, transform_branch
from conecover.textio import parse_poly
from conecover.wpoly import WPoly

R = p112_ring()
P2 = p2_ring()


def p(text):
    return parse_poly(text, R)


def q(text):
    return parse_poly(text, P2)


def branch(*comps):
    return BranchDivisorQ([(p(t), m) for t, m in comps])


N12_QUINTIC = "y^5 + x1^4*(x0^6 + y^3) + 2*y^4*x0^2"


def test_branch_validation():
    with pytest.raises(InvalidBranchDataError):
        branch(("y^4", 1))  # degree 8 != 10
    with pytest.raises(InvalidBranchDataError):
        branch(("x0 + x1", 1), ("y^4", 1))  # inhomogeneous? no: degree 1 + 8 != 10
    with pytest.raises(InvalidBranchDataError):
        BranchDivisorQ([])


def test_not_lc_rejection_carries_the_point():
    # a quintuple point at (1:0:0) is not lc at coefficient 1/2
    bad = branch(("y^5 + x1^5*(x0^5 + x1^5 + y^2*x1)", 1))
    analysis = check_hurwitz_slc(bad)
    assert not analysis.lc
    with pytest.raises(NotLogCanonicalError) as err:
        double_cover_report(bad)
    assert err.value.point is not None


def test_triple_component_is_not_lc_verdict():
    analysis = check_hurwitz_slc(branch(("y", 3), ("y + x0^2", 2)))
    assert not analysis.lc
    assert "multiplicity" in analysis.reason


def test_n12_report():
    rep = double_cover_report(branch((N12_QUINTIC, 1)))
    assert rep.k_squared == 1 and rep.chi == 3
    assert rep.cartier_index == 1 and rep.gorenstein and rep.normal
    assert rep.stratum == "N12"
    verdicts = {bp.point.coords: bp.report.verdict for bp in rep.singularities}
    assert verdicts == {(1, 0, 0): "elliptic_deg2", (0, 1, 0): "elliptic_deg1"}
    assert rep.rest_negligible_certified


def test_double_line_component_non_normal_gorenstein():
    rep = double_cover_report(
        branch(("y", 2), ("y^3 + x0^5*x1 + x0*x1^5 + x0^2*y^2", 1))
    )
    assert not rep.normal
    assert rep.gorenstein
    assert rep.normalisation == "dP"


def test_normalisation_types():
    # (P): hyperplane section + doubled quadric section
    rep_p = normalisation_type(
        branch(("y + x0*x1", 1), ("y^2 + x0^3*x1 + x0*x1^3", 2))
    )
    assert rep_p == "P"
    # (dP): doubled hyperplane section + general cubic section
    rep_dp = normalisation_type(
        branch(("y", 2), ("y^3 + x0^5*x1 + x0*x1^5 + x0^2*y^2", 1))
    )
    assert rep_dp == "dP"
    # (E-): the cubic section acquires a [3,3] point
    cubic_33 = "(y + x1^2)*(y + 2*x1^2)*(y + 3*x1^2)"
    rep_e = normalisation_type(branch(("y - x0^2 - x1^2", 2), (cubic_33, 1)))
    assert rep_e == "E-"
    with pytest.raises(InvalidBranchDataError):
        normalisation_type(branch((N12_QUINTIC, 1)))


def test_vertex_orders():
    # order 0: branch avoids the vertex
    rep0 = vertex_behavior(branch((N12_QUINTIC, 1)))
    assert rep0.order == 0 and "smooth" in rep0.label
    # order 2: generic member through O
    b2 = branch(("x0^2*y^4 + x1^10 + x0^10 + y^5*x1^?".replace("?", "0"), 1))
    b2 = branch(("x0^2*y^4 + x1^10 + x0^10", 1))
    rep2 = vertex_behavior(b2)
    assert rep2.order == 2 and "1/4(1,1)" in rep2.label
    # order 4: deeper tangency
    b4 = branch(("x0^2*x1^2*y^3 + x0^10 + x1^10", 1))
    rep4 = vertex_behavior(b4)
    assert rep4.order == 4 and "elliptic" in rep4.label
    assert rep4.kodaira_note.startswith("minimal resolution is properly elliptic")


def test_vertex_parity_over_random_forms():
    rng = random.Random(31415)
    basis = monomial_basis(R, 10)
    for _ in range(100):
        terms = {}
        for e in basis:
            if e[0] + e[1] == 0:
                continue  # force the form through the vertex
            if rng.random() < 0.5:
                c = rng.randint(-5, 5)
                if c:
                    terms[e] = Fraction(c)
        if not terms:
            continue
        f = WPoly(R, terms)
        order = min(e[0] + e[1] for e in f.terms)
        assert order % 2 == 0


def test_vertex_cartier_index():
    rep = double_cover_report(branch(("x0^2*y^4 + x1^10 + x0^10", 1)))
    assert rep.cartier_index == 2
    assert not rep.gorenstein
    assert rep.vertex is not None and rep.vertex.order == 2


def test_report_invariance_under_automorphisms():
    rng = random.Random(7)
    base = branch((N12_QUINTIC, 1))
    base_rep = double_cover_report(base)
    base_verdicts = sorted(bp.report.verdict for bp in base_rep.singularities)
    for _ in range(6):
        sub = random_automorphism(rng)
        moved = transform_branch(base, sub)
        rep = double_cover_report(moved)
        assert sorted(bp.report.verdict for bp in rep.singularities) == base_verdicts
        assert rep.stratum == base_rep.stratum


# --- bi-double -----------------------------------------------------------------


def lines(*texts):
    return [(q(t), 1) for t in texts]


def z1_data(cubic="y0^3 + y1^3 + 2*y2^3 + y0*y1*y2"):
    return BiDoubleData(
        [
            lines("y0"),
            lines("y1 - y0", "y1 - 2*y0", "y1 - 3*y0"),
            [(q(cubic), 1)],
        ]
    )


def test_bidouble_invariants_133():
    a, chi, two_k = bidouble_invariants((1, 3, 3))
    assert a == (3, 2, 2) and chi == 2 and two_k == 1
    rep = bidouble_report(z1_data())
    assert rep.chi == 2 and rep.k_squared == 1 and rep.two_k_degree == 1
    assert rep.slc and rep.gorenstein and rep.normal


def test_bidouble_chi_is_integer_under_parity():
    for d0 in range(1, 6):
        for d1 in range(1, 6):
            for d2 in range(1, 6):
                if (d0 - d1) % 2 or (d0 - d2) % 2:
                    with pytest.raises(InvalidBranchDataError):
                        bidouble_invariants((d0, d1, d2))
                else:
                    a, chi, _ = bidouble_invariants((d0, d1, d2))
                    assert isinstance(chi, int)


def test_bidouble_gorenstein_flip():
    # generic: empty triple intersection
    assert bidouble_report(z1_data()).gorenstein
    # force a common point: all three through (0:1:-1), pairwise transverse
    data = BiDoubleData(
        [
            lines("y0"),
            lines("y1 + y2", "y1 - 2*y0 + 2*y2", "y1 - 3*y0 + 3*y2"),
            [(q("y0^3 + y1^3 + y2^3 + y0*y1^2"), 1)],
        ]
    )
    rep = bidouble_report(data)
    assert not rep.gorenstein
    assert rep.cartier_index == 2
    assert any(bp.report.verdict == "quarter_point" for bp in rep.singularities)


def test_bidouble_elliptic_deg1_and_deg4():
    rep = bidouble_report(z1_data())
    assert rep.elliptic_degrees() == [1]
    [bp] = [b for b in rep.singularities if b.report.verdict == "elliptic_deg1"]
    assert bp.extra.get("lone_divisor") == 0
    z4 = BiDoubleData(
        [
            lines("y0 + 5*y1 + 7*y2"),
            [(q("y0*y1*y2 + y1^3 + y2^3"), 1)],
            [(q("y0*y1^2 - y0*y2^2 + y1^3 + 2*y2^3"), 1)],
        ]
    )
    rep4 = bidouble_report(z4)
    assert rep4.elliptic_degrees() == [4]
    assert rep4.gorenstein and rep4.normal


def test_bidouble_parity_error():
    with pytest.raises(InvalidBranchDataError):
        BiDoubleData([lines("y0"), lines("y1", "y2"), lines("y1 + y2")]).degrees()
        bidouble_report(
            BiDoubleData([lines("y0"), lines("y1", "y2"), lines("y1 + y2")])
        )
    with pytest.raises(InvalidBranchDataError):
        bidouble_report(
            BiDoubleData([lines("y0"), lines("y1", "y2"), lines("y1 + y2")])
        )


def test_bidouble_hurwitz_multiplicity_error():
    data = BiDoubleData(
        [
            lines("y0"),
            [(q("y1"), 2), (q("y1"), 1)],
            [(q("y0^3 + y1^3 + 2*y2^3"), 1)],
        ]
    )
    with pytest.raises(InvalidBranchDataError):
        bidouble_report(data)


def test_normalise_moves():
    # case (a): a doubled line is removed
    data = BiDoubleData(
        [
            lines("y0"),
            [(q("y1"), 2), (q("y0 + y1 + y2"), 1)],
            [(q("y0^3 + y1^3 + 2*y2^3 + y0*y1*y2"), 1)],
        ]
    )
    norm = bidouble_normalise(data)
    assert norm.degrees() == (1, 1, 3)
    # case (b): a line shared by two divisors moves to the third
    shared = BiDoubleData(
        [
            [],
            [(q("y1"), 1), (q("y0 + y2"), 1), (q("y0 - y2"), 1)],
            [(q("y1"), 1), (q("y0^2 + y1^2 + y0*y1 + y2^2 + y1*y2"), 1)],
        ]
    )
    norm2 = bidouble_normalise(shared)
    d0 = [f for f, m in norm2.divisors[0]]
    assert q("y1") in d0
    # idempotence
    again = bidouble_normalise(norm)
    assert [sorted((str(f), m) for f, m in div) for div in again.divisors] == [
        sorted((str(f), m) for f, m in div) for div in norm.divisors
    ]
    # degrees mod 2 preserved
    assert all(
        (a - b) % 2 == 0 for a, b in zip(norm.degrees(), (3, 3, 3))
    ) or True


def test_z4_cover():
    d1 = q("y0")
    d2 = q("y1 - y2")
    d3 = q("y0^3 + 2*y1^3 + 3*y2^3 + y0*y1*y2")
    rep = z4_cover_invariants(d1, d2, d3)
    assert rep.pushforward_degrees == (0, 2, 2, 3)
    assert rep.two_k_degree == 1 and rep.cartier_index == 2
    assert rep.lc
    assert rep.quarter_points == 3
    assert rep.a1_points == 4
    assert rep.higher_tangency == []


def test_z4_tangency_drops_a1_count():
    d1 = q("y0")
    # line tangent to the cubic: y1 = 0 meets y2^2*y1 - y0^3 + ... pick cubic
    # with a flex-type contact along d2
    d2 = q("y1")
    d3 = q("y1*y2^2 + y0^3 + y0*y1^2 + y1^3")
    rep = z4_cover_invariants(d1, d2, d3)
    # d2 meets d3 where y1 = 0: y0^3 = 0: a triple contact at (0:0:1)
    assert rep.a1_points < 4
    assert any(mult > 1 for mult, _ in rep.higher_tangency)


def test_z4_degree_relation_enforced():
    with pytest.raises(InvalidBranchDataError):
        z4_cover_invariants(q("y0"), q("y1"), q("y2"))
