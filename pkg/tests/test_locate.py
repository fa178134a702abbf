from fractions import Fraction

import pytest

from conecover.linsys import p112_ring
from conecover.locate import (
    PositiveDimensionalError,
    ProjPoint,
    affine_common_zeros,
    binary_form_points,
    common_zeros,
    localize,
    parametrize_hyperplane_section,
    parametrize_line,
    pairwise_intersections,
    restrict_to_chart,
    singular_points_of,
)
from conecover.roots import rational_roots, squarefree_profile
from conecover.textio import parse_poly
from conecover.wpoly import WeightedRing

R = p112_ring()
P2 = WeightedRing(("y0", "y1", "y2"), (1, 1, 1))


def p(text, ring=R):
    return parse_poly(text, ring)


def test_proj_point_normalization():
    pt = ProjPoint(R, (2, 4, 8))
    assert pt.coords == (1, 2, 2)
    assert ProjPoint(R, (0, 0, 3)).is_vertex()
    pt2 = ProjPoint(P2, (0, 5, 10))
    assert pt2.coords == (0, 1, 2)


def test_rational_roots():
    # (t - 2)^2 (3t + 1)
    coeffs = [Fraction(c) for c in (4, -8, -11, 3)]
    # 3t^3 - 11t^2 ... compute from factors instead
    import math

    def poly_from_roots(roots_mults, lead=1):
        cs = [Fraction(lead)]
        for r, m in roots_mults:
            for _ in range(m):
                cs = [Fraction(0)] + cs
                for i in range(len(cs) - 1):
                    cs[i] -= r * cs[i + 1]
        return cs

    cs = poly_from_roots([(Fraction(2), 2), (Fraction(-1, 3), 1)], 3)
    found = rational_roots(cs)
    assert (Fraction(2), 2) in found and (Fraction(-1, 3), 1) in found
    assert rational_roots([Fraction(0), Fraction(0), Fraction(1)]) == [(Fraction(0), 2)]


def test_squarefree_profile():
    # (t-1)^2 (t^2+1): one double root, two simple
    cs = [Fraction(c) for c in (1, -2, 2, -2, 1)]
    profile = dict(squarefree_profile(cs))
    assert profile == {1: 2, 2: 1}
    assert squarefree_profile([Fraction(1), Fraction(1)]) == [(1, 1)]


def test_affine_common_zeros_basic():
    G = WeightedRing(("u", "v"), (1, 1))
    f = parse_poly("u^2 + v^2 - 2", G)
    h = parse_poly("u - v", G)
    loc = affine_common_zeros([f, h], G)
    assert sorted(loc.points) == [(-1, -1), (1, 1)]
    assert loc.complete
    # irrational intersection detected as incomplete
    loc2 = affine_common_zeros([parse_poly("u^2 - 2", G), parse_poly("v", G)], G)
    assert loc2.points == [] and not loc2.complete
    with pytest.raises(PositiveDimensionalError):
        affine_common_zeros([f * h, h], G)


def test_singular_points_of_paper_quintic():
    quintic = p("y^5 + x1^4*(x0^6 + y^3) + 2*y^4*x0^2")
    loc = singular_points_of(quintic, R)
    assert loc.complete
    assert sorted(pt.coords for pt in loc.points) == [(0, 1, 0), (1, 0, 0)]


def test_localize():
    quintic = p("y^5 + x1^4*(x0^6 + y^3) + 2*y^4*x0^2")
    pt = ProjPoint(R, (1, 0, 0))
    germ = localize(quintic, pt)
    assert germ.order() == 4
    # translated chart: a point with nonzero local coordinates
    pt2 = ProjPoint(R, (1, 1, 1))
    f = p("y - x1^2")
    germ2 = localize(f, pt2)
    assert germ2.coefficient((0, 0)) == 0  # 1 - 1 = 0: on the curve


def test_pairwise_intersections_on_the_cone():
    a = p("y - x1^2")
    b = p("y + 2*x0*x1 - 3*x1^2")
    loc = pairwise_intersections(a, b, R)
    assert loc.complete
    assert (1, 0, 0) in {pt.coords for pt in loc.points}


def test_hyperplane_parametrization():
    H = p("y + 2*x0*x1 - 3*x1^2")
    bring, images = parametrize_hyperplane_section(H)
    # the parametrization satisfies the equation identically
    assert H.substitute(images).is_zero()
    other = p("y - x1^2")
    pts, complete = binary_form_points(other.substitute(images), bring, images, R)
    assert complete
    assert sum(m for _, m in pts) == 2  # two sections of the cone meet twice
    with pytest.raises(ValueError):
        parametrize_hyperplane_section(p("x0*x1"))


def test_line_parametrization():
    L = parse_poly("y0 + 2*y1 - y2", P2)
    bring, images = parametrize_line(L)
    assert L.substitute(images).is_zero()
    cubic = parse_poly("y0^3 + y1^3 + y2^3", P2)
    pts, complete = binary_form_points(cubic.substitute(images), bring, images, R if False else P2)
    assert sum(m for _, m in pts) == 3 or not complete


def test_common_zeros_includes_vertex():
    loc = common_zeros([p("x0"), p("x1")], R)
    assert len(loc.points) == 1 and loc.points[0].is_vertex()


def test_smooth_curve_has_no_singular_points():
    loc = singular_points_of(p("y + x0^2 + x1^2"), R)
    assert loc.points == [] and loc.complete
    # Fermat-like quintic section: smooth, certified
    loc2 = singular_points_of(p("y^5 + x0^10 + x1^10"), R)
    assert loc2.points == [] and loc2.complete
