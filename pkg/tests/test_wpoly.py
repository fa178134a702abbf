import random
from fractions import Fraction

import pytest

from conecover.linsys import monomial_basis, p112_ring
from conecover.textio import parse_poly
from conecover.wpoly import (
    ExactDivisionError,
    RingMismatchError,
    WeightedRing,
    WPoly,
    is_squarefree,
    normalized,
    poly_gcd,
    resultant,
    squarefree_part,
)

R = p112_ring()
S1 = WeightedRing(("x0", "x1", "y", "z"), (1, 1, 2, 5))


def p(text, ring=R):
    return parse_poly(text, ring)


def random_poly(rng, ring, degree, density=0.6):
    terms = {}
    for e in monomial_basis(ring, degree):
        if rng.random() < density:
            c = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
            if c:
                terms[e] = c
    return WPoly(ring, terms)


def test_ring_validation():
    with pytest.raises(ValueError):
        WeightedRing(("x", "x"), (1, 1))
    with pytest.raises(ValueError):
        WeightedRing(("x", "y"), (1, 0))
    with pytest.raises(ValueError):
        WeightedRing(("x",), (1, 2))


def test_weighted_degree_examples():
    # y^5 in weights (1,1,2)
    assert p("y^5").weighted_degree() == 10
    assert p("z^2 + y^5", S1).weighted_degree() == 10
    assert p("x0 + y").weighted_degree() is None  # inhomogeneous marker
    with pytest.raises(ValueError):
        R.zero().weighted_degree()


def test_degree_multiplicativity():
    rng = random.Random(7)
    for _ in range(20):
        a = random_poly(rng, R, rng.choice([2, 4, 6]))
        b = random_poly(rng, R, rng.choice([2, 4]))
        if a.is_zero() or b.is_zero():
            continue
        assert (a * b).weighted_degree() == a.weighted_degree() + b.weighted_degree()


def test_arithmetic_roundtrip():
    rng = random.Random(11)
    for _ in range(25):
        a = random_poly(rng, R, 4)
        b = random_poly(rng, R, 4)
        assert (a + b) - b == a
        if not b.is_zero():
            assert (a * b).exact_div(b) == a


def test_exact_div_failure():
    with pytest.raises(ExactDivisionError):
        p("x0^2 + y").exact_div(p("x1"))


def test_ring_mismatch():
    with pytest.raises(RingMismatchError):
        p("x0") + p("z", S1)


def test_partial_derivative():
    assert p("y^5").partial("y") == p("5*y^4")
    assert p("x0^2*y").partial("x1").is_zero()
    assert p("z^2 + y^5", S1).partial("z") == p("2*z", S1)


def test_substitute_completing_square():
    # z^2 + a z + b with z -> z - a/2 kills the z-linear term
    T = WeightedRing(("a", "b", "z"), (1, 2, 1))
    f = parse_poly("z^2 + a*z + b", T)
    z = T.variable("z")
    g = f.substitute({"a": T.variable("a"), "b": T.variable("b"), "z": z - T.variable("a") / 2})
    assert all(e[2] != 1 for e in g.terms)


def test_substitute_identity_and_composition():
    rng = random.Random(3)
    for _ in range(10):
        f = random_poly(rng, R, 4)
        ident = {v: R.variable(v) for v in R.variables}
        assert f.substitute(ident) == f
    # composition: sigma then tau equals (tau o sigma)
    sigma = {"x0": p("x0 + x1"), "x1": p("x1"), "y": p("y")}
    tau = {"x0": p("x0"), "x1": p("2*x1"), "y": p("y + x0*x1")}
    composed = {name: img.substitute(tau) for name, img in sigma.items()}
    for _ in range(10):
        f = random_poly(rng, R, 6)
        assert f.substitute(sigma).substitute(tau) == f.substitute(composed)


def test_blowup_substitution_order():
    # pulling back along a blow-up chart picks up the exceptional line with
    # multiplicity exactly the order of the germ at the origin
    rng = random.Random(5)
    G = WeightedRing(("u", "v"), (1, 1))
    u, v = G.gens()
    for _ in range(12):
        f = G.zero()
        for d in range(rng.choice([1, 2, 3]), 6):
            for e in monomial_basis(G, d):
                if rng.random() < 0.5:
                    f = f + G.monomial(e, rng.randint(-4, 4))
        if f.is_zero() or f.order() < 1:
            continue
        m = f.order()
        total = f.substitute({"u": u, "v": u * (v + 1)})
        quotient = total.exact_div(u**m)
        assert not u.divides(quotient)


def test_squarefree_examples():
    q = p("(x0*x1 + y)^2 * x0")
    assert squarefree_part(q) == p("x0^2*x1 + x0*y")
    assert not is_squarefree(q)
    assert is_squarefree(squarefree_part(q))
    assert squarefree_part(p("x0^2")) == p("x0")


def test_squarefree_generic_section():
    rng = random.Random(42)
    f = random_poly(rng, R, 10, density=0.9)
    # a generic dense weighted form of degree 10 is squarefree
    assert is_squarefree(f)


def test_squarefree_part_idempotent_property():
    rng = random.Random(13)
    for _ in range(12):
        a = random_poly(rng, R, 2)
        b = random_poly(rng, R, 4)
        if a.is_zero() or b.is_zero():
            continue
        f = a * a * b
        sf = squarefree_part(f)
        assert is_squarefree(sf)
        # the squarefree part divides f and is divisible by the support of a
        assert sf.divides(f)
        assert poly_gcd(sf, a).total_degree() == squarefree_part(a).total_degree()


def test_gcd_properties():
    rng = random.Random(17)
    for _ in range(15):
        c = random_poly(rng, R, 2)
        a = random_poly(rng, R, 4)
        b = random_poly(rng, R, 4)
        if c.is_zero() or a.is_zero() or b.is_zero():
            continue
        g = poly_gcd(a * c, b * c)
        assert c.divides(g)
        assert g.divides(a * c)
        assert g.divides(b * c)


def test_gcd_normalization():
    g = poly_gcd(p("2*x0^2 - 2*x1^2"), p("4*x0^2 + 8*x0*x1 + 4*x1^2"))
    assert g == p("x0 + x1")
    assert normalized(p("-3*x0 - 3*x1")) == p("x0 + x1")


def test_resultant_eliminates():
    r = resultant(p("x0^2 + x1^2"), p("x0 - 3*x1"), "x0")
    assert r == p("10*x1^2")
    # common root detection: shared factor makes the resultant vanish
    r2 = resultant(p("(x0 - x1)*x0"), p("(x0 - x1)*y"), "x0")
    assert r2.is_zero()


def test_order_and_lowest_part():
    f = p("y^2 + x0^3*x1 + x0^5*x1^5")
    assert f.order() == 2
    assert f.lowest_part() == p("y^2")
