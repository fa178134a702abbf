import random
from fractions import Fraction

import pytest

from conecover.linsys import monomial_basis, p112_ring
from conecover.textio import ParseError, format_poly, format_ring, parse_poly, parse_ring
from conecover.wpoly import WPoly, WeightedRing

R = p112_ring()


def test_basic_grammar():
    f = parse_poly("z^2 + y^5 + 2*x0^2*y^4", WeightedRing(("x0", "x1", "y", "z"), (1, 1, 2, 5)))
    assert len(f.terms) == 3
    g = parse_poly("2x0 y", R)  # implicit products
    assert g == parse_poly("2*x0*y", R)
    assert parse_poly("(x0 + x1)^2", R) == parse_poly("x0^2 + 2*x0*x1 + x1^2", R)
    assert parse_poly("-x0 + -x1", R) == parse_poly("-(x0 + x1)", R)
    assert parse_poly("1/2 y", R) * 2 == parse_poly("y", R)


def test_rational_literals_only_between_integers():
    assert parse_poly("3/4", R).constant_value() == Fraction(3, 4)
    with pytest.raises(ParseError):
        parse_poly("x0/2", R)
    with pytest.raises(ParseError):
        parse_poly("1/x0", R)
    with pytest.raises(ParseError):
        parse_poly("1/0", R)


def test_error_positions():
    with pytest.raises(ParseError) as err:
        parse_poly("x0 + ", R)
    assert err.value.line == 1 and err.value.column == 6
    with pytest.raises(ParseError) as err:
        parse_poly("x0 + w", R)
    assert "unknown variable 'w'" in str(err.value)
    with pytest.raises(ParseError) as err:
        parse_poly("x0^x1", R)
    assert "exponent" in str(err.value)
    with pytest.raises(ParseError) as err:
        parse_poly("x0 + $", R)
    assert err.value.column == 6


def test_ring_declaration_roundtrip():
    ring = parse_ring("x0:1, x1:1, y:2")
    assert ring == R
    assert parse_ring(format_ring(ring)) == ring
    assert parse_ring("ring: u:1, v:1") == WeightedRing(("u", "v"), (1, 1))
    with pytest.raises(ValueError):
        parse_ring("x0:0")
    with pytest.raises(ValueError):
        parse_ring("")


def random_poly(rng, ring, max_degree=8):
    terms = {}
    for d in range(max_degree + 1):
        for e in monomial_basis(ring, d):
            if rng.random() < 0.15:
                c = Fraction(rng.randint(-40, 40), rng.randint(1, 9))
                if c:
                    terms[e] = c
    return WPoly(ring, terms)


def test_parse_print_roundtrip_500():
    rng = random.Random(2718)
    rings = [
        R,
        WeightedRing(("x0", "x1", "y", "z"), (1, 1, 2, 5)),
        WeightedRing(("u", "v"), (1, 1)),
    ]
    for i in range(500):
        ring = rings[i % len(rings)]
        f = random_poly(rng, ring)
        assert parse_poly(format_poly(f), ring) == f


def test_canonical_printing_is_graded_lex():
    f = parse_poly("y^5 + x0^10 + x0^2*x1^2*y^3", R)
    assert format_poly(f) == "x0^10 + x0^2*x1^2*y^3 + y^5"
    assert format_poly(R.zero()) == "0"
    assert format_poly(parse_poly("-y", R)) == "-y"
