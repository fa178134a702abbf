import random
from fractions import Fraction

import pytest

from conecover.germs import (
    ELLIPTIC_DEG1,
    ELLIPTIC_DEG2,
    NEGLIGIBLE,
    NOT_SLC,
    SMOOTH,
    GermError,
    IrrationalSingularityError,
    blow_up,
    classify_branch_point,
    classify_components,
    lct,
    multiplicity,
    resolution_tree,
    resolve,
)
from conecover.linsys import TangentDir, germ_ring
from conecover.textio import parse_poly

G = germ_ring("x", "y")


def g(text):
    return parse_poly(text, G)


def newton_lct(a, b):
    """Independent oracle: lct of x^a +- y^b type nondegenerate germs."""
    return min(Fraction(1), Fraction(1, a) + Fraction(1, b))


# the germ corpus with hand-derivable thresholds (computed by the Newton
# oracle before wiring up the engine, frozen here)
CORPUS = [
    ("node", "x*y", newton_lct(1, 1), Fraction(1), NEGLIGIBLE, [2]),
    ("cusp", "y^2 - x^3", newton_lct(2, 3), Fraction(5, 6), NEGLIGIBLE, [2, 1, 1]),
    ("tacnode", "y^2 - x^4", newton_lct(2, 4), Fraction(3, 4), NEGLIGIBLE, [2, 2]),
    ("triple", "x*y*(x + y)", newton_lct(3, 3), Fraction(2, 3), NEGLIGIBLE, [3]),
    (
        "quadruple",
        "x*y*(x + y)*(x - y)",
        newton_lct(4, 4),
        Fraction(1, 2),
        ELLIPTIC_DEG2,
        [4],
    ),
    ("threethree", "y^3 + x^6", newton_lct(3, 6), Fraction(1, 2), ELLIPTIC_DEG1, [3, 3]),
]


def test_lct_corpus_against_oracle():
    for name, eq, oracle, frozen, verdict, seq in CORPUS:
        assert oracle == frozen, name  # the oracle reproduces the frozen value
        res = resolution_tree(g(eq))
        assert res.lct() == frozen, name
        assert res.multiplicity_sequence == seq, name
        rep = classify_branch_point(g(eq))
        assert rep.verdict == verdict, name


def test_multiplicity():
    assert multiplicity(g("y^2 - x^3")) == 2
    assert multiplicity(g("x^4*(1 + y^3) + 2*y^4*(1 + y)")) == 4
    assert multiplicity(g("1 + x")) == 0
    with pytest.raises(GermError):
        multiplicity(G.zero())


def test_blow_up_node():
    charts = blow_up(g("x*y"))
    # two directions, smooth strict transforms
    assert len(charts) == 2
    for direction, strict in charts:
        assert strict.order() <= 1 or strict.coefficient((0, 0)) != 0


def test_blow_up_threethree_keeps_triple():
    charts = blow_up(g("y^3 + x^6"))
    orders = [strict.order() for _, strict in charts if strict.coefficient((0, 0)) == 0]
    assert 3 in orders


def test_blow_up_ordinary_quadruple():
    charts = blow_up(g("x*y*(x + y)*(x - y)"))
    assert len(charts) == 4
    for _, strict in charts:
        local = strict
        if local.coefficient((0, 0)) == 0:
            assert local.order() == 1


def test_cusp_ledger():
    res = resolution_tree(g("y^2 - x^3"))
    assert [(rec.k, rec.m) for rec in res.ledger] == [(1, 2), (2, 3), (4, 6)]


def test_ordinary_point_lct_law():
    # lct of an ordinary multiplicity-m point is min(1, 2/m)
    lines = ["x", "y", "x + y", "x - y", "x + 2*y"]
    for m in (2, 3, 4, 5):
        f = G.one()
        for t in lines[:m]:
            f = f * g(t)
        assert lct(f) == min(Fraction(1), Fraction(2, m))


def test_paper_branch_germs():
    rep = classify_branch_point(g("x^4*(1 + y^3) + 2*y^4*(1 + y)"))
    assert rep.verdict == ELLIPTIC_DEG2 and rep.lct == Fraction(1, 2)
    rep = classify_branch_point(g("x^6 + y^3*(1 + y^2 + y*x^2)"))
    assert rep.verdict == ELLIPTIC_DEG1
    assert rep.multiplicity_sequence[:2] == [3, 3]
    assert rep.tangent == TangentDir(0, 1)


def test_smooth_and_unit_invariance():
    assert classify_branch_point(g("y + x^2")).verdict == SMOOTH
    assert classify_branch_point(g("y + x^2")).multiplicity_sequence == [1]
    rng = random.Random(5)
    for name, eq, _, _, verdict, _ in CORPUS:
        f = g(eq)
        unit = G.one() + g("x") * rng.randint(-3, 3) + g("y") * rng.randint(-3, 3)
        assert classify_branch_point(f * unit).verdict == verdict


def test_linear_change_invariance():
    rng = random.Random(9)
    x, y = G.gens()
    for name, eq, _, _, verdict, _ in CORPUS:
        f = g(eq)
        for _ in range(4):
            while True:
                a, b, c, d = (rng.randint(-3, 3) for _ in range(4))
                if a * d - b * c != 0:
                    break
            sub = {"x": a * x + b * y, "y": c * x + d * y}
            rep = classify_components([f.substitute(sub)])
            assert rep.verdict == verdict, (name, (a, b, c, d))
            assert rep.lct == classify_branch_point(f).lct


def test_multibranch_components():
    # the same germ through a component list gives the same verdict
    rep = classify_components([g("x"), g("y"), g("x + y"), g("x - y")])
    assert rep.verdict == ELLIPTIC_DEG2
    assert rep.lct == Fraction(1, 2)


def test_weighted_lc():
    res = resolve([g("x"), g("y")])
    # node with coefficients (1/2, 1/2) and (1, 1) are lc; (1, 3/2) is not
    assert res.log_canonical([Fraction(1, 2), Fraction(1, 2)])
    assert res.log_canonical([1, 1])
    assert not res.log_canonical([1, Fraction(3, 2)])
    # an ordinary quadruple is strictly not lc above coefficient 1/2
    res4 = resolve([g("x*y*(x + y)*(x - y)")])
    assert res4.log_canonical([Fraction(1, 2)])
    assert not res4.log_canonical([Fraction(1, 2) + Fraction(1, 100)])


def test_not_slc_cases():
    # [3,3,3] chain and a quintuple point fall below threshold 1/2
    assert classify_branch_point(g("y^3 + x^9")).verdict == NOT_SLC
    quintuple = g("x*y*(x + y)*(x - y)*(x + 2*y)")
    assert classify_branch_point(quintuple).verdict == NOT_SLC
    # quadruple with tangent cone l^3 * l' (the corrupted-extraction shape)
    bad = g("x*(x + y)^3 + y^5")
    assert classify_branch_point(bad).verdict == NOT_SLC


def test_non_reduced_rejected():
    with pytest.raises(GermError):
        resolve([g("x^2")])
    with pytest.raises(GermError):
        resolve([g("x*y"), g("y")])


def test_irrational_multiple_direction_raises():
    # tangent cone (y^2 - 2x^2)^2: two conjugate double directions
    f = g("(y^2 - 2*x^2)^2 + x^5")
    with pytest.raises(IrrationalSingularityError):
        classify_branch_point(f)


def test_verdict_lct_consistency():
    # property from the taxonomy: elliptic verdicts have lct exactly 1/2,
    # nodes have lct 1
    assert classify_branch_point(g("x*y")).lct == 1
    for eq in ("x*y*(x + y)*(x - y)", "y^3 + x^6"):
        assert classify_branch_point(g(eq)).lct == Fraction(1, 2)
