import random
from fractions import Fraction

import pytest

from conecover import _kernels
from conecover._kernels import reference

try:
    from conecover._kernels import _speedups
except ImportError:
    _speedups = None


def random_terms(rng, nvars, nterms):
    terms = {}
    for _ in range(nterms):
        e = tuple(rng.randint(0, 5) for _ in range(nvars))
        c = Fraction(rng.randint(-30, 30), rng.randint(1, 8))
        if c:
            terms[e] = c
    return terms


def random_rows(rng, nrows, ncols, rank_limit=None):
    rows = [
        [Fraction(rng.randint(-6, 6), rng.randint(1, 5)) for _ in range(ncols)]
        for _ in range(nrows)
    ]
    return rows


def gauss_rank_oracle(rows):
    m = [[Fraction(c) for c in row] for row in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        piv = None
        for i in range(rank, len(m)):
            if m[i][col]:
                piv = i
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [c * inv for c in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][col]:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def test_mul_matches_schoolbook():
    rng = random.Random(1)
    for _ in range(30):
        a = random_terms(rng, 3, 12)
        b = random_terms(rng, 3, 12)
        got = _kernels.mul_terms(a, b)
        expect = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                expect[e] = expect.get(e, Fraction(0)) + ca * cb
        expect = {e: c for e, c in expect.items() if c}
        assert got == expect


@pytest.mark.skipif(_speedups is None, reason="compiled kernels unavailable")
def test_compiled_matches_reference():
    rng = random.Random(2)
    for _ in range(25):
        a = random_terms(rng, rng.choice([2, 3, 4]), 20)
        b = random_terms(rng, len(next(iter(a))) if a else 2, 20)
        if not a or not b:
            continue
        nv = len(next(iter(a)))
        b = random_terms(rng, nv, 20)
        assert reference.mul_terms(a, b) == _speedups.mul_terms(a, b)
    for _ in range(15):
        rows = random_rows(rng, rng.randint(1, 12), rng.randint(1, 14))
        assert reference.bareiss_rank([list(r) for r in rows]) == _speedups.bareiss_rank(
            [list(r) for r in rows]
        )


def test_rank_against_gauss_oracle():
    rng = random.Random(3)
    for _ in range(40):
        nrows, ncols = rng.randint(1, 10), rng.randint(1, 12)
        rows = random_rows(rng, nrows, ncols)
        # plant dependencies sometimes
        if nrows >= 2 and rng.random() < 0.5:
            rows[-1] = [a + b for a, b in zip(rows[0], rows[1 % nrows])]
        assert _kernels.bareiss_rank([list(r) for r in rows]) == gauss_rank_oracle(rows)


def test_rank_invariant_under_row_permutation_and_scaling():
    rng = random.Random(4)
    for _ in range(20):
        rows = random_rows(rng, 8, 10)
        base = _kernels.bareiss_rank([list(r) for r in rows])
        for _ in range(5):
            perm = rows[:]
            rng.shuffle(perm)
            scaled = [
                [c * Fraction(rng.choice([1, 2, 3, -1, -5])) for c in row] for row in perm
            ]
            assert _kernels.bareiss_rank([list(r) for r in scaled]) == base


def test_rank_edge_cases():
    assert _kernels.bareiss_rank([[Fraction(0), Fraction(0)]]) == 0
    assert _kernels.bareiss_rank([[Fraction(1, 3)]]) == 1
    assert _kernels.bareiss_rank([[0, 1], [1, 0], [1, 1]]) == 2
