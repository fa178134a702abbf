"""Compare the compiled kernels against the pure-Python reference.

Runs the two hot kernels (sparse term-map multiplication, fraction-free
rank) on representative workloads: germ-sized polynomial products and the
condition matrices of the strata computations.

    python benchmarks/bench_kernels.py
"""

import random
import time
from fractions import Fraction

from conecover._kernels import reference

try:
    from conecover._kernels import _speedups
except ImportError:
    _speedups = None


def random_terms(rng, nvars, nterms, max_exp=6):
    terms = {}
    while len(terms) < nterms:
        e = tuple(rng.randint(0, max_exp) for _ in range(nvars))
        terms[e] = Fraction(rng.randint(-50, 50), rng.randint(1, 12))
        if terms[e] == 0:
            del terms[e]
    return terms


def random_rows(rng, nrows, ncols):
    return [
        [Fraction(rng.randint(-9, 9), rng.randint(1, 7)) for _ in range(ncols)]
        for _ in range(nrows)
    ]


def bench(label, fn, args, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    rng = random.Random(2024)
    mul_cases = [
        ("mul  30x30 terms, 2 vars", random_terms(rng, 2, 30), random_terms(rng, 2, 30), 200),
        ("mul  80x80 terms, 3 vars", random_terms(rng, 3, 80), random_terms(rng, 3, 80), 30),
        ("mul 150x150 terms, 4 vars", random_terms(rng, 4, 150), random_terms(rng, 4, 150), 8),
    ]
    rank_cases = [
        ("rank 24x36", random_rows(rng, 24, 36), 50),
        ("rank 40x60", random_rows(rng, 40, 60), 12),
        ("rank 80x100", random_rows(rng, 80, 100), 3),
    ]
    impls = [("python", reference)]
    if _speedups is not None:
        impls.append(("cython", _speedups))
    else:
        print("compiled kernels not available; benchmarking the reference only")

    print("%-28s" % "case", "  ".join("%12s" % name for name, _ in impls), " speedup")
    for label, a, b, repeat in mul_cases:
        times = []
        results = []
        for _, impl in impls:
            t, r = bench(label, impl.mul_terms, (a, b), repeat)
            times.append(t)
            results.append(r)
        assert all(r == results[0] for r in results), "kernel mismatch"
        speed = times[0] / times[-1] if len(times) > 1 else 1.0
        print("%-28s" % label, "  ".join("%10.3f ms" % (t * 1e3) for t in times), "  %.2fx" % speed)
    for label, rows, repeat in rank_cases:
        times = []
        results = []
        for _, impl in impls:
            t, r = bench(label, impl.bareiss_rank, ([list(r) for r in rows],), repeat)
            times.append(t)
            results.append(r)
        assert all(r == results[0] for r in results), "kernel mismatch"
        speed = times[0] / times[-1] if len(times) > 1 else 1.0
        print("%-28s" % label, "  ".join("%10.3f ms" % (t * 1e3) for t in times), "  %.2fx" % speed)


if __name__ == "__main__":
    main()
