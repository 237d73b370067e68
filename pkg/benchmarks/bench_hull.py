"""Compare the compiled and pure-Python hull kernels.

    python3 benchmarks/bench_hull.py [--repeat N]

Each case is a random integer point set; both backends must agree on the
volume before their times are reported.
"""

import argparse
import random
import time

from volpoly import hull
from volpoly.polytope import BodyCollection, RationalPolytope, volume_polynomial

CASES = [(2, 200, 50), (3, 120, 20), (4, 80, 10), (5, 40, 6), (6, 30, 4)]


def timed(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - start)
    return best, out


def bench_kernels(repeat):
    rng = random.Random(0)
    print(f"{'dim':>3} {'points':>6} {'python s':>10} {'compiled s':>10} {'speedup':>8}")
    for d, npts, hi in CASES:
        pts = [tuple(rng.randint(-hi, hi) for _ in range(d)) for _ in range(npts)]
        tp, vp = timed(lambda: hull.hull_volume_int(pts, "python"), repeat)
        if not hull.HAVE_COMPILED:
            print(f"{d:>3} {npts:>6} {tp:>10.4f} {'n/a':>10} {'':>8}")
            continue
        tc, vc = timed(lambda: hull.hull_volume_int(pts, "compiled"), repeat)
        assert vp == vc, (d, vp, vc)
        print(f"{d:>3} {npts:>6} {tp:>10.4f} {tc:>10.4f} {tp / tc:>7.1f}x")


def bench_volume_polys(repeat):
    # end to end: the workload of the volume-engine acceptance check
    rng = random.Random(1)
    corpus = [
        BodyCollection([RationalPolytope(4, [[rng.randint(0, 3) for _ in range(4)] for _ in range(5)]) for _ in range(3)])
        for _ in range(10)
    ]
    results = {}
    for backend in ("python", "compiled"):
        if backend == "compiled" and not hull.HAVE_COMPILED:
            continue
        saved = hull.BACKEND
        hull.BACKEND = backend
        try:
            results[backend] = timed(lambda: [volume_polynomial(C) for C in corpus], repeat)
        finally:
            hull.BACKEND = saved
    if len(results) == 2:
        assert results["python"][1] == results["compiled"][1]
    line = ", ".join(f"{k} {v[0]:.3f} s" for k, v in results.items())
    print(f"10 volume polynomials, three bodies in R^4: {line}")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    print(f"compiled kernel available: {hull.HAVE_COMPILED}")
    bench_kernels(args.repeat)
    bench_volume_polys(args.repeat)


if __name__ == "__main__":
    main()
