"""Compare the compiled and numpy kernels.

    python benchmarks/bench_kernels.py [--n 30 60 132] [--repeat 5]

Times the semivariogram, one LU factorization plus a 300-column solve
(the per-t work of the scan), and a full 100 x 300 scan.
"""
import argparse
import time

import numpy as np

from krigmean import kernels
from krigmean.model import CorrelationModel, build_matrix, build_targets
from krigmean.scan import ScanConfig, scan


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def cases(n):
    rng = np.random.default_rng(n)
    v = rng.normal(size=n).cumsum() + 100.0
    model = CorrelationModel(0.9, n + 50)
    a = build_matrix(n, model)
    b = build_targets(n, np.arange(n + 1, n + 301), model)

    def factor_solve():
        lu, piv, _ = kernels.lu_factor(a, 1e-12)
        kernels.lu_solve(lu, piv, b)

    return {
        "semivariogram": lambda: kernels.semivariogram(v),
        "factor+solve(300)": factor_solve,
        "scan 100x300": lambda: scan(v, 0.9, ScanConfig(epsilon=0.0)),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, nargs="+", default=[30, 60, 132])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    names = kernels.available_backends()
    print(f"{'n':>5} {'kernel':<20}" + "".join(f"{nm:>14}" for nm in names) + (f"{'speedup':>10}" if len(names) > 1 else ""))
    for n in args.n:
        for label in cases(n):
            times = []
            for nm in names:
                with kernels.use_backend(nm):
                    times.append(best_of(cases(n)[label], args.repeat))
            row = f"{n:>5} {label:<20}" + "".join(f"{t * 1e3:>12.3f}ms" for t in times)
            if len(times) > 1:
                row += f"{times[1] / times[0]:>9.1f}x"
            print(row)


if __name__ == "__main__":
    main()
