"""Time the compiled and numpy backends of the long-series kernels.

    python benchmarks/bench_accel.py [--repeat N] [--scale K]

Each kernel runs on both backends; the table reports the best wall time,
the speed-up and the relative disagreement between the two sums.
"""

import argparse
import math
import sys
import time

from addison import accel


def cases(scale):
    n = 1_000_000 * scale
    return {
        "stencil_sum": (accel.POWLOG, 2.0, 1, 0.25, 1.0, [0.0, 0.5, 1.0], [1.0, -2.0, 1.0], 0, n),
        "lerch_partial": (0.999, 2.0, 0.5, 0, n),
        "trig_log_sum": (1.0, 2.0, 1, True, 1, n),
        "rational_sum": ([1.0, 1.0], [0.0, 1.0], 1.0, 1, n),
        "alt_fraclog_sum": (1, n),
        "harmonic_dirichlet": (2.0, 1.0, 1, n, 0.0),
    }


def best_time(fn, args, repeat):
    best = math.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def _scalar(out):
    return out[0] if isinstance(out, tuple) else out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--scale", type=int, default=1, help="problem size in millions of terms")
    args = ap.parse_args(argv)

    backends = accel.backends()
    if "cython" not in backends:
        print("compiled backend not built; timing the numpy backend only", file=sys.stderr)
    print(f"{'kernel':<20}{'python s':>12}{'cython s':>12}{'speed-up':>10}{'rel diff':>12}")
    worst = 0.0
    for name, fargs in cases(args.scale).items():
        tp, vp = best_time(getattr(backends["python"], name), fargs, args.repeat)
        if "cython" in backends:
            tc, vc = best_time(getattr(backends["cython"], name), fargs, args.repeat)
            a, b = _scalar(vp), _scalar(vc)
            diff = abs(a - b) / max(abs(a), 1e-300)
            worst = max(worst, diff)
            print(f"{name:<20}{tp:>12.4f}{tc:>12.4f}{tp / tc:>10.1f}{diff:>12.2e}")
        else:
            print(f"{name:<20}{tp:>12.4f}{'-':>12}{'-':>10}{'-':>12}")
    print(f"worst relative disagreement: {worst:.2e}")
    return 0 if worst < 1e-10 else 1


if __name__ == "__main__":
    sys.exit(main())
