"""Time the numba kernels against their pure-numpy/Python counterparts.

    python3 benchmarks/bench_kernels.py [--repeat N]

Both variants are imported directly from ``gaconvex._kernels`` so a single
process can time them regardless of ``GACONVEX_DISABLE_NUMBA``. The first
numba call (compilation or cache load) is excluded from the timings.
"""

import argparse
import time

import numpy as np

from gaconvex import _accel, _kernels as K


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def cases(n_pairs):
    rng = np.random.default_rng(0)
    a = rng.uniform(1e-3, 1e3, n_pairs)
    b = a * rng.uniform(1.0 + 1e-9, 50.0, n_pairs)
    params = [(1.0, 0.5, lam) for lam in np.linspace(0.0, 30.0, 61)]
    return [
        ("kernel series x61",
         lambda: [K._kernel_series_py(*p)[0] for p in params],
         lambda: [K._kernel_series_nb(*p)[0] for p in params]),
        ("scaled quadrature x8",
         lambda: [K._scaled_quad_py(0.5, 1.0, mu, 1e-13, 2 ** 14)[0] for mu in range(40, 360, 40)],
         lambda: [K._scaled_quad_nb(0.5, 1.0, float(mu), 1e-13, 2 ** 14)[0] for mu in range(40, 360, 40)]),
        ("simpson oracle 1e6 panels",
         lambda: K._simpson_kernel_numpy(1.0, 0.5, 20.0, 10 ** 6),
         lambda: K._simpson_kernel_nb(1.0, 0.5, 20.0, 10 ** 6)),
        (f"mean chain {n_pairs} pairs",
         lambda: K._chain_numpy(a, b),
         lambda: K._chain_nb(a, b)),
    ]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--pairs", type=int, default=100_000)
    args = ap.parse_args()
    if not _accel.HAVE_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")
    print(f"{'case':<28}{'numpy/py [s]':>14}{'numba [s]':>12}{'speedup':>10}{'max |diff|':>14}")
    for name, slow, fast in cases(args.pairs):
        fast()  # warm-up: compile or load from cache
        t_slow, r_slow = best_of(slow, args.repeat)
        t_fast, r_fast = best_of(fast, args.repeat)
        diff = float(np.max(np.abs(np.asarray(r_slow) - np.asarray(r_fast)) / np.maximum(1.0, np.abs(r_slow))))
        print(f"{name:<28}{t_slow:>14.4g}{t_fast:>12.4g}{t_slow / t_fast:>10.1f}{diff:>14.2e}")


if __name__ == "__main__":
    main()
