"""Compare the numpy and compiled quadrature kernels.

Two measurements per backend:

  * raw kernel throughput on batches of pre-sampled Gauss-Kronrod panels,
  * end-to-end transform_grid wall time on a frequency sweep.

The script also reports the largest value disagreement between backends,
which should sit at the floating point roundoff floor.

Run from the repository root:

    python3 benchmarks/compare_backends.py
    python3 benchmarks/compare_backends.py --repeats 9 --grid-steps 81
"""

import argparse
import time

import numpy as np

from bcft._kernels import BACKEND, WG15, WK15, XK15, available_backends
from bcft.bicomplex import from_units
from bcft.engine import transform_grid
from bcft.signals import make


def panel_batch(n_panels, rng):
    """Random panels of gaussian samples shaped the way the engine calls
    the kernel: scaled nodes, signal values, half-widths."""
    centers = rng.uniform(-6.0, 6.0, size=n_panels)
    halves = rng.uniform(0.05, 0.5, size=n_panels)
    t = centers[:, None] + halves[:, None] * XK15[None, :]
    fs = np.exp(-0.5 * t * t).astype(np.complex128)
    return t, fs, halves


def best_of(repeats, fn):
    timings = []
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        timings.append(time.perf_counter() - start)
    return min(timings)


def bench_kernel(backends, repeats, rng):
    print("raw kernel, f(t)*exp(i*w*t) panel sums (best of %d)" % repeats)
    print(f"  {'panels':>8} " + " ".join(f"{name:>14}" for name in backends))
    w_re, w_im = 1.25, 0.4
    for n_panels in (16, 128, 1024, 8192):
        t, fs, halves = panel_batch(n_panels, rng)
        row = [f"  {n_panels:>8}"]
        for name, kernel in backends.items():
            dt = best_of(repeats, lambda k=kernel: k(t, fs, halves, w_re, w_im, WK15, WG15))
            row.append(f"{dt * 1e6:>11.1f} us")
        print(" ".join(row))

    # agreement: identical panels through both backends
    t, fs, halves = panel_batch(4096, rng)
    results = [kernel(t, fs, halves, w_re, w_im, WK15, WG15) for kernel in backends.values()]
    if len(results) == 2:
        (i_a, e_a), (i_b, e_b) = results
        worst = max(np.abs(i_a - i_b).max(), np.abs(e_a - e_b).max())
        print(f"  max disagreement across 4096 panels: {worst:.3e}")


def bench_transform(backends, repeats, steps):
    signal = make("gaussian")
    grid = [from_units(a0, 0.3, 0.0, 0.1) for a0 in np.linspace(-8.0, 8.0, steps)]
    print(f"end-to-end transform_grid, gaussian, {steps} frequencies (best of {repeats})")
    for name, kernel in backends.items():
        dt = best_of(repeats, lambda k=kernel: transform_grid(signal, grid, kernel=k))
        print(f"  {name:>10}: {dt * 1e3:8.2f} ms")
    points = {
        name: transform_grid(signal, grid, kernel=kernel) for name, kernel in backends.items()
    }
    if len(points) == 2:
        a, b = points.values()
        worst = max(
            abs(pa.result.value.w1 - pb.result.value.w1) for pa, pb in zip(a, b)
        )
        print(f"  max transform disagreement: {worst:.3e}")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=5, help="timing repetitions, best kept")
    parser.add_argument("--grid-steps", type=int, default=41, help="frequencies in the sweep")
    parser.add_argument("--seed", type=int, default=7, help="panel sampling seed")
    args = parser.parse_args()

    backends = available_backends()
    print(f"active backend: {BACKEND}; available: {', '.join(backends)}")
    if len(backends) == 1:
        print("compiled extension not built; timing the numpy kernel alone")
    rng = np.random.default_rng(args.seed)
    bench_kernel(backends, args.repeats, rng)
    print()
    bench_transform(backends, args.repeats, args.grid_steps)


if __name__ == "__main__":
    main()
