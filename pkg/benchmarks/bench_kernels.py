#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Runs every kernel on representative problem sizes with both backends and
prints a timing table. Invoke from the repository root:

    python3 benchmarks/bench_kernels.py [--repeats 200]
"""

import argparse
import time

import numpy as np

from powersums import kernels


def time_call(fn, args, repeats):
    fn(*args)  # warm (jit compile / cache touch)
    t0 = time.perf_counter()
    for _ in range(repeats):
        fn(*args)
    return (time.perf_counter() - t0) / repeats


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=200)
    args = parser.parse_args()

    if "numba" not in kernels.IMPLEMENTATIONS:
        print("numba backend unavailable; nothing to compare")
        return

    rng = np.random.default_rng(0)
    cases = []

    for n, count in ((8, 64), (32, 1024), (16, 10000)):
        exps = np.sort(rng.choice(max(count, 2 * n), size=n, replace=False)).astype(np.int64)
        cases.append((f"rational n={n} N={count}", "rational_components",
                      (exps, int(exps.max() + 1), count)))

    for n, count in ((4, 16), (8, 256), (16, 2048)):
        radii = 1.0 + rng.random(n) / n  # realistic cap: 1 + C/n
        phases = rng.random(n)
        cases.append((f"polar n={n} N={count}", "polar_components", (radii, phases, count)))
        cases.append((f"max-abs n={n} N={count}", "polar_max_abs", (radii, phases, count)))
        cases.append((f"surrogate n={n} N={count}", "surrogate", (radii, phases, count, 0.1)))

    header = f"{'case':<26} {'numpy':>12} {'numba':>12} {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for label, name, call_args in cases:
        t_np = time_call(kernels.IMPLEMENTATIONS["numpy"][name], call_args, args.repeats)
        t_nb = time_call(kernels.IMPLEMENTATIONS["numba"][name], call_args, args.repeats)
        print(f"{label:<26} {t_np * 1e6:>10.1f}us {t_nb * 1e6:>10.1f}us {t_np / t_nb:>8.1f}x")


if __name__ == "__main__":
    main()
