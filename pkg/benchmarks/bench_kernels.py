"""Benchmark the compiled determinant/charpoly kernels against the pure
Python fallback.

Run:  python3 benchmarks/bench_kernels.py
"""

import random
import time

from walkmat import kernels
from walkmat import _kernels_py


def _load_compiled():
    try:
        from walkmat import _kernels

        return _kernels
    except ImportError:
        return None


def rand_matrix(rng, n, lo=-9, hi=9):
    return [[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)]


def bench(fn, mats, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for m in mats:
            fn(m)
        best = min(best, (time.perf_counter() - t0) / len(mats))
    return best


def main():
    compiled = _load_compiled()
    print(f"active backend: {kernels.BACKEND}")
    if compiled is None:
        print("compiled kernels unavailable; benchmarking pure Python only")
    rng = random.Random(42)
    print(f"{'kernel':<12}{'n':>4}{'pure (ms)':>12}{'compiled (ms)':>15}{'speedup':>9}")
    for n in (8, 16, 24, 32):
        mats = [rand_matrix(rng, n) for _ in range(10)]
        for name, pure_fn, comp_fn in (
            ("bareiss", _kernels_py.det_bareiss, compiled and compiled.det_bareiss),
            ("berkowitz", _kernels_py.charpoly, compiled and compiled.charpoly),
        ):
            t_pure = bench(pure_fn, mats)
            if comp_fn is not None:
                for m in mats:  # same answers before timing
                    assert pure_fn(m) == comp_fn(m)
                t_comp = bench(comp_fn, mats)
                print(
                    f"{name:<12}{n:>4}{t_pure * 1e3:>12.3f}"
                    f"{t_comp * 1e3:>15.3f}{t_pure / t_comp:>8.2f}x"
                )
            else:
                print(f"{name:<12}{n:>4}{t_pure * 1e3:>12.3f}{'-':>15}{'-':>9}")


if __name__ == "__main__":
    main()
