#!/usr/bin/env python3
"""Benchmark the compiled kernels against their pure-Python twins.

Times the two hot enumeration loops (point counting over F_p and reduced-form
enumeration) at a few sizes and prints a speedup table. Run after building
the extension: python benchmarks/bench_kernels.py
"""

import time

from twistsel import _kernels, _kernels_py

CURVE = (0, 4, 1, 3, 6)  # arbitrary coefficients, reduced per prime below


def _time(fn, *args, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_count_points():
    print("count_points(a1..a6, p): exhaustive #E(F_p)")
    print(f"{'p':>9} {'pure (s)':>10} {'compiled (s)':>13} {'speedup':>8}")
    for p in (10007, 100003, 1000003):
        args = tuple(c % p for c in CURVE) + (p,)
        t_py = _time(_kernels_py.count_points, *args)
        if _kernels.BACKEND == "cython":
            t_cy = _time(_kernels.count_points, *args)
            assert _kernels.count_points(*args) == _kernels_py.count_points(*args)
            print(f"{p:>9} {t_py:>10.4f} {t_cy:>13.4f} {t_py / t_cy:>7.1f}x")
        else:
            print(f"{p:>9} {t_py:>10.4f} {'n/a':>13} {'n/a':>8}")


def bench_reduced_forms():
    print("\nclass_number(D) summed over fundamental-ish D in a window")
    print(f"{'|D| up to':>9} {'pure (s)':>10} {'compiled (s)':>13} {'speedup':>8}")
    for bound in (2000, 20000, 100000):
        discs = [D for D in range(-3, -bound, -7) if D % 4 in (0, 1)]

        def run(mod):
            total = 0
            for D in discs:
                total += mod.class_number(D)
            return total

        t_py = _time(run, _kernels_py, repeat=1)
        if _kernels.BACKEND == "cython":
            t_cy = _time(run, _kernels, repeat=1)
            assert run(_kernels) == run(_kernels_py)
            print(f"{bound:>9} {t_py:>10.4f} {t_cy:>13.4f} {t_py / t_cy:>7.1f}x")
        else:
            print(f"{bound:>9} {t_py:>10.4f} {'n/a':>13} {'n/a':>8}")


if __name__ == "__main__":
    print(f"selected backend: {_kernels.BACKEND}\n")
    bench_count_points()
    bench_reduced_forms()
