"""Compare the compiled multiplication kernel against the pure-Python one.

Run from the repository root:

    python3 benchmarks/bench_kernel.py

The two backends are imported directly (no subprocesses), multiplied over
the same deterministic random inputs, and cross-checked for equality before
timing.  Shapes mirror the real workload: sparse trivariate polynomials as
they appear in iterate composition and base-point towers.
"""

from __future__ import annotations

import random
import time

from blowcube import _kernel_py
from blowcube.poly import WIDTH, Poly, pack

try:
    from blowcube import _speedups
except ImportError:
    _speedups = None


def random_packed(rng: random.Random, degree: int, terms: int) -> dict:
    out: dict[int, int] = {}
    while len(out) < terms:
        a = rng.randint(0, degree)
        b = rng.randint(0, degree - a)
        c = degree - a - b
        out[pack((a, b, c))] = rng.randint(-10 ** 6, 10 ** 6) or 1
    return out


def time_backend(mul, pairs, repeats: int = 3) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        for a, b in pairs:
            mul(a, b)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    rng = random.Random(20240814)
    shapes = [
        ("small dense", 8, 40, 200),
        ("medium", 30, 300, 40),
        ("large sparse", 80, 600, 10),
        ("iterate-like", 140, 2500, 3),
    ]
    print(f"pure backend:     {_kernel_py.BACKEND}")
    if _speedups is None:
        print("compiled backend: NOT BUILT (pip install -e . rebuilds it)")
    else:
        print(f"compiled backend: {_speedups.BACKEND}")
    print()
    header = f"{'shape':<14} {'terms':>6} {'pairs':>6} {'pure (s)':>10}"
    if _speedups is not None:
        header += f" {'compiled (s)':>13} {'speedup':>8}"
    print(header)
    for label, degree, terms, npairs in shapes:
        pairs = [(random_packed(rng, degree, terms),
                  random_packed(rng, degree, terms))
                 for _ in range(npairs)]
        if _speedups is not None:
            for a, b in pairs:
                if _speedups.mul_packed(a, b) != _kernel_py.mul_packed(a, b):
                    raise SystemExit(f"backend mismatch on shape {label!r}")
        t_pure = time_backend(_kernel_py.mul_packed, pairs)
        line = f"{label:<14} {terms:>6} {npairs:>6} {t_pure:>10.4f}"
        if _speedups is not None:
            t_fast = time_backend(_speedups.mul_packed, pairs)
            line += f" {t_fast:>13.4f} {t_pure / t_fast:>7.1f}x"
        print(line)


if __name__ == "__main__":
    main()
