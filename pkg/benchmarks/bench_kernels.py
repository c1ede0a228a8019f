"""Micro-benchmark: pure-Python kernels vs the compiled extension.

Run with ``python benchmarks/bench_kernels.py``.  Each case times one
batch of calls per backend (best of three) on identical seeded inputs.
"""

from __future__ import annotations

import random
import time

from ordtop.kernels import pure

try:
    from ordtop.kernels import _native as native
except ImportError:
    native = None


def closed_relation(rng: random.Random, n: int) -> list[int]:
    rows = [1 << i for i in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j and rng.random() < 0.25:
                rows[i] |= 1 << j
    return pure.transitive_closure(rows)


def best_of(runs: int, fn) -> float:
    best = float("inf")
    for _ in range(runs):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def make_cases():
    rng = random.Random(2024)

    closure_inputs = []
    for _ in range(300):
        n = 20
        rows = [1 << i for i in range(n)]
        for i in range(n):
            for j in range(n):
                if i != j and rng.random() < 0.2:
                    rows[i] |= 1 << j
        closure_inputs.append(rows)

    family_inputs = []
    for _ in range(60):
        ground = (1 << 12) - 1
        family_inputs.append([rng.randrange(ground + 1) for _ in range(8)])

    upset_inputs = [closed_relation(rng, 16) for _ in range(12)]
    scott_inputs = [closed_relation(rng, 11) for _ in range(12)]
    antichain_inputs = [closed_relation(rng, 21) for _ in range(12)]

    return [
        (
            "transitive_closure (n=20, 300 calls)",
            lambda m: [m.transitive_closure(r) for r in closure_inputs],
        ),
        (
            "close_family (12-bit ground, 60 calls)",
            lambda m: [m.close_family(f, (1 << 12) - 1) for f in family_inputs],
        ),
        (
            "up_sets (n=16, 12 calls)",
            lambda m: [m.up_sets(r) for r in upset_inputs],
        ),
        (
            "scott_opens (n=11, 12 calls)",
            lambda m: [m.scott_opens(r) for r in scott_inputs],
        ),
        (
            "max_antichain (n=21, 12 calls)",
            lambda m: [m.max_antichain(r) for r in antichain_inputs],
        ),
    ]


def main() -> None:
    if native is None:
        print("compiled kernels are not built; only timing the pure backend")
    header = f"{'kernel':<42} {'pure':>10} {'native':>10} {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for name, runner in make_cases():
        pure_result = runner(pure)
        pure_time = best_of(3, lambda: runner(pure))
        if native is not None:
            assert runner(native) == pure_result, f"backend mismatch in {name}"
            native_time = best_of(3, lambda: runner(native))
            print(
                f"{name:<42} {pure_time:>9.4f}s {native_time:>9.4f}s "
                f"{pure_time / native_time:>8.1f}x"
            )
        else:
            print(f"{name:<42} {pure_time:>9.4f}s {'-':>10} {'-':>9}")


if __name__ == "__main__":
    main()
