#!/usr/bin/env python3
"""Benchmark the compiled search kernels against the pure-Python fallbacks.

Runs the three hot kernels (m-clique search, exact chromatic number,
minimal-subfamily scan) on seeded random graphs and prints per-kernel
timings and speedups.  Results are checked for equality across backends
while timing.

Usage: python benchmarks/bench_kernels.py [--sizes 16,24,32] [--repeats 3]
"""

import argparse
import random
import sys
import time

try:
    from noetherlab import _kernels_py
    from noetherlab import _speedups
except ImportError as exc:
    sys.exit(f"build the package first (pip install -e .): {exc}")


def random_graph(rng, n, p):
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return adj


def time_call(fn, *args, repeats):
    best = None
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn(*args)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, result


def bench(sizes, repeats, seed):
    rng = random.Random(seed)
    cases = []
    for n in sizes:
        cases.append(("sparse", random_graph(rng, n, 0.25)))
        cases.append(("dense", random_graph(rng, n, 0.6)))
    rows = []
    for label, adj in cases:
        n = len(adj)
        m = max(3, n // 6)
        for name, pure_fn, fast_fn, args in [
            ("find_clique", _kernels_py.find_clique, _speedups.find_clique, (adj, m)),
            ("chromatic", _kernels_py.chromatic_number, _speedups.chromatic_number, (adj,)),
        ]:
            t_py, r_py = time_call(pure_fn, *args, repeats=repeats)
            t_c, r_c = time_call(fast_fn, *args, repeats=repeats)
            assert r_py == r_c, (name, label, n)
            rows.append((name, f"{label} n={n}", t_py, t_c))
        masks = [rng.getrandbits(n) | 1 for _ in range(min(n, 18))]
        full = (1 << n) - 1
        t_py, r_py = time_call(_kernels_py.min_subfamily, masks, full, repeats=repeats)
        t_c, r_c = time_call(_speedups.min_subfamily, masks, full, repeats=repeats)
        assert r_py == r_c
        rows.append(("min_subfamily", f"{label} n={n}", t_py, t_c))
    return rows


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--sizes", default="16,24,32")
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]
    rows = bench(sizes, args.repeats, args.seed)
    width = max(len(r[1]) for r in rows)
    print(f"{'kernel':<14} {'case':<{width}} {'python':>10} {'compiled':>10} {'speedup':>8}")
    for name, case, t_py, t_c in rows:
        speedup = t_py / t_c if t_c > 0 else float("inf")
        print(f"{name:<14} {case:<{width}} {t_py*1e3:>9.2f}ms {t_c*1e3:>9.2f}ms {speedup:>7.1f}x")


if __name__ == "__main__":
    main()
