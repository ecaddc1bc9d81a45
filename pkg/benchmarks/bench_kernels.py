#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Times the four hot kernels (independence number, maximum-set enumeration,
maximal-set enumeration, maximum matching) on a deterministic battery of
random graphs and prints per-kernel speedups.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

from corecorona._kernels import pure
from corecorona.graphs import erdos_renyi
from corecorona.harness import derive_seed

try:
    from corecorona._kernels import _bitkernels as compiled
except ImportError:
    compiled = None


def battery():
    graphs = []
    for n in (12, 16, 20, 24):
        for p in (0.2, 0.5, 0.8):
            for i in range(4):
                graphs.append(erdos_renyi(n, p, derive_seed("bench", n, p, i)))
    return graphs


def time_kernel(fn, graphs, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for g in graphs:
            fn(g)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    graphs = battery()
    alphas = {g: pure.independence_number(g.adj, (1 << g.n) - 1) for g in graphs}
    cap = 10**6

    kernels = {
        "independence_number": lambda mod: (
            lambda g: mod.independence_number(g.adj, (1 << g.n) - 1)
        ),
        "maximum_sets": lambda mod: (
            lambda g: mod.maximum_independent_sets(g.adj, (1 << g.n) - 1, alphas[g], cap)
        ),
        "maximal_sets": lambda mod: (
            lambda g: mod.maximal_independent_sets(g.adj, (1 << g.n) - 1, cap)
        ),
        "matching_number": lambda mod: (lambda g: mod.matching_number(g.adj)),
    }

    print(f"battery: {len(graphs)} graphs (n in 12..24), best of {args.repeat} runs")
    header = f"{'kernel':<22}{'pure (s)':>12}"
    if compiled is not None:
        header += f"{'compiled (s)':>14}{'speedup':>10}"
    print(header)
    for name, make in kernels.items():
        t_pure = time_kernel(make(pure), graphs, args.repeat)
        line = f"{name:<22}{t_pure:>12.4f}"
        if compiled is not None:
            t_comp = time_kernel(make(compiled), graphs, args.repeat)
            line += f"{t_comp:>14.4f}{t_pure / t_comp:>10.1f}x"
        print(line)
    if compiled is None:
        print("compiled kernels unavailable; showing pure timings only")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
