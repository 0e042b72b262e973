#!/usr/bin/env python3
"""Benchmark the compiled chip-firing kernel against the pure-Python twin.

Times the hot operations on realistic workloads:

  reduce-heap   q-reduce a one-vertex chip heap from every start vertex
  reduce-flat   q-reduce placement divisors (one chip off an independent set)
  rank-check    full positive-rank test of a gonality witness

Usage:
    python benchmarks/bench_backends.py [--repeat 3]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from gonq import indep_divisor, max_independent_sets, queen_graph, toroidal_queen_graph
from gonq.backend import available_backends


def bench_reduce_heap(kernel, g, heap):
    indptr, indices = g.csr()
    for q in range(g.vertex_count):
        kernel.qreduce(indptr, indices, heap, q)


def bench_reduce_flat(kernel, g, divisors):
    indptr, indices = g.csr()
    for vals in divisors:
        for q in range(0, g.vertex_count, 4):
            kernel.qreduce(indptr, indices, vals, q)


def bench_rank_check(kernel, g, witness):
    indptr, indices = g.csr()
    for q in range(g.vertex_count):
        reduced, _ = kernel.qreduce(indptr, indices, witness, q)
        assert reduced[q] >= 1


def build_workloads():
    q88 = queen_graph(8, 8)
    tq66 = toroidal_queen_graph(6, 6)
    _, sets88 = max_independent_sets(q88)
    witness = indep_divisor(q88, sets88[0]).values
    flats = [indep_divisor(q88, s).values for s in sets88[:24]]
    heap = np.zeros(36, dtype=np.int64)
    heap[0] = 120
    return [
        ("reduce-heap TQ6x6 (120 chips)", bench_reduce_heap, (tq66, heap)),
        ("reduce-flat Q8x8 (24 divisors)", bench_reduce_flat, (q88, flats)),
        ("rank-check Q8x8 witness", bench_rank_check, (q88, witness)),
    ]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3, help="best-of repetitions")
    args = parser.parse_args()

    kernels = available_backends()
    if "cython" not in kernels:
        print("compiled kernel not built; timing the pure-Python kernel alone")

    results: dict[str, dict[str, float]] = {}
    for label, fn, fn_args in build_workloads():
        results[label] = {}
        for name, kernel in kernels.items():
            best = min(
                _timed(fn, kernel, fn_args) for _ in range(max(1, args.repeat))
            )
            results[label][name] = best

    width = max(len(label) for label in results) + 2
    header = f"{'workload':<{width}}" + "".join(f"{name:>12}" for name in kernels)
    if len(kernels) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for label, times in results.items():
        row = f"{label:<{width}}" + "".join(f"{times[name] * 1e3:>10.1f}ms" for name in kernels)
        if len(kernels) == 2:
            row += f"{times['python'] / times['cython']:>9.1f}x"
        print(row)


def _timed(fn, kernel, fn_args) -> float:
    t0 = time.perf_counter()
    fn(kernel, *fn_args)
    return time.perf_counter() - t0


if __name__ == "__main__":
    main()
