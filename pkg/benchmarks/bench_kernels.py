"""Compare the compiled and pure-Python search kernels on the same workloads.

    python benchmarks/bench_kernels.py [--repeat 3] [--quick]

Prints one row per workload with the best-of-N time for each kernel and the
speedup.  Both kernels must agree on every verdict, or the script exits 1.
"""

from __future__ import annotations

import argparse
import random
import sys
import time

from satgraph import embed
from satgraph.construct import build_fixture, build_h
from satgraph.graph import Graph, disjoint_union, empty
from satgraph.saturate import check_saturated


def _random_graph(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def workloads(quick: bool):
    yield "saturate H(25; 2,3,3)", lambda: check_saturated(build_h(25, "2,3,3"), "2,3,3").is_saturated
    yield "saturate H(37; 2,3,3,3)", lambda: check_saturated(build_h(37, "2,3,3,3"), "2,3,3,3").is_saturated
    if not quick:
        yield "saturate H(44; 3,4,4)", lambda: check_saturated(build_h(44, "3,4,4"), "3,4,4").is_saturated
        yield "saturate H(60; 4,5,9)", lambda: check_saturated(build_h(60, "4,5,9"), "4,5,9").is_saturated
    fx = build_fixture(1)
    padded = disjoint_union(fx.graph, empty(5))
    yield "census F1 + I5", lambda: len(check_saturated(padded, "2,2,4", census=True).failing_non_edges)
    graphs = [_random_graph(40, 0.3, s) for s in range(10 if quick else 40)]
    yield "contains 3,4,5 on G(40, .3)", lambda: tuple(embed.contains(g, "3,4,5") for g in graphs)


def best_of(fn, repeat: int):
    best, out = float("inf"), None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true")
    args = ap.parse_args(argv)
    try:
        embed.use_kernel("cython")
    except ImportError:
        print("compiled kernel not built; nothing to compare", file=sys.stderr)
        return 1
    print(f"{'workload':32} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    ok = True
    for name, fn in workloads(args.quick):
        embed.use_kernel("python")
        t_py, r_py = best_of(fn, args.repeat)
        embed.use_kernel("cython")
        t_c, r_c = best_of(fn, args.repeat)
        agree = r_py == r_c
        ok &= agree
        print(f"{name:32} {t_py:10.4f} {t_c:10.4f} {t_py / t_c:7.1f}x{'' if agree else '  MISMATCH'}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
