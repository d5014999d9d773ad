"""Slow, obviously-correct reference computations used only by the tests."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations
from math import factorial

from satgraph.graph import Graph


def labeled_graphs(n: int):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [p for k, p in enumerate(pairs) if mask >> k & 1])


def permutation_form(g: Graph) -> tuple:
    """Lexicographically least sorted edge list over all relabelings."""
    best = None
    for perm in permutations(range(g.n)):
        edges = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in g.edges()))
        if best is None or edges < best:
            best = edges
    return best


def isomorphic_by_permutation(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.edge_count() != g2.edge_count():
        return False
    target = set(g2.edges())
    for perm in permutations(range(g1.n)):
        if all(tuple(sorted((perm[u], perm[v]))) in target for u, v in g1.edges()):
            return True
    return False


def class_counts_by_partition(n: int) -> dict[int, int]:
    """Classes per edge count, by partitioning every labeled graph."""
    seen: set[tuple] = set()
    for g in labeled_graphs(n):
        seen.add(permutation_form(g))
    out: dict[int, int] = {}
    for form in seen:
        out[len(form)] = out.get(len(form), 0) + 1
    return out


def class_counts_by_burnside(n: int) -> dict[int, int]:
    """Classes per edge count: average over all permutations of prod over pair-cycles (1 + x^len)."""
    pairs = list(combinations(range(n), 2))
    index = {p: k for k, p in enumerate(pairs)}
    total = [Fraction(0)] * (len(pairs) + 1)
    for perm in permutations(range(n)):
        image = [index[tuple(sorted((perm[u], perm[v])))] for u, v in pairs]
        poly = [1]
        seen = [False] * len(pairs)
        for start in range(len(pairs)):
            if seen[start]:
                continue
            length, k = 0, start
            while not seen[k]:
                seen[k] = True
                k = image[k]
                length += 1
            nxt = poly + [0] * length
            for i, c in enumerate(poly):
                nxt[i + length] += c
            poly = nxt
        for i, c in enumerate(poly):
            total[i] += c
    counts = {}
    for m, c in enumerate(total):
        value = c / factorial(n)
        assert value.denominator == 1
        counts[m] = int(value)
    return counts
