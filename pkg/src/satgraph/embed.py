"""Clique-union containment: does a graph hold K_{p1} + ... + K_{pt}?

The search itself lives in a kernel module.  The compiled one is preferred;
``SATGRAPH_PURE=1`` forces the pure-Python implementation.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .construct import CliquePattern, as_pattern
from .graph import Graph

if os.environ.get("SATGRAPH_PURE"):
    from . import _pykernel as kernel
else:
    try:
        from . import _ckernel as kernel
    except ImportError:  # extension not built
        from . import _pykernel as kernel


def use_kernel(name: str) -> None:
    """Switch implementation at runtime (``"cython"`` or ``"python"``)."""
    global kernel
    if name == "python":
        from . import _pykernel as mod
    elif name == "cython":
        from . import _ckernel as mod
    else:
        raise ValueError(f"unknown kernel {name!r}")
    kernel = mod


def kernel_name() -> str:
    return kernel.NAME


@dataclass(frozen=True)
class Witness:
    """Disjoint cliques, one per pattern entry, in pattern (ascending) order."""

    parts: tuple[tuple[int, ...], ...]

    def to_json(self) -> list[list[int]]:
        return [list(p) for p in self.parts]

    def is_valid(self, g: Graph, pattern: CliquePattern) -> bool:
        if len(self.parts) != pattern.t:
            return False
        seen: set[int] = set()
        for part, size in zip(self.parts, pattern.sizes):
            if len(part) != size or not g.is_clique(part):
                return False
            if any(not 0 <= v < g.n for v in part) or seen.intersection(part):
                return False
            seen.update(part)
        return True


def _to_witness(parts: list[list[int]]) -> Witness:
    # kernel parts come largest-first; report ascending size, ties by least vertex
    ordered = sorted((tuple(sorted(p)) for p in parts), key=lambda p: (len(p), p))
    return Witness(tuple(ordered))


def find_embedding(
    g: Graph,
    pattern: CliquePattern | Iterable[int] | str,
    required_edge: tuple[int, int] | None = None,
) -> Witness | None:
    """Return a witness or ``None``; ``None`` is a proof of absence.

    With ``required_edge=(u, v)`` only witnesses having u and v in the same
    part are considered, and the edge must exist in ``g``.
    """
    pattern = as_pattern(pattern)
    sizes = sorted(pattern.sizes, reverse=True)
    if required_edge is not None:
        u, v = required_edge
        if u == v or not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
            raise ValueError(f"required edge {required_edge} is not an edge of the graph")
        required_edge = (u, v)
    if pattern.order > g.n:
        return None
    parts = kernel.find(g.adj, g.n, sizes, required_edge)
    return None if parts is None else _to_witness(parts)


def contains(g: Graph, pattern: CliquePattern | Iterable[int] | str) -> bool:
    return find_embedding(g, pattern) is not None


def count_embeddings_small(g: Graph, pattern: CliquePattern | Iterable[int] | str) -> int:
    """Number of distinct witnesses (as sets of parts), by plain enumeration.

    Reference oracle for ``find_embedding``; refuses graphs above 12 vertices.
    """
    pattern = as_pattern(pattern)
    if g.n > 12:
        raise ValueError("count_embeddings_small is limited to n <= 12")
    cliques: dict[int, list[int]] = {}
    for s in set(pattern.sizes):
        cliques[s] = [
            sum(1 << v for v in combo)
            for combo in combinations(range(g.n), s)
            if all(g.has_edge(a, b) for a, b in combinations(combo, 2))
        ]
    sizes = pattern.sizes

    def rec(i: int, used: int, prev: int) -> int:
        if i == len(sizes):
            return 1
        # equal-size parts are taken in increasing mask order: one count per multiset
        floor = prev if i > 0 and sizes[i - 1] == sizes[i] else -1
        return sum(rec(i + 1, used | m, m) for m in cliques[sizes[i]] if m > floor and not used & m)

    return rec(0, 0, -1)
