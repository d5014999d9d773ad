"""Saturation verdicts with certificates, and minimum-degree diagnostics."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Iterable

from . import embed
from .construct import CliquePattern, ConstructionError, as_pattern, h_edge_count, lemma_threshold
from .embed import Witness, find_embedding
from .graph import Graph, iter_bits, non_edges


@dataclass(frozen=True)
class SaturationReport:
    pattern: CliquePattern
    is_free: bool
    is_saturated: bool
    containment_witness: Witness | None = None
    failing_non_edge: tuple[int, int] | None = None
    non_edges_checked: int = 0
    failing_non_edges: tuple[tuple[int, int], ...] | None = field(default=None)

    def to_json(self) -> dict:
        out = {
            "pattern": list(self.pattern.sizes),
            "free": self.is_free,
            "saturated": self.is_saturated,
            "witness": self.containment_witness.to_json() if self.containment_witness else None,
            "failing_non_edge": list(self.failing_non_edge) if self.failing_non_edge else None,
            "non_edges_checked": self.non_edges_checked,
        }
        if self.failing_non_edges is not None:
            out["failing_non_edges"] = [list(p) for p in self.failing_non_edges]
        return out


def default_workers() -> int:
    env = os.environ.get("SATGRAPH_THREADS")
    if env:
        return max(1, int(env))
    return 1


def is_free(g: Graph, pattern: CliquePattern | Iterable[int] | str) -> bool:
    return find_embedding(g, pattern) is None


def _scan(g: Graph, sizes: list[int], pairs: list[tuple[int, int]], census: bool, workers: int) -> list[int]:
    if workers <= 1 or len(pairs) < 2 * workers:
        return embed.kernel.scan(g.adj, g.n, sizes, pairs, census)
    step = -(-len(pairs) // workers)
    chunks = [(lo, pairs[lo : lo + step]) for lo in range(0, len(pairs), step)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(lambda c: [c[0] + k for k in embed.kernel.scan(g.adj, g.n, sizes, c[1], census)], chunks))
    merged = sorted(k for r in results for k in r)
    return merged if census else merged[:1]


def check_saturated(
    g: Graph,
    pattern: CliquePattern | Iterable[int] | str,
    *,
    census: bool = False,
    workers: int = 1,
) -> SaturationReport:
    """Decide whether ``g`` is pattern-saturated.

    When ``g`` is pattern-free, each non-edge ``uv`` is probed by searching
    ``g + uv`` for an embedding that uses ``uv``; any embedding of ``g + uv``
    must, since ``g`` has none.  The reported failing non-edge is the
    lexicographically first one, whatever the worker count.  ``census``
    collects every failing non-edge instead of stopping at the first.
    """
    pattern = as_pattern(pattern)
    witness = find_embedding(g, pattern)
    if witness is not None:
        return SaturationReport(pattern, False, False, containment_witness=witness)
    pairs = non_edges(g)
    sizes = sorted(pattern.sizes, reverse=True)
    bad = _scan(g, sizes, pairs, census, workers)
    failing = [pairs[k] for k in bad]
    first = failing[0] if failing else None
    checked = bad[0] + 1 if (bad and not census) else len(pairs)
    return SaturationReport(
        pattern,
        True,
        not failing,
        failing_non_edge=first,
        non_edges_checked=checked,
        failing_non_edges=tuple(failing) if census else None,
    )


def failing_among(g: Graph, pattern: CliquePattern | Iterable[int] | str, pairs: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Non-edges from ``pairs`` whose addition creates no copy of the pattern through them.

    Assumes ``g`` is pattern-free; the caller is responsible for that.
    """
    pattern = as_pattern(pattern)
    sizes = sorted(pattern.sizes, reverse=True)
    return [pairs[k] for k in embed.kernel.scan(g.adj, g.n, sizes, pairs, True)]


def is_saturated(g: Graph, pattern: CliquePattern | Iterable[int] | str) -> bool:
    return check_saturated(g, pattern).is_saturated


@dataclass(frozen=True)
class DeltaDiagnostics:
    """Minimum-degree structure checks for a candidate extremal graph.

    For v the least-index vertex of minimum degree and S = N(v):
    ``condition_i``   deg(v) == p1 - 2;
    ``condition_ii``  S is inside N(w) for every w outside S;
    ``condition_iii`` the graph induced off S has at most sum C(p_i + 1, 2), i >= 2, edges.
    ``applicable`` says whether the graph is small enough (e(G) <= e(H)) and n
    large enough for these conditions to be forced on saturated graphs.
    """

    min_degree: int
    min_degree_vertex: int
    condition_i: bool
    condition_ii: bool
    condition_iii: bool
    applicable: bool

    @property
    def all_hold(self) -> bool:
        return self.condition_i and self.condition_ii and self.condition_iii

    def to_json(self) -> dict:
        return {
            "min_degree": self.min_degree,
            "min_degree_vertex": self.min_degree_vertex,
            "condition_i": self.condition_i,
            "condition_ii": self.condition_ii,
            "condition_iii": self.condition_iii,
            "applicable": self.applicable,
        }


def delta_diagnostics(g: Graph, pattern: CliquePattern | Iterable[int] | str) -> DeltaDiagnostics:
    pattern = as_pattern(pattern)
    if g.n < 1:
        raise ValueError("diagnostics need at least one vertex")
    p1 = pattern.sizes[0]
    if p1 < 2:
        raise ValueError("diagnostics need the smallest clique order to be >= 2")
    degs = g.degrees()
    delta = min(degs)
    v = degs.index(delta)
    s_mask = g.adj[v]
    outside = g.vertex_mask() & ~s_mask
    cond_ii = all(g.adj[w] & s_mask == s_mask for w in iter_bits(outside))
    bound = sum(comb(p + 1, 2) for p in pattern.sizes[1:])
    cond_iii = g.induced_edge_count(outside) <= bound
    try:
        small = g.edge_count() <= h_edge_count(g.n, pattern)
    except ConstructionError:
        small = False
    applicable = small and g.n > lemma_threshold(pattern)
    return DeltaDiagnostics(delta, v, delta == p1 - 2, cond_ii, cond_iii, applicable)
