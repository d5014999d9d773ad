"""Exact saturation numbers by isomorph-free enumeration, and a local-search hunter.

Enumeration is by canonical augmentation over edges: a graph with m edges is
kept as a child of its parent P (m - 1 edges) only when deleting the
canonical edge of the child gives a graph isomorphic to P.  Each class then
has exactly one accepted parent class, so every level is produced without
repeats and without a global seen-set.
"""

from __future__ import annotations

import math
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Iterable, Iterator

from .canon import canonical_form, canonical_labeling
from .construct import CliquePattern, as_pattern, build_h, h_edge_count
from .graph import Graph, decode_graph6, empty, encode_graph6, non_edges, with_edge, without_edge
from .saturate import check_saturated, delta_diagnostics, failing_among

MAX_EXHAUSTIVE_N = 10


class SearchRangeError(ValueError):
    """Requested n is beyond the exhaustive range."""


class DomainError(ValueError):
    """The pattern admits no saturated graph on n vertices."""


def _children(parent_g6: bytes) -> list[bytes]:
    parent = decode_graph6(parent_g6)
    verdict: dict[bytes, bool] = {}
    accepted = []
    for u, v in non_edges(parent):
        child = with_edge(parent, u, v)
        canon = child.relabel(canonical_labeling(child))
        form = encode_graph6(canon)
        if form in verdict:
            continue
        a, b = canon.edges()[-1]
        ok = canonical_form(without_edge(canon, a, b)) == parent_g6
        verdict[form] = ok
        if ok:
            accepted.append(form)
    return accepted


def _children_batch(batch: list[bytes]) -> list[bytes]:
    out = []
    for g6 in batch:
        out.extend(_children(g6))
    return out


def iter_levels(n: int, max_edges: int | None = None, workers: int = 1) -> Iterator[tuple[int, list[bytes]]]:
    """Yield ``(m, forms)`` for m = 0, 1, ...: canonical graph6 of every class with m edges.

    Each level is sorted, so output is independent of ``workers``.
    """
    if n > MAX_EXHAUSTIVE_N:
        raise SearchRangeError(f"n={n} is beyond exhaustive range (max {MAX_EXHAUSTIVE_N})")
    if n < 0:
        raise ValueError("n must be non-negative")
    top = comb(n, 2) if max_edges is None else min(max_edges, comb(n, 2))
    level = [canonical_form(empty(n))]
    m = 0
    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        while True:
            yield m, level
            if m >= top:
                return
            if pool is None:
                nxt = _children_batch(level)
            else:
                step = max(1, -(-len(level) // (workers * 4)))
                batches = [level[i : i + step] for i in range(0, len(level), step)]
                nxt = [f for chunk in pool.map(_children_batch, batches) for f in chunk]
            level = sorted(nxt)
            m += 1
    finally:
        if pool is not None:
            pool.shutdown()


def enumerate_nonisomorphic(
    n: int,
    max_edges: int,
    visitor: Callable[[Graph], object] | None = None,
    workers: int = 1,
) -> int:
    """Call ``visitor`` once per isomorphism class with at most ``max_edges`` edges.

    Graphs are passed in canonical labeling, level by level.  Returns the
    number of classes.
    """
    count = 0
    for _, level in iter_levels(n, max_edges, workers):
        for g6 in level:
            count += 1
            if visitor is not None:
                visitor(decode_graph6(g6))
    return count


@dataclass
class SearchResult:
    n: int
    pattern: CliquePattern
    sat_value: int
    extremal_canonical: list[str]
    graphs_enumerated: int
    elapsed: float = 0.0
    exhaustive: bool = True

    def to_json(self) -> dict:
        # elapsed is reported by the caller so payloads stay reproducible
        return {
            "n": self.n,
            "pattern": list(self.pattern.sizes),
            "sat_value": self.sat_value,
            "extremal_count": len(self.extremal_canonical),
            "extremal_canonical": self.extremal_canonical,
            "graphs_enumerated": self.graphs_enumerated,
            "exhaustive": self.exhaustive,
        }


def _lemma_shape(g: Graph, pattern: CliquePattern) -> bool:
    d = delta_diagnostics(g, pattern)
    return d.condition_i and d.condition_ii


def sat_bruteforce(
    n: int,
    pattern: CliquePattern | Iterable[int] | str,
    *,
    workers: int = 1,
    assume_lemmas: bool = False,
) -> SearchResult:
    """Exact sat(n, pattern) with every extremal class, for n <= 10.

    ``assume_lemmas`` only tests graphs whose minimum-degree vertex already
    has the structure forced at large n; the answer is then NOT exhaustive
    and is flagged as such.
    """
    pattern = as_pattern(pattern)
    if n > MAX_EXHAUSTIVE_N:
        raise SearchRangeError(f"n={n} is beyond exhaustive range (max {MAX_EXHAUSTIVE_N})")
    if pattern.order > n:
        raise DomainError(f"K_n on {n} vertices cannot contain a pattern of order {pattern.order}")
    start = time.perf_counter()
    seen = 0
    for m, level in iter_levels(n, None, workers):
        hits = []
        for g6 in level:
            seen += 1
            g = decode_graph6(g6)
            if assume_lemmas and not _lemma_shape(g, pattern):
                continue
            if check_saturated(g, pattern).is_saturated:
                hits.append(g6.decode())
        if hits:
            return SearchResult(
                n, pattern, m, sorted(hits), seen, time.perf_counter() - start, exhaustive=not assume_lemmas
            )
    raise DomainError(f"no {pattern}-saturated graph exists on {n} vertices")


def extremal_graphs(n: int, pattern: CliquePattern | Iterable[int] | str, **kwargs) -> list[str]:
    return sat_bruteforce(n, pattern, **kwargs).extremal_canonical


@dataclass(frozen=True)
class UniquenessReport:
    unique: bool
    expected: str
    extra: tuple[str, ...] = ()
    missing: tuple[str, ...] = ()

    @property
    def discrepancies(self) -> list[str]:
        return [f"extra {g}" for g in self.extra] + [f"missing {g}" for g in self.missing]

    def __bool__(self) -> bool:
        return self.unique

    def to_json(self) -> dict:
        return {"unique": self.unique, "expected": self.expected, "extra": list(self.extra), "missing": list(self.missing)}


def verify_uniqueness(n: int, pattern: CliquePattern | Iterable[int] | str, **kwargs) -> UniquenessReport:
    """Is H(n; pattern) the one and only extremal graph?"""
    pattern = as_pattern(pattern)
    expected = canonical_form(build_h(n, pattern)).decode()
    found = extremal_graphs(n, pattern, **kwargs)
    extra = tuple(g for g in found if g != expected)
    missing = () if expected in found else (expected,)
    return UniquenessReport(not extra and not missing, expected, extra, missing)


# local search ---------------------------------------------------------------


@dataclass
class HuntResult:
    best_graph: str
    best_edges: int
    target_edges: int
    iterations: int
    seed: int
    accepted_moves: int = 0
    counterexample: bool = field(init=False)

    def __post_init__(self) -> None:
        self.counterexample = self.best_edges < self.target_edges

    def to_json(self) -> dict:
        return {
            "best_graph": self.best_graph,
            "best_edges": self.best_edges,
            "target_edges": self.target_edges,
            "iterations": self.iterations,
            "seed": self.seed,
            "accepted_moves": self.accepted_moves,
            "counterexample": self.counterexample,
        }


INITIAL_UPHILL_ACCEPT = 0.3
COOLING_RATIO = 0.995
COOLING_PERIOD = 100


def _complete(
    g: Graph, pattern: CliquePattern, rng: random.Random, avoid=frozenset(), limit: float = math.inf
) -> Graph | None:
    """Add random failing non-edges to a pattern-free graph until it is saturated.

    Adding a failing non-edge keeps the graph pattern-free, and a non-edge
    that already completes the pattern keeps doing so, so only the shrinking
    failing set is rescanned.  Pairs in ``avoid`` are used only as a last
    resort.  Returns ``None`` once the edge count would exceed ``limit``.
    """
    failing = failing_among(g, pattern, non_edges(g))
    while failing:
        if g.edge_count() + 1 > limit:
            return None
        options = [p for p in failing if p not in avoid] or failing
        e = rng.choice(options)
        g = with_edge(g, *e)
        failing = failing_among(g, pattern, [p for p in failing if p != e])
    return g


def _move(g: Graph, pattern: CliquePattern, rng: random.Random, limit: float = math.inf) -> Graph | None:
    """Drop one or two edges, then repair back to a saturated graph of at most ``limit`` edges."""
    edges = g.edges()
    if not edges:
        return None
    k = 1 if len(edges) < 2 or rng.random() < 0.5 else 2
    removed = set(rng.sample(edges, k))
    cand = g
    for e in sorted(removed):
        cand = without_edge(cand, *e)
    return _complete(cand, pattern, rng, frozenset(removed), limit)


def heuristic_hunt(
    n: int,
    pattern: CliquePattern | Iterable[int] | str,
    budget: int,
    seed: int,
    *,
    progress: bool = False,
) -> HuntResult:
    """Simulated annealing over saturated graphs, started from H(n; pattern).

    If H is pattern-free but not saturated it is first completed to a
    saturated graph; if it contains the pattern a ValueError is raised.

    Looks for saturated graphs with fewer edges than H.  Every state is
    saturated by construction, and the returned graph is checked once more
    from scratch.  Never claims optimality.
    """
    pattern = as_pattern(pattern)
    if not isinstance(budget, int) or isinstance(budget, bool) or budget < 1:
        raise ValueError(f"budget must be a positive integer, got {budget!r}")
    if not isinstance(seed, int) or isinstance(seed, bool) or seed < 0:
        raise ValueError(f"seed must be a non-negative integer, got {seed!r}")
    target = h_edge_count(n, pattern)
    rng = random.Random(seed)
    start = build_h(n, pattern)
    first = check_saturated(start, pattern)
    if not first.is_free:
        raise ValueError(f"H({n}; {pattern}) contains the pattern, so it is no starting point")
    if not first.is_saturated:
        start = _complete(start, pattern, rng)
    temp = 1.0 / math.log(1.0 / INITIAL_UPHILL_ACCEPT)
    cur = best = start
    cur_e = best_e = start.edge_count()
    accepted = 0
    for it in range(budget):
        if it and it % COOLING_PERIOD == 0:
            temp *= COOLING_RATIO
        # Metropolis with the uniform drawn first: the move is accepted iff
        # delta <= -temp * ln(u), so repairs past that bound are cut short.
        u = 1.0 - rng.random()
        cand = _move(cur, pattern, rng, cur_e - temp * math.log(u))
        if cand is not None:
            cur, cur_e = cand, cand.edge_count()
            accepted += 1
            if cur_e < best_e:
                best, best_e = cur, cur_e
        if progress and it % 1000 == 0:
            print(f"hunt it={it} cur={cur_e} best={best_e}", file=sys.stderr)
    final = check_saturated(best, pattern)
    if not final.is_saturated:
        raise RuntimeError("hunt produced a graph that fails re-verification")
    return HuntResult(encode_graph6(best).decode(), best_e, target, budget, seed, accepted)
