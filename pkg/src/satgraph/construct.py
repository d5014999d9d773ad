"""Clique-union patterns, the H(n; p1, ..., pt) construction and the sat registry."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Iterable

from .graph import MAX_VERTICES, Graph, complete, disjoint_union, empty, join, union_all


class ConstructionError(ValueError):
    """Parameters do not admit the requested construction."""


@dataclass(frozen=True)
class CliquePattern:
    """The target graph K_{p1} + ... + K_{pt}; sizes are kept ascending."""

    sizes: tuple[int, ...]

    def __init__(self, sizes: Iterable[int]) -> None:
        ordered = tuple(sorted(int(s) for s in sizes))
        if not ordered:
            raise ValueError("a pattern needs at least one clique")
        if ordered[0] < 1:
            raise ValueError(f"clique orders must be >= 1, got {ordered[0]}")
        if sum(ordered) > MAX_VERTICES:
            raise ValueError(f"pattern order {sum(ordered)} exceeds {MAX_VERTICES}")
        object.__setattr__(self, "sizes", ordered)

    @classmethod
    def parse(cls, text: str) -> CliquePattern:
        """Parse ``"p1,p2,...,pt"`` in any order."""
        parts = [p.strip() for p in text.split(",")]
        if not parts or any(not p.isdigit() for p in parts):
            raise ValueError(f"bad pattern {text!r}: expected comma-separated positive integers")
        return cls(int(p) for p in parts)

    @property
    def t(self) -> int:
        return len(self.sizes)

    @property
    def order(self) -> int:
        return sum(self.sizes)

    def __str__(self) -> str:
        return ",".join(map(str, self.sizes))

    def __iter__(self):
        return iter(self.sizes)

    def __len__(self) -> int:
        return len(self.sizes)


def as_pattern(pattern: CliquePattern | Iterable[int] | str) -> CliquePattern:
    if isinstance(pattern, CliquePattern):
        return pattern
    if isinstance(pattern, str):
        return CliquePattern.parse(pattern)
    return CliquePattern(pattern)


def min_order(pattern: CliquePattern) -> int:
    """Smallest n for which H(n; pattern) exists."""
    return pattern.order + pattern.t - 3


def _check_h(n: int, pattern: CliquePattern) -> None:
    if pattern.sizes[0] < 2:
        raise ConstructionError(f"H(n; {pattern}) needs every clique order >= 2")
    low = min_order(pattern)
    if n < low:
        raise ConstructionError(f"n below minimum {low} for H(n; {pattern})")
    if n > MAX_VERTICES:
        raise ConstructionError(f"n={n} exceeds capacity {MAX_VERTICES}")


def build_h(n: int, pattern: CliquePattern | Iterable[int] | str) -> Graph:
    """K_{p1-2} joined to (K_{p2+1} + ... + K_{pt+1} + I_rest).

    Vertex layout: apex clique, then the cliques in ascending order, then the
    isolated vertices.
    """
    pattern = as_pattern(pattern)
    _check_h(n, pattern)
    apex = complete(pattern.sizes[0] - 2)
    body = union_all([complete(p + 1) for p in pattern.sizes[1:]])
    body = disjoint_union(body, empty(n - min_order(pattern)))
    return join(apex, body)


def h_edge_count(n: int, pattern: CliquePattern | Iterable[int] | str) -> int:
    """Closed-form edge count of H(n; pattern)."""
    pattern = as_pattern(pattern)
    _check_h(n, pattern)
    p1 = pattern.sizes[0]
    return (p1 - 2) * (n - p1 + 2) + comb(p1 - 2, 2) + sum(comb(p + 1, 2) for p in pattern.sizes[1:])


# registry -------------------------------------------------------------------


@dataclass(frozen=True)
class FormulaVerdict:
    """Outcome of looking a pattern up in the registry of known sat formulas.

    ``value`` is ``None`` when no formula covers the pattern.  ``threshold`` is
    the n-condition attached to the formula as published (``"unknown"`` when
    none is stated); ``threshold_met`` is ``None`` in that case.
    """

    value: int | None
    source: str | None
    threshold: str
    threshold_met: bool | None = None
    covered: bool = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "covered", self.value is not None)
        if self.value is not None and not self.source:
            raise ValueError("a covered verdict needs a source")

    def to_dict(self) -> dict:
        return {
            "value": self.value if self.covered else "not-covered",
            "source": self.source,
            "valid_n_threshold": self.threshold,
            "threshold_met": self.threshold_met,
        }


NOT_COVERED = FormulaVerdict(None, None, "unknown")


def _apex_part(n: int, p: int) -> int:
    return (p - 2) * (n - p + 2) + comb(p - 2, 2)


def predicted_sat(n: int, pattern: CliquePattern | Iterable[int] | str) -> FormulaVerdict:
    """Known closed form for sat(n, pattern), if any.

    Lookup order: single clique; tK_2; tK_p; K_p + (t-1)K_q with p < q and
    t >= 3; K_p + K_q; K_p + K_q + K_r with r >= p + q.  Values are reported
    for every n; callers compare against ``threshold`` themselves.
    """
    pattern = as_pattern(pattern)
    sizes = pattern.sizes
    t = pattern.t
    if sizes[0] < 2:
        return NOT_COVERED
    p = sizes[0]

    if t == 1:
        return FormulaVerdict(_apex_part(n, p), "K_r (Erdos-Hajnal-Moon)", "unknown")

    if all(s == 2 for s in sizes):
        bound = 3 * t - 3
        return FormulaVerdict(3 * t - 3, "tK_2 (Kaszonyi-Tuza)", f"n >= {bound}", n >= bound)

    if all(s == p for s in sizes):
        bound = t * p * (p + 1) - p * p + 2 * p - 6
        return FormulaVerdict(
            _apex_part(n, p) + (t - 1) * comb(p + 1, 2),
            "tK_p (Faudree-Ferrara-Gould-Jacobson)",
            f"n >= {bound}",
            n >= bound,
        )

    q = sizes[1]
    if t >= 3 and p < q and all(s == q for s in sizes[1:]):
        bound = q * (q + 1) * (t - 1) + 3 * (p - 2)
        return FormulaVerdict(
            _apex_part(n, p) + (t - 1) * comb(q + 1, 2),
            "K_p + (t-1)K_q, 2 <= p < q, t >= 3",
            f"n > {bound}",
            n > bound,
        )

    if t == 2:
        return FormulaVerdict(
            _apex_part(n, p) + comb(q + 1, 2),
            "K_p + K_q (Faudree-Ferrara-Gould-Jacobson)",
            "unknown",
        )

    if t == 3:
        r = sizes[2]
        if r >= p + q:
            bound = 3 * (p - 2) + q * (q + 1) + r * (r + 1)
            return FormulaVerdict(
                _apex_part(n, p) + comb(q + 1, 2) + comb(r + 1, 2),
                "K_p + K_q + K_r, r >= p + q",
                f"n > {bound}",
                n > bound,
            )

    return NOT_COVERED


def lemma_threshold(pattern: CliquePattern) -> int:
    """n must exceed this for the minimum-degree structure of small saturated graphs to be forced."""
    p1 = pattern.sizes[0]
    return 3 * (p1 - 2) + sum(p * (p + 1) for p in pattern.sizes[1:])


# fixtures -------------------------------------------------------------------


@dataclass(frozen=True)
class Fixture:
    """One of the five 13-edge near-miss graphs for K_2 + K_2 + K_4."""

    index: int
    graph: Graph
    names: dict[str, int]
    probe: tuple[int, int]

    def probe_names(self) -> tuple[str, str]:
        inv = {v: k for k, v in self.names.items()}
        return inv[self.probe[0]], inv[self.probe[1]]


# extra edges on top of K_2 on {u1,u2} plus K_4 on {v1..v4}
_FIXTURE_EDGES = {
    1: (("x", "y"), [("x", "v2"), ("u2", "v3"), ("u2", "v4"), ("y", "u2"), ("y", "v3"), ("y", "v4")], ("x", "v1")),
    2: (("x", "y"), [("u2", "v2"), ("u2", "v3"), ("x", "v1"), ("y", "u2"), ("y", "v2"), ("y", "v3")], ("u1", "v1")),
    3: (("x",), [("u1", "v3"), ("u1", "v4"), ("u2", "v2"), ("u2", "v3"), ("u2", "v4"), ("x", "v1")], ("u1", "v1")),
    4: (("x",), [("u1", "v3"), ("u2", "v1"), ("u2", "v2"), ("u2", "v3"), ("u2", "v4"), ("x", "v1")], ("u1", "v1")),
    5: (("y",), [("u2", "v1"), ("u2", "v3"), ("u2", "v4"), ("y", "v2"), ("y", "v3"), ("y", "v4")], ("u1", "v1")),
}

FIXTURE_PATTERN = CliquePattern((2, 2, 4))


def build_fixture(k: int) -> Fixture:
    """Fixture F_k, k in 1..5, with its named vertices and probe non-edge."""
    if k not in _FIXTURE_EDGES:
        raise ValueError(f"fixture index must be in 1..5, got {k}")
    extra_names, extra_edges, probe = _FIXTURE_EDGES[k]
    order = ["u1", "u2", "v1", "v2", "v3", "v4", *extra_names]
    names = {name: i for i, name in enumerate(order)}
    base = [("u1", "u2")] + [(f"v{a}", f"v{b}") for a in range(1, 5) for b in range(a + 1, 5)]
    edges = [(names[a], names[b]) for a, b in base + extra_edges]
    g = Graph.from_edges(len(order), edges)
    return Fixture(k, g, names, (names[probe[0]], names[probe[1]]))
