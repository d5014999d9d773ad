"""Self-check suite: constructions, formulas and fixtures against the library's own checkers.

Each check is independent and reports a short tag naming the claim it tests.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Callable, Iterator

from .construct import (
    FIXTURE_PATTERN,
    CliquePattern,
    build_fixture,
    build_h,
    h_edge_count,
    lemma_threshold,
    min_order,
    predicted_sat,
)
from .embed import contains, find_embedding
from .graph import disjoint_union, empty, with_edge
from .saturate import check_saturated, delta_diagnostics

SCALE_PATTERNS = (
    CliquePattern((2, 3, 3)),
    CliquePattern((3, 4, 4)),
    CliquePattern((2, 3, 3, 3)),
    CliquePattern((3, 5, 5)),
)
SCALE_OFFSETS = (1, 2, 5)
DICHOTOMY_TRIPLES = ((2, 3, 5), (2, 3, 4), (3, 4, 7), (3, 4, 6), (4, 5, 9), (4, 5, 8))
DICHOTOMY_CAP = 60
FIXTURE_PAD_N = 12
SUITES = ("core", "fixtures", "all")


@dataclass
class Check:
    name: str
    tag: str
    passed: bool
    detail: dict = field(default_factory=dict)

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name}  [{self.tag}]"

    def to_json(self) -> dict:
        return {"name": self.name, "tag": self.tag, "passed": self.passed, "detail": self.detail}


def identity_patterns(p1: int, max_t: int = 4, max_size: int = 11) -> list[CliquePattern]:
    out = []
    for t in range(1, max_t + 1):
        for rest in combinations_with_replacement(range(p1, max_size + 1), t - 1):
            out.append(CliquePattern((p1, *rest)))
    return out


def _identity(p1: int, max_n: int) -> Check:
    cases = mismatches = 0
    for pattern in identity_patterns(p1):
        for n in range(min_order(pattern), max_n + 1):
            cases += 1
            if build_h(n, pattern).edge_count() != h_edge_count(n, pattern):
                mismatches += 1
    return Check(f"edge-count identity p1={p1} n<={max_n}", "construction-edge-count", mismatches == 0,
                 {"cases": cases, "mismatches": mismatches})


def scale_points(max_n: int) -> Iterator[tuple[CliquePattern, int]]:
    for pattern in SCALE_PATTERNS:
        for off in SCALE_OFFSETS:
            n = lemma_threshold(pattern) + off
            if n <= max_n:
                yield pattern, n


def _saturation(pattern: CliquePattern, n: int, workers: int) -> Check:
    report = check_saturated(build_h(n, pattern), pattern, workers=workers)
    return Check(f"saturated H({n}; {pattern})", "construction-saturated", report.is_saturated,
                 {"failing_non_edge": report.failing_non_edge and list(report.failing_non_edge)})


def _formula(pattern: CliquePattern, n: int) -> Check:
    verdict = predicted_sat(n, pattern)
    ok = verdict.covered and verdict.threshold_met is not False and verdict.value == h_edge_count(n, pattern)
    return Check(f"formula = e(H) for {pattern} n={n}", "formula-matches-construction", bool(ok),
                 {"predicted": verdict.to_dict(), "h_edges": h_edge_count(n, pattern)})


def _diagnostics(pattern: CliquePattern, n: int) -> Check:
    d = delta_diagnostics(build_h(n, pattern), pattern)
    return Check(f"min-degree structure of H({n}; {pattern})", "min-degree-structure", d.applicable and d.all_hold,
                 d.to_json())


def dichotomy_n(p: int, q: int, r: int, cap: int) -> tuple[int, bool]:
    """Test order for the triple and whether it had to be capped below the formula threshold."""
    n = 3 * (p - 2) + q * (q + 1) + r * (r + 1) + 1
    return (n, False) if n <= cap else (cap, True)


def _dichotomy(p: int, q: int, r: int, cap: int) -> Check | None:
    pattern = CliquePattern((p, q, r))
    n, capped = dichotomy_n(p, q, r, cap)
    if n < min_order(pattern):
        return None
    h = build_h(n, pattern)
    expect = r >= p + q
    free = not contains(h, pattern)
    sat = check_saturated(h, pattern).is_saturated
    return Check(f"K_{p}+K_{q}+K_{r} on H({n}): saturated iff r >= p+q", "three-clique-dichotomy",
                 free == expect and sat == expect,
                 {"n": n, "capped": capped, "free": free, "saturated": sat, "expected": expect})


def fixture_check(k: int) -> Check:
    fx = build_fixture(k)
    g = disjoint_union(fx.graph, empty(FIXTURE_PAD_N - fx.graph.n))
    free = find_embedding(g, FIXTURE_PATTERN) is None
    probed = find_embedding(with_edge(g, *fx.probe), FIXTURE_PATTERN, required_edge=fx.probe)
    report = check_saturated(g, FIXTURE_PATTERN, census=True)
    in_census = tuple(sorted(fx.probe)) in report.failing_non_edges
    return Check(f"fixture F{k} probe {'-'.join(fx.probe_names())}", "near-miss-fixture",
                 free and probed is None and in_census,
                 {"edges": fx.graph.edge_count(), "free": free, "probe_blocked": probed is None,
                  "first_failing": report.failing_non_edge and list(report.failing_non_edge)})


def iter_checks(suite: str = "all", max_n: int = 70, workers: int = 1) -> Iterator[Check]:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}, expected one of {SUITES}")
    if suite in ("core", "all"):
        for p1 in (2, 3, 4):
            yield _identity(p1, max_n)
        for pattern, n in scale_points(max_n):
            yield _saturation(pattern, n, workers)
            yield _formula(pattern, n)
            yield _diagnostics(pattern, n)
        for p, q, r in DICHOTOMY_TRIPLES:
            check = _dichotomy(p, q, r, min(DICHOTOMY_CAP, max_n))
            if check is not None:
                yield check
    if suite in ("fixtures", "all"):
        for k in range(1, 6):
            yield fixture_check(k)


def run_suite(suite: str = "all", max_n: int = 70, workers: int = 1,
              on_check: Callable[[Check], None] | None = None) -> list[Check]:
    out = []
    for check in iter_checks(suite, max_n, workers):
        if on_check is not None:
            on_check(check)
        out.append(check)
    return out
