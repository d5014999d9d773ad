from __future__ import annotations

import random

import pytest
from hypothesis import given, settings

from conftest import graphs, patterns, random_graph
from satgraph.construct import build_fixture, build_h
from satgraph.embed import contains, find_embedding
from satgraph.graph import Graph, complete, disjoint_union, empty, join, non_edges, with_edge
from satgraph.saturate import check_saturated, default_workers, delta_diagnostics, is_free, is_saturated


def saturated_by_definition(g, pattern) -> bool:
    """Independent check: free, and every single added edge creates the pattern somewhere."""
    return not contains(g, pattern) and all(contains(with_edge(g, u, v), pattern) for u, v in non_edges(g))


def test_examples(kernel):
    assert is_free(build_h(25, [2, 3, 3]), [2, 3, 3])
    assert not is_free(complete(7), [2, 2])
    assert is_free(build_h(30, [3, 4, 7]), [3, 4, 7])
    assert check_saturated(build_h(25, [2, 3, 3]), [2, 3, 3]).is_saturated
    assert check_saturated(empty(6), [2]).is_saturated
    assert check_saturated(join(complete(1), empty(5)), [2, 2]).is_saturated


def test_fixture_one_report(kernel):
    fx = build_fixture(1)
    g = disjoint_union(fx.graph, empty(10))
    report = check_saturated(g, [2, 2, 4], census=True)
    assert report.is_free and not report.is_saturated
    assert tuple(sorted(fx.probe)) in report.failing_non_edges
    # the reported certificate is the lexicographically first failing pair
    assert report.failing_non_edge == report.failing_non_edges[0]
    assert report.failing_non_edge == (fx.names["u1"], fx.names["v2"])
    assert not contains(with_edge(g, *report.failing_non_edge), [2, 2, 4])


def test_contained_report_carries_witness():
    report = check_saturated(complete(5), [2, 2])
    assert not report.is_free and not report.is_saturated
    assert report.containment_witness.is_valid(complete(5), report.pattern)
    assert report.failing_non_edge is None
    assert report.to_json()["witness"] == [[0, 1], [2, 3]]


def test_report_json_keys():
    report = check_saturated(empty(4), [2, 2], census=True)
    data = report.to_json()
    assert set(data) == {"pattern", "free", "saturated", "witness", "failing_non_edge",
                         "non_edges_checked", "failing_non_edges"}
    assert data["failing_non_edges"] == [list(p) for p in non_edges(empty(4))]


def test_non_edges_checked_counts_up_to_first_failure():
    # star centred at 4 plus isolated 3: (0,1) and (0,2) close triangles, (0,3) does not
    g = Graph.from_edges(5, [(4, 0), (4, 1), (4, 2)])
    report = check_saturated(g, [3])
    assert report.failing_non_edge == (0, 3)
    assert report.non_edges_checked == 3


@pytest.mark.parametrize("workers", [1, 2, 3, 8])
def test_worker_count_does_not_change_answer(workers):
    rng = random.Random(4)
    for _ in range(30):
        g = random_graph(rng.randint(6, 14), rng.uniform(0.1, 0.6), rng)
        for pattern in ([2, 2], [2, 3], [3, 3], [2, 2, 2]):
            base = check_saturated(g, pattern)
            assert check_saturated(g, pattern, workers=workers) == base
            assert check_saturated(g, pattern, census=True, workers=workers) == \
                check_saturated(g, pattern, census=True)


@settings(max_examples=200)
@given(graphs(max_n=10), patterns(max_total=8))
def test_report_invariants(g, pattern):
    report = check_saturated(g, pattern)
    if report.is_saturated:
        assert report.is_free
    if not report.is_free:
        assert report.containment_witness is not None
        assert report.containment_witness.is_valid(g, pattern)
    if report.is_free and not report.is_saturated:
        assert report.failing_non_edge is not None
        assert not contains(with_edge(g, *report.failing_non_edge), pattern)


@settings(max_examples=150)
@given(graphs(max_n=8), patterns(max_total=6))
def test_agrees_with_definition(g, pattern):
    assert is_saturated(g, pattern) == saturated_by_definition(g, pattern)


def test_size_one_parts_need_no_special_case():
    # [1] is contained in every non-empty graph, so nothing non-empty is free
    assert not check_saturated(empty(3), [1]).is_free
    assert check_saturated(empty(0), [1]).is_saturated


def test_default_workers(monkeypatch):
    monkeypatch.delenv("SATGRAPH_THREADS", raising=False)
    assert default_workers() == 1
    monkeypatch.setenv("SATGRAPH_THREADS", "4")
    assert default_workers() == 4


class TestDiagnostics:
    def test_matching_construction(self):
        d = delta_diagnostics(build_h(25, [2, 3, 3]), [2, 3, 3])
        assert d.min_degree == 0 and d.condition_i and d.condition_ii and d.condition_iii
        assert d.applicable

    def test_apex_construction(self):
        d = delta_diagnostics(build_h(40, [3, 4, 4]), [3, 4, 4])
        assert d.min_degree == 1 and d.all_hold
        assert d.applicable is False  # n = 40 is below the threshold 43

    def test_dense_graph_not_applicable(self):
        d = delta_diagnostics(complete(5), [2, 2])
        assert not d.applicable and not d.condition_i

    def test_least_index_vertex(self):
        g = disjoint_union(complete(2), empty(3))
        assert delta_diagnostics(g, [2, 2]).min_degree_vertex == 2

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            delta_diagnostics(empty(0), [2])
        with pytest.raises(ValueError):
            delta_diagnostics(empty(3), [1, 2])

    def test_json(self):
        d = delta_diagnostics(build_h(25, [2, 3, 3]), [2, 3, 3])
        assert d.to_json()["condition_iii"] is True


def test_construction_grid_saturated(kernel):
    for pattern, n in [([2, 3, 3], 25), ([2, 3, 5], 43), ([3, 4, 4], 44), ([2, 2, 2], 12), ([3, 3], 30)]:
        report = check_saturated(build_h(n, pattern), pattern)
        assert report.is_saturated, (pattern, n, report.failing_non_edge)


def test_required_edge_probe_matches_full_search():
    # on a free graph, "witness through uv" and "any witness" coincide for G + uv
    rng = random.Random(12)
    for _ in range(40):
        g = random_graph(rng.randint(5, 11), 0.35, rng)
        for pattern in ([2, 2], [2, 3], [3, 3]):
            if contains(g, pattern):
                continue
            for u, v in non_edges(g):
                h = with_edge(g, u, v)
                assert (find_embedding(h, pattern, required_edge=(u, v)) is None) == (not contains(h, pattern))
