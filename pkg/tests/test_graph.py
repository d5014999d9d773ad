from __future__ import annotations

import random
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs, random_graph
from satgraph.graph import (
    MAX_VERTICES,
    CapacityError,
    Graph,
    Graph6Error,
    complete,
    decode_graph6,
    disjoint_union,
    empty,
    encode_graph6,
    join,
    non_edges,
    read_graph6_lines,
    with_edge,
    without_edge,
    write_graph6_lines,
)


def assert_well_formed(g: Graph) -> None:
    for u in range(g.n):
        assert not g.adj[u] >> u & 1
        assert g.adj[u] >> g.n == 0
        for v in g.neighbors(u):
            assert g.has_edge(v, u)
    assert sum(g.degrees()) % 2 == 0


class TestConstructors:
    def test_complete_small(self):
        assert complete(0).n == 0 and complete(0).edge_count() == 0
        assert complete(3).edge_count() == 3
        assert complete(12).edge_count() == 66

    def test_empty(self):
        assert empty(0).n == 0
        g = empty(7)
        assert g.n == 7 and g.edge_count() == 0

    def test_join_with_k0_is_identity(self):
        assert join(complete(0), empty(7)) == empty(7)
        g = complete(4)
        assert join(empty(0), g) == g

    def test_union_examples(self):
        g = disjoint_union(complete(3), empty(4))
        assert (g.n, g.edge_count()) == (7, 3)
        assert disjoint_union(empty(0), complete(5)) == complete(5)
        assert disjoint_union(complete(2), complete(3)).edge_count() == 4

    def test_join_examples(self):
        star = join(complete(1), empty(5))
        assert star.edge_count() == 5 and star.degree(0) == 5
        assert join(complete(2), complete(3)) == complete(5)

    @given(graphs(max_n=8), graphs(max_n=8))
    def test_edge_count_identities(self, g1, g2):
        u = disjoint_union(g1, g2)
        j = join(g1, g2)
        assert u.edge_count() == g1.edge_count() + g2.edge_count()
        assert j.edge_count() == g1.edge_count() + g2.edge_count() + g1.n * g2.n
        assert_well_formed(u)
        assert_well_formed(j)


class TestValidation:
    def test_rejects_asymmetric_rows(self):
        with pytest.raises(ValueError):
            Graph(2, [0b10, 0])

    def test_rejects_loops(self):
        with pytest.raises(ValueError):
            Graph(2, [0b1, 0])

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            Graph(2, [0b100, 0])

    def test_capacity(self):
        assert empty(MAX_VERTICES).n == MAX_VERTICES
        with pytest.raises(CapacityError):
            empty(MAX_VERTICES + 1)


class TestEdits:
    def test_with_edge(self):
        assert with_edge(empty(2), 0, 1) == complete(2)
        assert with_edge(complete(3), 0, 1) == complete(3)

    def test_copy_semantics(self):
        g = empty(4)
        h = with_edge(g, 1, 3)
        assert g.edge_count() == 0 and h.edge_count() == 1
        assert without_edge(h, 3, 1) == g

    @given(graphs(min_n=2, max_n=9), st.data())
    def test_edits_keep_invariants(self, g, data):
        u = data.draw(st.integers(0, g.n - 1))
        v = data.draw(st.integers(0, g.n - 1).filter(lambda x: x != u))
        assert_well_formed(with_edge(g, u, v))
        assert_well_formed(without_edge(g, u, v))

    def test_bad_pair(self):
        with pytest.raises(ValueError):
            with_edge(empty(3), 1, 1)
        with pytest.raises(ValueError):
            with_edge(empty(3), 0, 3)


class TestNonEdges:
    def test_examples(self):
        assert non_edges(complete(4)) == []
        assert non_edges(empty(3)) == [(0, 1), (0, 2), (1, 2)]
        assert len(non_edges(disjoint_union(complete(3), empty(4)))) == comb(7, 2) - 3

    @given(graphs(max_n=10))
    def test_lex_and_complementary(self, g):
        pairs = non_edges(g)
        assert pairs == sorted(pairs)
        assert len(pairs) + g.edge_count() == comb(g.n, 2)
        assert not any(g.has_edge(u, v) for u, v in pairs)


class TestGraph6:
    def test_known_encodings(self):
        assert encode_graph6(complete(3)) == b"Bw"
        assert encode_graph6(empty(2)) == b"A?"
        assert decode_graph6("Bw") == complete(3)

    def test_round_trip_random(self):
        rng = random.Random(0)
        for _ in range(1000):
            g = random_graph(rng.randint(0, 20), rng.random(), rng)
            assert decode_graph6(encode_graph6(g)) == g

    @pytest.mark.parametrize("n", [0, 1, 62, 63, 258])
    def test_round_trip_boundaries(self, n):
        rng = random.Random(n)
        g = random_graph(n, 0.1, rng)
        data = encode_graph6(g)
        assert (data[0] == 126) == (n >= 63)
        assert decode_graph6(data) == g

    def test_max_capacity_round_trip(self):
        g = with_edge(empty(MAX_VERTICES), 0, MAX_VERTICES - 1)
        assert decode_graph6(encode_graph6(g)) == g

    def test_header_and_newline_tolerated(self):
        assert decode_graph6(b">>graph6<<Bw\n") == complete(3)

    @pytest.mark.parametrize(
        "data, offset",
        [
            (b"", 0),
            (b"B!", 1),
            (b"Bww", 2),
            (b"B", 1),
            (b"Bx", 1),  # padding bits set
            (b"~~??????", 1),  # 36-bit header
        ],
    )
    def test_errors_report_offset(self, data, offset):
        with pytest.raises(Graph6Error) as info:
            decode_graph6(data)
        assert info.value.offset == offset

    def test_document_offsets_are_absolute(self):
        with pytest.raises(Graph6Error) as info:
            read_graph6_lines(b"Bw\nB!\n")
        assert info.value.offset == 4

    def test_lines_round_trip(self):
        gs = [complete(3), empty(5), join(complete(1), empty(4))]
        assert read_graph6_lines(write_graph6_lines(gs)) == gs

    @settings(max_examples=50)
    @given(graphs(max_n=12))
    def test_relabel_preserves_structure(self, g):
        perm = list(reversed(range(g.n)))
        h = g.relabel(perm)
        assert h.edge_count() == g.edge_count()
        assert sorted(h.degrees()) == sorted(g.degrees())
        assert all(h.has_edge(perm[u], perm[v]) for u, v in g.edges())
