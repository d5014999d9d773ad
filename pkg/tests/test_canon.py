from __future__ import annotations

import random

import pytest
from hypothesis import given, settings

from conftest import graphs, random_graph, random_permutation
from oracles import isomorphic_by_permutation, labeled_graphs, permutation_form
from satgraph.canon import (
    are_isomorphic,
    canonical_form,
    canonical_form_bruteforce,
    canonical_graph,
    canonical_labeling,
)
from satgraph.construct import build_h
from satgraph.graph import Graph, complete, decode_graph6, disjoint_union, empty, join


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def test_paths_match():
    a = Graph.from_edges(3, [(0, 1), (1, 2)])
    b = Graph.from_edges(3, [(1, 0), (0, 2)])
    assert canonical_form(a) == canonical_form(b)


def test_degree_sequence_separates():
    tri = disjoint_union(complete(3), empty(1))
    star = join(complete(1), empty(3))
    assert canonical_form(tri) != canonical_form(star)


def test_eleven_classes_on_four_vertices():
    forms = {canonical_form(g) for g in labeled_graphs(4)}
    oracle = {permutation_form(g) for g in labeled_graphs(4)}
    assert len(forms) == len(oracle) == 11


def test_partition_matches_oracle_on_five_vertices():
    by_form: dict[bytes, set] = {}
    for g in labeled_graphs(5):
        by_form.setdefault(canonical_form(g), set()).add(permutation_form(g))
    assert len(by_form) == 34
    assert all(len(v) == 1 for v in by_form.values())


def test_are_isomorphic_examples():
    assert not are_isomorphic(cycle(4), disjoint_union(complete(2), complete(2)))
    assert are_isomorphic(cycle(5), cycle(5).complement())
    plain = disjoint_union(complete(3), empty(7))
    assert are_isomorphic(build_h(10, [2, 2]), plain)


def test_agrees_with_permutation_oracle():
    rng = random.Random(7)
    for _ in range(2000):
        n = rng.randint(1, 7)
        p = rng.random()
        g1 = random_graph(n, p, rng)
        # half the pairs are relabelings, so both verdicts are exercised
        if rng.random() < 0.5:
            g2 = g1.relabel(random_permutation(n, rng))
        else:
            g2 = random_graph(n, p, rng)
        assert are_isomorphic(g1, g2) == isomorphic_by_permutation(g1, g2)


def test_invariant_under_relabeling():
    rng = random.Random(11)
    for _ in range(100):
        g = random_graph(rng.randint(0, 16), rng.random(), rng)
        form = canonical_form(g)
        for _ in range(100):
            assert canonical_form(g.relabel(random_permutation(g.n, rng))) == form


@settings(max_examples=60)
@given(graphs(max_n=7))
def test_bruteforce_form_is_an_isomorphism_invariant(g):
    form = canonical_form(g)
    brute = canonical_form_bruteforce(g)
    h = decode_graph6(form)
    assert canonical_form_bruteforce(h) == brute


@settings(max_examples=60)
@given(graphs(max_n=12))
def test_labeling_is_a_permutation(g):
    lab = canonical_labeling(g)
    assert sorted(lab) == list(range(g.n))
    assert canonical_graph(g) == g.relabel(lab)
    assert canonical_form(g) == canonical_form(canonical_graph(g))


@pytest.mark.parametrize("k", [20, 60])
def test_highly_symmetric_graphs(k):
    assert canonical_form(complete(k)) == canonical_form(complete(k).relabel(list(reversed(range(k)))))
    g = disjoint_union(complete(k // 2), complete(k // 2))
    h = join(empty(k // 2), empty(k // 2))
    assert not are_isomorphic(g, h)
    assert are_isomorphic(g.complement(), h)


def test_strongly_regular_pair_separated():
    # Shrikhande graph vs the 4x4 rook graph: same parameters, not isomorphic
    rook = Graph.from_edges(16, [(a, b) for a in range(16) for b in range(a + 1, 16)
                                 if a // 4 == b // 4 or a % 4 == b % 4])
    shrik_edges = []
    for a in range(16):
        i, j = divmod(a, 4)
        for di, dj in ((0, 1), (1, 0), (1, 1)):
            b = ((i + di) % 4) * 4 + (j + dj) % 4
            shrik_edges.append((a, b))
    shrik = Graph.from_edges(16, shrik_edges)
    assert sorted(rook.degrees()) == sorted(shrik.degrees()) == [6] * 16
    assert not are_isomorphic(rook, shrik)
    rng = random.Random(3)
    assert are_isomorphic(shrik, shrik.relabel(random_permutation(16, rng)))
