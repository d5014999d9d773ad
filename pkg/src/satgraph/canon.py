"""Canonical labeling by colour refinement and individualization.

The search tree is the usual one: refine to an equitable ordered partition,
individualize each vertex of the first non-singleton cell, recurse.  Leaves
are compared by their relabeled adjacency rows and the largest one wins.
Automorphisms found at leaves prune sibling subtrees, and an automorphism
onto the first leaf sends the search straight back to the first path.
"""

from __future__ import annotations

from collections import deque
from itertools import permutations
from typing import Sequence

from .graph import Graph, encode_graph6, iter_bits


def refine(adj: Sequence[int], cells: list[int], splitters: list[int]) -> list[int]:
    """Refine an ordered partition (list of vertex bitsets) until equitable.

    Every cell is split by neighbour counts into a splitter; fragments keep
    the position of their parent, ordered by count.  Only positions and
    counts drive the process, so the result is isomorphism-invariant.
    """
    cells = list(cells)
    queue = deque(splitters)
    while queue:
        w = queue.popleft()
        i = 0
        while i < len(cells):
            x = cells[i]
            if x & (x - 1):
                groups: dict[int, int] = {}
                for v in iter_bits(x):
                    c = (adj[v] & w).bit_count()
                    groups[c] = groups.get(c, 0) | 1 << v
                if len(groups) > 1:
                    frags = [groups[c] for c in sorted(groups)]
                    cells[i : i + 1] = frags
                    queue.extend(frags)
                    i += len(frags)
                    continue
            i += 1
    return cells


def _orbits(n: int, gens: list[list[int]]) -> list[int]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for v in range(n):
            a, b = find(v), find(g[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]


class _Search:
    def __init__(self, g: Graph) -> None:
        self.g = g
        self.n = g.n
        self.adj = g.adj
        self.first_colors: list[int] | None = None
        self.first_cert: tuple[int, ...] | None = None
        self.first_path: list[int] = []
        self.best_colors: list[int] | None = None
        self.best_cert: tuple[int, ...] | None = None
        self.gens: list[list[int]] = []

    def cert(self, colors: list[int]) -> tuple[int, ...]:
        rows = [0] * self.n
        for v, row in enumerate(self.adj):
            new = 0
            for w in iter_bits(row):
                new |= 1 << colors[w]
            rows[colors[v]] = new
        return tuple(rows)

    def automorphism(self, src: list[int], dst: list[int]) -> list[int]:
        # src, dst are discrete colourings with equal certificates
        inv_dst = [0] * self.n
        for v, c in enumerate(dst):
            inv_dst[c] = v
        return [inv_dst[src[v]] for v in range(self.n)]

    def run(self, cells: list[int], prefix: list[int]) -> int | None:
        """Explore a node; return a depth to unwind to, or ``None``."""
        n = self.n
        depth = len(prefix)
        if len(cells) == n:
            colors = [0] * n
            for i, cell in enumerate(cells):
                colors[cell.bit_length() - 1] = i
            cert = self.cert(colors)
            if self.first_cert is None:
                self.first_colors, self.first_cert = colors, cert
                self.best_colors, self.best_cert = colors, cert
                self.first_path = list(prefix)
                return None
            if cert == self.first_cert:
                self.gens.append(self.automorphism(self.first_colors, colors))
                common = 0
                for a, b in zip(prefix, self.first_path):
                    if a != b:
                        break
                    common += 1
                return common
            if cert == self.best_cert:
                self.gens.append(self.automorphism(self.best_colors, colors))
                return None
            if cert > self.best_cert:
                self.best_colors, self.best_cert = colors, cert
            return None

        ti = next(i for i, c in enumerate(cells) if c & (c - 1))
        target = cells[ti]
        explored: list[int] = []
        orb: list[int] | None = None
        seen = -1
        for w in iter_bits(target):
            if explored:
                if seen != len(self.gens):
                    seen = len(self.gens)
                    fixing = [g for g in self.gens if all(g[p] == p for p in prefix)]
                    orb = _orbits(n, fixing) if fixing else None
                if orb is not None and any(orb[w] == orb[x] for x in explored):
                    continue
            bit = 1 << w
            child = cells[:ti] + [bit, target ^ bit] + cells[ti + 1 :]
            ret = self.run(refine(self.adj, child, [bit]), prefix + [w])
            explored.append(w)
            if ret is not None and ret < depth:
                return ret
        return None


def canonical_labeling(g: Graph) -> list[int]:
    """Return ``lab`` with ``lab[v]`` the canonical index of vertex ``v``."""
    if g.n == 0:
        return []
    s = _Search(g)
    full = g.vertex_mask()
    s.run(refine(g.adj, [full], [full]), [])
    return list(s.best_colors)


def canonical_graph(g: Graph) -> Graph:
    return g.relabel(canonical_labeling(g))


def canonical_form(g: Graph) -> bytes:
    """Relabeling-invariant graph6 string of ``g``."""
    return encode_graph6(canonical_graph(g))


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.edge_count() != g2.edge_count():
        return False
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    return canonical_form(g1) == canonical_form(g2)


def canonical_form_bruteforce(g: Graph) -> bytes:
    """Lexicographically least graph6 over all n! relabelings.  Oracle only, n <= 8."""
    if g.n > 8:
        raise ValueError("brute-force canonical form is limited to n <= 8")
    return min(encode_graph6(g.relabel(p)) for p in permutations(range(g.n)))
