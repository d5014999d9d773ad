"""Pure-Python clique-union search over int bitsets.

Mirrors ``_ckernel.pyx`` function for function; used when the compiled
module is unavailable or ``SATGRAPH_PURE=1`` is set.
"""

from __future__ import annotations

from typing import Sequence

NAME = "python"


def _cliques(adj, cand: int, need: int, chosen: list[int]):
    """Yield ascending extensions of ``chosen`` by ``need`` vertices from ``cand``."""
    if need == 0:
        yield chosen
        return
    while cand:
        if cand.bit_count() < need:
            return
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        chosen.append(v)
        yield from _cliques(adj, cand & adj[v], need - 1, chosen)
        chosen.pop()


def _place(adj, avail: int, sizes: Sequence[int], idx: int, prev_min: int, demand: int, out: list):
    if idx == len(sizes):
        return True
    if avail.bit_count() < demand:
        return False
    s = sizes[idx]
    cand = avail
    if idx > 0 and sizes[idx - 1] == s:
        cand &= ~((1 << (prev_min + 1)) - 1)
    while cand:
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        nb = adj[v] & avail
        if nb.bit_count() < s - 1:
            continue
        above = nb & ~((1 << (v + 1)) - 1)
        for clique in _cliques(adj, above, s - 1, [v]):
            mask = 0
            for w in clique:
                mask |= 1 << w
            out.append(list(clique))
            if _place(adj, avail & ~mask, sizes, idx + 1, v, demand - s, out):
                return True
            out.pop()
    return False


def find(adj: Sequence[int], n: int, sizes: Sequence[int], required: tuple[int, int] | None = None):
    """Parts of a clique-union embedding, aligned with ``sizes`` (descending), or ``None``."""
    full = (1 << n) - 1
    total = sum(sizes)
    if required is None:
        out: list[list[int]] = []
        return out if _place(adj, full, sizes, 0, -1, total, out) else None
    u, v = required
    common = adj[u] & adj[v]
    tried = set()
    for i, s in enumerate(sizes):
        if s < 2 or s in tried:
            continue
        tried.add(s)
        rest = list(sizes[:i]) + list(sizes[i + 1 :])
        for ext in _cliques(adj, common, s - 2, []):
            seed = sorted([u, v, *ext])
            mask = 0
            for w in seed:
                mask |= 1 << w
            out = []
            if _place(adj, full & ~mask, rest, 0, -1, total - s, out):
                out.insert(i, seed)
                return out
    return None


def scan(adj: Sequence[int], n: int, sizes: Sequence[int], pairs: Sequence[tuple[int, int]], census: bool) -> list[int]:
    """Indices of ``pairs`` whose addition does not create the pattern through that edge."""
    rows = list(adj)
    failing = []
    for k, (u, v) in enumerate(pairs):
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        hit = find(rows, n, sizes, (u, v))
        rows[u] = adj[u]
        rows[v] = adj[v]
        if hit is None:
            failing.append(k)
            if not census:
                break
    return failing
