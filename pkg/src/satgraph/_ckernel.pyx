# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled clique-union search.  Same contract as ``_pykernel``.

Adjacency rows are packed into ``W = ceil(n / 64)`` machine words; the
search itself runs without the GIL so ``scan`` can be split across threads.
"""

from libc.stdlib cimport malloc, free
from libc.string cimport memcpy, memset

ctypedef unsigned long long u64

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

cdef enum:
    MAXW = 8

NAME = "cython"


cdef struct Ctx:
    int n
    int W
    u64* adj
    int* sizes
    int nsizes
    int* parts
    int depth


cdef inline int popcnt(const u64* a, int W) noexcept nogil:
    cdef int i, c = 0
    for i in range(W):
        c += __builtin_popcountll(a[i])
    return c


cdef bint extend(Ctx* c, const u64* cand_in, int need, const u64* avail, int idx_next, int first, int demand_next) noexcept nogil:
    cdef u64 cand[MAXW]
    cdef u64 sub[MAXW]
    cdef u64 rest[MAXW]
    cdef int W = c.W
    cdef int w, i, v
    cdef const u64* row
    if need == 0:
        return place(c, avail, idx_next, first, demand_next)
    memcpy(cand, cand_in, W * sizeof(u64))
    for w in range(W):
        while cand[w]:
            if popcnt(cand, W) < need:
                return False
            v = w * 64 + __builtin_ctzll(cand[w])
            cand[w] &= cand[w] - 1
            row = c.adj + v * W
            for i in range(W):
                sub[i] = cand[i] & row[i]
                rest[i] = avail[i]
            rest[v >> 6] &= ~(1ULL << (v & 63))
            c.parts[c.depth] = v
            c.depth += 1
            if extend(c, sub, need - 1, rest, idx_next, first, demand_next):
                return True
            c.depth -= 1
    return False


cdef bint place(Ctx* c, const u64* avail, int idx, int prev_min, int demand) noexcept nogil:
    cdef u64 cand[MAXW]
    cdef u64 above[MAXW]
    cdef u64 rest[MAXW]
    cdef int W = c.W
    cdef int w, i, v, s, lo
    cdef const u64* row
    if idx == c.nsizes:
        return True
    if popcnt(avail, W) < demand:
        return False
    s = c.sizes[idx]
    memcpy(cand, avail, W * sizeof(u64))
    if idx > 0 and c.sizes[idx - 1] == s:
        lo = prev_min + 1
        for w in range(W):
            if (w + 1) * 64 <= lo:
                cand[w] = 0
            elif w * 64 < lo:
                cand[w] &= ~((1ULL << (lo - w * 64)) - 1)
    for w in range(W):
        while cand[w]:
            v = w * 64 + __builtin_ctzll(cand[w])
            cand[w] &= cand[w] - 1
            row = c.adj + v * W
            for i in range(W):
                above[i] = row[i] & avail[i]
            if popcnt(above, W) < s - 1:
                continue
            for i in range(W):
                if i < (v >> 6):
                    above[i] = 0
                elif i == (v >> 6):
                    if (v & 63) == 63:
                        above[i] = 0
                    else:
                        above[i] &= ~((1ULL << ((v & 63) + 1)) - 1)
                rest[i] = avail[i]
            rest[v >> 6] &= ~(1ULL << (v & 63))
            c.parts[c.depth] = v
            c.depth += 1
            if extend(c, above, s - 1, rest, idx + 1, v, demand - s):
                return True
            c.depth -= 1
    return False


cdef void full_mask(u64* out, int n, int W) noexcept nogil:
    cdef int w
    for w in range(W):
        if (w + 1) * 64 <= n:
            out[w] = ~0ULL
        elif w * 64 < n:
            out[w] = (1ULL << (n - w * 64)) - 1
        else:
            out[w] = 0


cdef bint find_plain(Ctx* c, int* sizes, int t) noexcept nogil:
    cdef u64 avail[MAXW]
    cdef int i, total = 0
    for i in range(t):
        total += sizes[i]
    full_mask(avail, c.n, c.W)
    c.sizes = sizes
    c.nsizes = t
    c.depth = 0
    return place(c, avail, 0, -1, total)


cdef int find_required(Ctx* c, int* sizes, int t, int* rest, int u, int v) noexcept nogil:
    """Index of the part holding u and v, or -1 if no embedding uses uv."""
    cdef u64 avail[MAXW]
    cdef u64 common[MAXW]
    cdef int W = c.W
    cdef int i, j, k, s, last = -1, total = 0
    for i in range(t):
        total += sizes[i]
    for i in range(W):
        common[i] = c.adj[u * W + i] & c.adj[v * W + i]
    for i in range(t):
        s = sizes[i]
        if s < 2 or s == last:
            continue
        last = s
        k = 0
        for j in range(t):
            if j != i:
                rest[k] = sizes[j]
                k += 1
        full_mask(avail, c.n, W)
        avail[u >> 6] &= ~(1ULL << (u & 63))
        avail[v >> 6] &= ~(1ULL << (v & 63))
        c.sizes = rest
        c.nsizes = t - 1
        c.depth = 0
        if extend(c, common, s - 2, avail, 0, -1, total - s):
            return i
    return -1


cdef class _Packed:
    cdef u64* adj
    cdef int n
    cdef int W

    def __cinit__(self, rows, int n):
        cdef int u, w
        self.n = n
        self.W = (n + 63) // 64 if n > 0 else 1
        if self.W > MAXW:
            raise ValueError("graph exceeds 512 vertices")
        self.adj = <u64*> malloc(max(n, 1) * self.W * sizeof(u64))
        if self.adj == NULL:
            raise MemoryError()
        for u in range(n):
            row = rows[u]
            for w in range(self.W):
                self.adj[u * self.W + w] = <u64> ((row >> (64 * w)) & 0xFFFFFFFFFFFFFFFF)

    def __dealloc__(self):
        free(self.adj)


cdef int* _int_array(values, int extra) except NULL:
    cdef int i
    cdef int* out = <int*> malloc((len(values) + extra + 1) * sizeof(int))
    if out == NULL:
        raise MemoryError()
    for i in range(len(values)):
        out[i] = values[i]
    return out


cdef list _split(int* flat, sizes):
    parts = []
    k = 0
    for s in sizes:
        parts.append([flat[k + j] for j in range(s)])
        k += s
    return parts


def find(adj, int n, sizes, required=None):
    """Parts of a clique-union embedding, aligned with ``sizes`` (descending), or ``None``."""
    cdef _Packed g = _Packed(adj, n)
    cdef int t = len(sizes)
    cdef int total = sum(sizes)
    cdef int* sz = _int_array(sizes, 0)
    cdef int* rest = _int_array(sizes, 0)
    cdef int* flat = <int*> malloc((total + 1) * sizeof(int))
    cdef Ctx c
    cdef bint ok
    cdef int u, v, idx, s
    c.n = n
    c.W = g.W
    c.adj = g.adj
    c.parts = flat
    try:
        if required is None:
            with nogil:
                ok = find_plain(&c, sz, t)
            return _split(flat, sizes) if ok else None
        u, v = required
        with nogil:
            idx = find_required(&c, sz, t, rest, u, v)
        if idx < 0:
            return None
        s = sizes[idx]
        seed = sorted([u, v] + [flat[j] for j in range(s - 2)])
        rest_sizes = list(sizes[:idx]) + list(sizes[idx + 1:])
        parts = []
        k = s - 2
        for r in rest_sizes:
            parts.append([flat[k + j] for j in range(r)])
            k += r
        parts.insert(idx, seed)
        return parts
    finally:
        free(sz)
        free(rest)
        free(flat)


def scan(adj, int n, sizes, pairs, bint census):
    """Indices of ``pairs`` whose addition does not create the pattern through that edge."""
    cdef _Packed g = _Packed(adj, n)
    cdef int t = len(sizes)
    cdef int total = sum(sizes)
    cdef int m = len(pairs)
    cdef int* sz = _int_array(sizes, 0)
    cdef int* rest = _int_array(sizes, 0)
    cdef int* flat = <int*> malloc((total + 1) * sizeof(int))
    cdef int* us = <int*> malloc((m + 1) * sizeof(int))
    cdef int* vs = <int*> malloc((m + 1) * sizeof(int))
    cdef int* bad = <int*> malloc((m + 1) * sizeof(int))
    cdef int nbad = 0
    cdef int k, u, v, W = g.W
    cdef u64 su, sv
    cdef Ctx c
    c.n = n
    c.W = W
    c.adj = g.adj
    c.parts = flat
    try:
        for k in range(m):
            us[k] = pairs[k][0]
            vs[k] = pairs[k][1]
        with nogil:
            for k in range(m):
                u = us[k]
                v = vs[k]
                su = g.adj[u * W + (v >> 6)]
                sv = g.adj[v * W + (u >> 6)]
                g.adj[u * W + (v >> 6)] = su | (1ULL << (v & 63))
                g.adj[v * W + (u >> 6)] = sv | (1ULL << (u & 63))
                if find_required(&c, sz, t, rest, u, v) < 0:
                    bad[nbad] = k
                    nbad += 1
                g.adj[u * W + (v >> 6)] = su
                g.adj[v * W + (u >> 6)] = sv
                if nbad and not census:
                    break
        return [bad[k] for k in range(nbad)]
    finally:
        free(sz)
        free(rest)
        free(flat)
        free(us)
        free(vs)
        free(bad)
