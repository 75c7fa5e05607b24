# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: BFS metrics and canonical labeling on bitset rows.

Mirrors ecix._kernels_py exactly; rows are Python ints with bit v of
rows[u] set iff uv is an edge.  n is capped at 62 (one machine word).
"""

from cpython.bytes cimport PyBytes_FromStringAndSize
from libc.stdint cimport uint64_t

CERT_MAX_N = 16

BACKEND = "cython"

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_popcountll(unsigned long long) nogil


cdef inline int _load_rows(rows, uint64_t *adj, int n) except -1:
    cdef int i
    if n < 1 or n > 62:
        raise ValueError(f"vertex count out of range for compiled kernels: {n}")
    for i in range(n):
        adj[i] = <uint64_t> rows[i]
    return 0


def bfs_distances(int n, rows, int src):
    """Hop distances from src; -1 for unreachable vertices."""
    cdef uint64_t adj[62]
    cdef int dist[62]
    cdef uint64_t seen, frontier, reach, nxt, m
    cdef int i, v, d
    _load_rows(rows, adj, n)
    for i in range(n):
        dist[i] = -1
    dist[src] = 0
    seen = (<uint64_t> 1) << src
    frontier = seen
    d = 0
    while True:
        reach = 0
        m = frontier
        while m:
            v = __builtin_ctzll(m)
            reach |= adj[v]
            m &= m - 1
        nxt = reach & ~seen
        if nxt == 0:
            break
        seen |= nxt
        frontier = nxt
        d += 1
        m = nxt
        while m:
            dist[__builtin_ctzll(m)] = d
            m &= m - 1
    return [dist[i] for i in range(n)]


def is_connected_rows(int n, rows):
    cdef uint64_t adj[62]
    cdef uint64_t seen, frontier, reach, m
    cdef int v
    _load_rows(rows, adj, n)
    seen = 1
    frontier = 1
    while frontier:
        reach = 0
        m = frontier
        while m:
            v = __builtin_ctzll(m)
            reach |= adj[v]
            m &= m - 1
        frontier = reach & ~seen
        seen |= frontier
    return seen == ((<uint64_t> 1) << n) - 1


def all_eccentricities(int n, rows):
    """Eccentricity of every vertex, or None if the graph is disconnected."""
    cdef uint64_t adj[62]
    cdef int ecc[62]
    cdef uint64_t full, seen, frontier, reach, nxt, m
    cdef int src, v, d
    _load_rows(rows, adj, n)
    full = ((<uint64_t> 1) << n) - 1
    for src in range(n):
        seen = (<uint64_t> 1) << src
        frontier = seen
        d = 0
        while True:
            reach = 0
            m = frontier
            while m:
                v = __builtin_ctzll(m)
                reach |= adj[v]
                m &= m - 1
            nxt = reach & ~seen
            if nxt == 0:
                break
            seen |= nxt
            frontier = nxt
            d += 1
        if seen != full:
            return None
        ecc[src] = d
    return [ecc[i] for i in range(n)]


cdef struct CanonCtx:
    int n
    uint64_t adj[16]
    int colors[16]
    int needed[16]
    int placed[16]
    uint64_t cols[16]
    uint64_t best[16]
    int best_perm[16]
    int has_best
    uint64_t used


cdef int _sig_cmp(int *a, int *b, int width) nogil:
    cdef int i
    for i in range(width):
        if a[i] != b[i]:
            return -1 if a[i] < b[i] else 1
    return 0


cdef void _refine_colors(CanonCtx *c) nogil:
    # Degree-rank colors, split by sorted neighbor-color lists until stable.
    cdef int n = c.n
    cdef int deg[16]
    cdef int sig[16][17]
    cdef int order[16]
    cdef int newc[16]
    cdef int i, j, v, u, t, changed, nc
    cdef uint64_t m
    for v in range(n):
        deg[v] = __builtin_popcountll(c.adj[v])
    for v in range(n):
        nc = 0
        for u in range(n):
            if deg[u] < deg[v]:
                changed = 0
                for j in range(u):
                    if deg[j] == deg[u]:
                        changed = 1
                        break
                if not changed:
                    nc += 1
        c.colors[v] = nc
    while True:
        for v in range(n):
            sig[v][0] = c.colors[v]
            i = 1
            m = c.adj[v]
            while m:
                u = __builtin_ctzll(m)
                m &= m - 1
                # insertion into sorted ascending positions 1..i-1
                j = i
                while j > 1 and sig[v][j - 1] > c.colors[u]:
                    sig[v][j] = sig[v][j - 1]
                    j -= 1
                sig[v][j] = c.colors[u]
                i += 1
            while i < 17:
                sig[v][i] = -1
                i += 1
        for v in range(n):
            order[v] = v
        for i in range(1, n):
            v = order[i]
            j = i
            while j > 0 and _sig_cmp(sig[v], sig[order[j - 1]], 17) < 0:
                order[j] = order[j - 1]
                j -= 1
            order[j] = v
        nc = 0
        newc[order[0]] = 0
        for i in range(1, n):
            if _sig_cmp(sig[order[i]], sig[order[i - 1]], 17) != 0:
                nc += 1
            newc[order[i]] = nc
        changed = 0
        for v in range(n):
            if newc[v] != c.colors[v]:
                changed = 1
            c.colors[v] = newc[v]
        if not changed:
            return


cdef int _canon_rec(CanonCtx *c, int pos, int eq) nogil:
    cdef int n = c.n
    cdef uint64_t cand_col[16]
    cdef int cand_v[16]
    cdef uint64_t seen_open[16]
    cdef uint64_t seen_closed[16]
    cdef int ncand = 0, nseen = 0
    cdef int i, j, v, want, updated, child_eq, skip
    cdef uint64_t col, rv, ko, kc
    if pos == n:
        updated = 0
        if not c.has_best:
            updated = 1
        else:
            for i in range(n):
                if c.cols[i] != c.best[i]:
                    updated = 1 if c.cols[i] < c.best[i] else 0
                    break
        if updated:
            c.has_best = 1
            for i in range(n):
                c.best[i] = c.cols[i]
                c.best_perm[i] = c.placed[i]
        return updated
    want = c.needed[pos]
    for v in range(n):
        if (c.used >> v & 1) == 0 and c.colors[v] == want:
            col = 0
            rv = c.adj[v]
            for j in range(pos):
                col = (col << 1) | (rv >> c.placed[j] & 1)
            i = ncand
            while i > 0 and (cand_col[i - 1] > col or
                             (cand_col[i - 1] == col and cand_v[i - 1] > v)):
                cand_col[i] = cand_col[i - 1]
                cand_v[i] = cand_v[i - 1]
                i -= 1
            cand_col[i] = col
            cand_v[i] = v
            ncand += 1
    updated = 0
    for i in range(ncand):
        col = cand_col[i]
        v = cand_v[i]
        if eq and c.has_best and col > c.best[pos]:
            break
        ko = c.adj[v]
        kc = c.adj[v] | ((<uint64_t> 1) << v)
        skip = 0
        for j in range(nseen):
            if seen_open[j] == ko or seen_closed[j] == kc:
                skip = 1
                break
        if skip:
            continue
        seen_open[nseen] = ko
        seen_closed[nseen] = kc
        nseen += 1
        child_eq = 1 if (eq and c.has_best and col == c.best[pos]) else 0
        c.cols[pos] = col
        c.placed[pos] = v
        c.used |= (<uint64_t> 1) << v
        if _canon_rec(c, pos + 1, child_eq):
            updated = 1
            eq = 1
        c.used &= ~((<uint64_t> 1) << v)
    return updated


def canonical_key(int n, rows):
    """Packed canonical form: byte n, then the relabeled rows as uint64 LE.

    The relabeling minimizes the upper-triangle bit string read column by
    column, over all labelings that list the refinement color classes in
    canonical order.  Equal keys <=> isomorphic graphs.
    """
    cdef CanonCtx c
    cdef int i, p, q
    cdef uint64_t row
    cdef unsigned char out[513]
    cdef int tmp[16]
    if n < 1 or n > 16:
        raise ValueError(f"canonical form limited to 16 vertices, got {n}")
    if n == 1:
        return bytes([1]) + bytes(8)
    c.n = n
    for i in range(n):
        c.adj[i] = <uint64_t> rows[i]
    _refine_colors(&c)
    for i in range(n):
        tmp[i] = c.colors[i]
    for i in range(1, n):
        p = tmp[i]
        q = i
        while q > 0 and tmp[q - 1] > p:
            tmp[q] = tmp[q - 1]
            q -= 1
        tmp[q] = p
    for i in range(n):
        c.needed[i] = tmp[i]
    c.has_best = 0
    c.used = 0
    _canon_rec(&c, 0, 0)
    out[0] = <unsigned char> n
    for p in range(n):
        row = 0
        for q in range(n):
            if c.adj[c.best_perm[p]] >> c.best_perm[q] & 1:
                row |= (<uint64_t> 1) << q
        for q in range(8):
            out[1 + 8 * p + q] = <unsigned char> ((row >> (8 * q)) & 0xFF)
    return PyBytes_FromStringAndSize(<char *> out, 1 + 8 * n)
