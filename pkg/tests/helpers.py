"""Shared test utilities: random graphs, brute-force oracles."""

from itertools import combinations, permutations

from ecix import kernels
from ecix.graphs import Graph


def rand_rows(rng, n, p=0.5):
    rows = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return tuple(rows)


def rand_graph(rng, n, p=0.5):
    return Graph(n, rand_rows(rng, n, p))


def rand_connected(rng, n, p=0.5):
    while True:
        rows = rand_rows(rng, n, p)
        if kernels.is_connected_rows(n, rows):
            return Graph(n, rows)


def brute_isomorphic(g, h):
    """Permutation search; independent of the canonical-form machinery."""
    if g.n != h.n or g.m != h.m:
        return False
    n = g.n
    for perm in permutations(range(n)):
        if all((g.adj[perm[u]] >> perm[v] & 1) == (h.adj[u] >> v & 1)
               for u in range(n) for v in range(u + 1, n)):
            return True
    return False


def labeled_connected_classes(n):
    """Independent enumeration oracle: every labeled graph on n vertices,
    keep the connected ones, dedup by canonical key.  Returns
    (total_classes, classes_by_diameter, classes_by_size)."""
    pairs = list(combinations(range(n), 2))
    seen = set()
    by_diam = {}
    by_size = {}
    for code in range(1 << len(pairs)):
        rows = [0] * n
        for b, (u, v) in enumerate(pairs):
            if code >> b & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        if not kernels.is_connected_rows(n, rows):
            continue
        key = kernels.canonical_key(n, tuple(rows))
        if key in seen:
            continue
        seen.add(key)
        ecc = kernels.all_eccentricities(n, rows)
        d = max(ecc)
        m = sum(r.bit_count() for r in rows) // 2
        by_diam[d] = by_diam.get(d, 0) + 1
        by_size[m] = by_size.get(m, 0) + 1
    return len(seen), by_diam, by_size
