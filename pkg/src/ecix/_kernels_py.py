"""Pure-Python kernels: BFS metrics and canonical labeling on bitset rows.

Fallback implementation with the same contract as the compiled module
(ecix._speedups).  Graphs are passed as (n, rows) where rows[u] is an
integer whose bit v is set iff uv is an edge.
"""

CERT_MAX_N = 16

BACKEND = "python"


def bfs_distances(n, rows, src):
    """Hop distances from src; -1 for unreachable vertices."""
    dist = [-1] * n
    dist[src] = 0
    seen = 1 << src
    frontier = seen
    d = 0
    while True:
        reach = 0
        m = frontier
        while m:
            reach |= rows[(m & -m).bit_length() - 1]
            m &= m - 1
        nxt = reach & ~seen
        if not nxt:
            return dist
        seen |= nxt
        frontier = nxt
        d += 1
        m = nxt
        while m:
            dist[(m & -m).bit_length() - 1] = d
            m &= m - 1


def is_connected_rows(n, rows):
    seen = 1
    frontier = 1
    while frontier:
        reach = 0
        m = frontier
        while m:
            reach |= rows[(m & -m).bit_length() - 1]
            m &= m - 1
        frontier = reach & ~seen
        seen |= frontier
    return seen == (1 << n) - 1


def all_eccentricities(n, rows):
    """Eccentricity of every vertex, or None if the graph is disconnected."""
    full = (1 << n) - 1
    out = [0] * n
    for src in range(n):
        seen = 1 << src
        frontier = seen
        d = 0
        while True:
            reach = 0
            m = frontier
            while m:
                reach |= rows[(m & -m).bit_length() - 1]
                m &= m - 1
            nxt = reach & ~seen
            if not nxt:
                break
            seen |= nxt
            frontier = nxt
            d += 1
        if seen != full:
            return None
        out[src] = d
    return out


def _refined_colors(n, rows):
    # Initial colors by degree rank, then split classes by the multiset of
    # neighbor colors until stable.  Color ids depend only on the structure,
    # never on the input labeling.
    degs = [rows[v].bit_count() for v in range(n)]
    order = sorted(set(degs))
    rank = {d: i for i, d in enumerate(order)}
    colors = [rank[d] for d in degs]
    while True:
        sigs = []
        for v in range(n):
            nb = []
            m = rows[v]
            while m:
                nb.append(colors[(m & -m).bit_length() - 1])
                m &= m - 1
            nb.sort()
            sigs.append((colors[v], tuple(nb)))
        remap = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [remap[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def canonical_key(n, rows):
    """Packed canonical form: byte n, then the relabeled rows as uint64 LE.

    The relabeling minimizes the upper-triangle bit string read column by
    column, over all labelings that list the refinement color classes in
    canonical order.  Equal keys <=> isomorphic graphs.
    """
    if n < 1 or n > CERT_MAX_N:
        raise ValueError(f"canonical form limited to {CERT_MAX_N} vertices, got {n}")
    if n == 1:
        return bytes([1]) + (0).to_bytes(8, "little")

    colors = _refined_colors(n, rows)
    needed = sorted(colors)
    placed = [0] * n
    cols = [0] * n
    best = None
    best_perm = None
    used = [False] * n

    def rec(pos, eq):
        nonlocal best, best_perm
        if pos == n:
            if best is None or cols < best:
                best = cols[:]
                best_perm = placed[:]
                return True
            return False
        want = needed[pos]
        cand = []
        for v in range(n):
            if not used[v] and colors[v] == want:
                col = 0
                rv = rows[v]
                for j in range(pos):
                    col = (col << 1) | (rv >> placed[j] & 1)
                cand.append((col, v))
        cand.sort()
        updated = False
        seen_open = set()
        seen_closed = set()
        for col, v in cand:
            if eq and best is not None and col > best[pos]:
                break
            # Interchangeable twins explore identical subtrees: skip repeats.
            ko = rows[v]
            kc = rows[v] | (1 << v)
            if ko in seen_open or kc in seen_closed:
                continue
            seen_open.add(ko)
            seen_closed.add(kc)
            child_eq = eq and best is not None and col == best[pos]
            cols[pos] = col
            placed[pos] = v
            used[v] = True
            if rec(pos + 1, child_eq):
                updated = True
                eq = True
            used[v] = False
        return updated

    rec(0, False)
    perm = best_perm
    out = bytearray([n])
    for p in range(n):
        row = 0
        rp = rows[perm[p]]
        for q in range(n):
            if rp >> perm[q] & 1:
                row |= 1 << q
        out += row.to_bytes(8, "little")
    return bytes(out)
