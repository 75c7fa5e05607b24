"""Bitset-backed simple undirected graphs and their eccentricity metrics.

A Graph stores the vertex count n and one integer bitmask per vertex
(bit v of adj[u] set iff uv is an edge).  Rows are symmetric and
irreflexive.  All quantities here are exact integers; eccentricity-based
metrics require a connected graph and raise DisconnectedError otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from . import kernels

#: Hard cap aligned with the graph6 short form.
MAX_N = 62

UNREACHABLE = -1


class DisconnectedError(ValueError):
    """A metric that needs a connected graph was given a disconnected one."""


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph; safe to share across threads."""

    n: int
    adj: tuple[int, ...]

    @property
    def m(self) -> int:
        """Number of edges."""
        return sum(r.bit_count() for r in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> Iterator[int]:
        m = self.adj[v]
        while m:
            yield (m & -m).bit_length() - 1
            m &= m - 1

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as ordered pairs (u, v) with u < v."""
        for u in range(self.n):
            m = self.adj[u] >> (u + 1) << (u + 1)
            while m:
                yield u, (m & -m).bit_length() - 1
                m &= m - 1

    def with_edge(self, u: int, v: int) -> "Graph":
        """Copy of this graph with edge uv added."""
        if u == v:
            raise ValueError("self-loop")
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))


@dataclass(frozen=True)
class VertexMetrics:
    degree: int
    ecc: int
    weight: int


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Validating constructor; duplicate edges collapse."""
    if n < 1 or n > MAX_N:
        raise ValueError(f"vertex count must be in 1..{MAX_N}, got {n}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def permuted(g: Graph, perm: Sequence[int]) -> Graph:
    """Relabel vertices: new vertex i is old vertex perm[i]."""
    rows = []
    for p in range(g.n):
        row = 0
        rp = g.adj[perm[p]]
        for q in range(g.n):
            if rp >> perm[q] & 1:
                row |= 1 << q
        rows.append(row)
    return Graph(g.n, tuple(rows))


def distances_from(g: Graph, v: int) -> list[int]:
    """BFS hop counts from v; UNREACHABLE (-1) marks other components."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    return kernels.bfs_distances(g.n, g.adj, v)


def is_connected(g: Graph) -> bool:
    return kernels.is_connected_rows(g.n, g.adj)


def eccentricity(g: Graph, v: int) -> int:
    dist = distances_from(g, v)
    if min(dist) == UNREACHABLE:
        raise DisconnectedError("eccentricity undefined on a disconnected graph")
    return max(dist)


def eccentricities(g: Graph) -> list[int]:
    ecc = kernels.all_eccentricities(g.n, g.adj)
    if ecc is None:
        raise DisconnectedError("eccentricities undefined on a disconnected graph")
    return ecc


def diameter(g: Graph) -> int:
    return max(eccentricities(g))


def eci(g: Graph) -> int:
    """Eccentric connectivity index: sum over vertices of degree * eccentricity."""
    ecc = eccentricities(g)
    return sum(g.adj[v].bit_count() * ecc[v] for v in range(g.n))


def eci_edge_form(g: Graph) -> int:
    """Same index computed edge-wise: sum over edges of both end eccentricities."""
    ecc = eccentricities(g)
    return sum(ecc[u] + ecc[v] for u, v in g.edges())


def vertex_metrics(g: Graph) -> list[VertexMetrics]:
    ecc = eccentricities(g)
    return [
        VertexMetrics(degree=g.adj[v].bit_count(), ecc=ecc[v],
                      weight=g.adj[v].bit_count() * ecc[v])
        for v in range(g.n)
    ]
