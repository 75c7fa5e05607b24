"""Canonical certificates and isomorphism tests.

The certificate of a graph is the graph6 line of its canonically
relabeled form, so certificates are portable evidence: equal strings
iff isomorphic graphs, and every certificate decodes back to a
representative of its class.
"""

from __future__ import annotations

from . import kernels
from .graph6 import encode_rows
from .graphs import Graph

#: Search budget for the canonical relabeling.
CERT_MAX_N = kernels.CERT_MAX_N


def canonical_key(g: Graph) -> bytes:
    """Compact canonical form (packed rows); equal iff isomorphic."""
    return kernels.canonical_key(g.n, g.adj)


def rows_from_key(key: bytes) -> tuple[int, tuple[int, ...]]:
    n = key[0]
    rows = tuple(int.from_bytes(key[1 + 8 * i:9 + 8 * i], "little") for i in range(n))
    return n, rows


def canonical_graph(g: Graph) -> Graph:
    """The canonically relabeled copy of g."""
    n, rows = rows_from_key(canonical_key(g))
    return Graph(n, rows)


def canonical_cert(g: Graph) -> str:
    """graph6 line of the canonical relabeling."""
    n, rows = rows_from_key(canonical_key(g))
    return encode_rows(n, rows)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(r.bit_count() for r in g.adj) != sorted(r.bit_count() for r in h.adj):
        return False
    return canonical_key(g) == canonical_key(h)
