"""Deterministic constructors for the named graph families.

Every family has a fixed vertex labeling so constructions (and their
graph6 encodings) are byte-reproducible:

* complete(n), path(n): vertices 0..n-1, path edges i-(i+1).
* extremal(n, d, k): path u_0..u_d on vertices 0..d; vertices d+1..n-1
  form a clique, all adjacent to u_0 and u_1; clique vertices
  d+1..d+k also adjacent to u_2.  Requires n >= 4, 3 <= d <= n-1,
  0 <= k <= n-d-1; diameter d.
* lollipop(n, d): extremal(n, d, 0) as a labeled construction (the
  clique plus u_0 and u_1 induce a complete subgraph).
* matching_deleted(n): complete graph minus edges (0,1), (2,3), ...,
  and minus (n-1, 0) when n is odd; every degree is n-2 except at most
  one n-3; diameter 2.  Requires n >= 4.
* h1: the 5-vertex wheel (4-cycle 0-1-2-3 plus hub 4).
* h2: clique on {0,1,2,3}, vertex 4 adjacent to {2,3}, vertex 5
  adjacent to {0,1} (isomorphic to two_sided(6, 1); pinned by test).
* h3: two_sided(7, 1).
* two_sided(n, i): path 0-1-2-3; clique on 4..n-1; clique vertices
  4..3+i adjacent to {0,1,2}, the rest adjacent to {1,2,3}.  Requires
  1 <= i <= n-5 (i=0 and i=n-4 coincide with extremal(n,3,n-4) and are
  excluded so each graph has one name).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .graphs import Graph, build_graph

KINDS = ("complete", "path", "lollipop", "extremal", "matching_deleted",
         "h1", "h2", "h3", "two_sided")

_ARITY = {"complete": 1, "path": 1, "lollipop": 2, "extremal": 3,
          "matching_deleted": 1, "h1": 0, "h2": 0, "h3": 0, "two_sided": 2}


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...] = ()

    def __str__(self) -> str:
        return f"{self.kind}({','.join(map(str, self.params))})"


def complete(n: int) -> FamilySpec:
    return FamilySpec("complete", (n,))


def path(n: int) -> FamilySpec:
    return FamilySpec("path", (n,))


def lollipop(n: int, d: int) -> FamilySpec:
    return FamilySpec("lollipop", (n, d))


def extremal(n: int, d: int, k: int) -> FamilySpec:
    return FamilySpec("extremal", (n, d, k))


def matching_deleted(n: int) -> FamilySpec:
    return FamilySpec("matching_deleted", (n,))


def h1() -> FamilySpec:
    return FamilySpec("h1")


def h2() -> FamilySpec:
    return FamilySpec("h2")


def h3() -> FamilySpec:
    return FamilySpec("h3")


def two_sided(n: int, i: int) -> FamilySpec:
    return FamilySpec("two_sided", (n, i))


def parse_spec(text: str) -> FamilySpec:
    """Parse 'kind(p1,p2,...)' or bare 'kind' for parameterless kinds."""
    m = re.fullmatch(r"\s*([a-z0-9_]+)\s*(?:\(([-0-9,\s]*)\))?\s*", text)
    if not m:
        raise ValueError(f"cannot parse family spec: {text!r}")
    kind = m.group(1)
    if kind not in KINDS:
        raise ValueError(f"unknown family kind {kind!r}; choose from {', '.join(KINDS)}")
    raw = (m.group(2) or "").strip()
    params = tuple(int(p) for p in raw.split(",")) if raw else ()
    spec = FamilySpec(kind, params)
    validate(spec)
    return spec


def validate(spec: FamilySpec) -> None:
    kind, p = spec.kind, spec.params
    if kind not in KINDS:
        raise ValueError(f"unknown family kind {kind!r}")
    if len(p) != _ARITY[kind]:
        raise ValueError(f"{kind} takes {_ARITY[kind]} parameter(s), got {len(p)}")
    if kind in ("complete", "path"):
        if p[0] < 1:
            raise ValueError(f"{spec}: order must be positive")
    elif kind in ("extremal", "lollipop"):
        n, d = p[0], p[1]
        k = p[2] if kind == "extremal" else 0
        if n < 4 or not 3 <= d <= n - 1 or not 0 <= k <= n - d - 1:
            raise ValueError(f"{spec}: need n >= 4, 3 <= d <= n-1, 0 <= k <= n-d-1")
    elif kind == "matching_deleted":
        if p[0] < 4:
            raise ValueError(f"{spec}: order must be at least 4")
    elif kind == "two_sided":
        n, i = p
        if n < 5 or not 1 <= i <= n - 5:
            raise ValueError(f"{spec}: need n >= 5 and 1 <= i <= n-5")


def make(spec: FamilySpec) -> Graph:
    """Build the labeled graph for a family spec."""
    validate(spec)
    kind, p = spec.kind, spec.params
    if kind == "complete":
        return build_graph(p[0], combinations(range(p[0]), 2))
    if kind == "path":
        return build_graph(p[0], ((i, i + 1) for i in range(p[0] - 1)))
    if kind == "lollipop":
        return make(extremal(p[0], p[1], 0))
    if kind == "extremal":
        n, d, k = p
        edges = [(i, i + 1) for i in range(d)]
        clique = range(d + 1, n)
        edges += list(combinations(clique, 2))
        edges += [(w, u) for w in clique for u in (0, 1)]
        edges += [(w, 2) for w in range(d + 1, d + 1 + k)]
        return build_graph(n, edges)
    if kind == "matching_deleted":
        n = p[0]
        removed = {(i, i + 1) for i in range(0, n - 1, 2)}
        if n % 2:
            removed.add((0, n - 1))
        return build_graph(n, (e for e in combinations(range(n), 2)
                               if e not in removed))
    if kind == "h1":
        return build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 0),
                               (4, 0), (4, 1), (4, 2), (4, 3)])
    if kind == "h2":
        return build_graph(6, list(combinations(range(4), 2))
                           + [(4, 2), (4, 3), (5, 0), (5, 1)])
    if kind == "h3":
        return make(two_sided(7, 1))
    # two_sided
    n, i = p
    edges = [(0, 1), (1, 2), (2, 3)]
    clique = range(4, n)
    edges += list(combinations(clique, 2))
    edges += [(w, u) for w in range(4, 4 + i) for u in (0, 1, 2)]
    edges += [(w, u) for w in range(4 + i, n) for u in (1, 2, 3)]
    return build_graph(n, edges)


def edge_count(spec: FamilySpec) -> int:
    """Closed-form edge count, equal to make(spec).m."""
    validate(spec)
    kind, p = spec.kind, spec.params
    if kind == "complete":
        return comb(p[0], 2)
    if kind == "path":
        return p[0] - 1
    if kind in ("extremal", "lollipop"):
        n, d = p[0], p[1]
        k = p[2] if kind == "extremal" else 0
        return comb(n - d + 1, 2) + d - 1 + k
    if kind == "matching_deleted":
        n = p[0]
        return comb(n, 2) - (n // 2 + n % 2)
    if kind == "h1":
        return 8
    if kind == "h2":
        return 10
    if kind == "h3":
        return edge_count(two_sided(7, 1))
    n = p[0]
    return 3 + comb(n - 4, 2) + 3 * (n - 4)
