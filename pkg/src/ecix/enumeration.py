"""Isomorphism-free enumeration of connected graphs.

Level i+1 is generated from level i by attaching a new vertex with every
nonempty neighborhood to every representative, deduplicating by canonical
key.  Every connected graph keeps some non-cut vertex, so connected
parents suffice.  Internal generation is capped at 9 vertices; larger
orders arrive via graph6 ingestion only.

Levels are cached per process (the level-9 set of 261080 keys is ~30 MB),
so repeated checks at one order reuse a single generation pass.
"""

from __future__ import annotations

import multiprocessing
import os
from typing import Callable, Iterator, Optional

from . import kernels
from .canon import rows_from_key
from .graphs import Graph

MAX_GENERATED_N = 9

#: Canonical connected-graph class counts.  1..6 are re-derived by the
#: labeled-enumeration oracle in the test suite; 7..9 are pinned to the
#: standard published values and reproduced by this generator.
KNOWN_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117, 9: 261080}

_LEVELS: dict[int, list[bytes]] = {1: [kernels.canonical_key(1, (0,))]}

ProgressFn = Optional[Callable[[int, int, int], None]]


def _children_keys(level: int, parents: list[bytes]) -> set[bytes]:
    out: set[bytes] = set()
    new_bit = 1 << level
    canonical_key = kernels.canonical_key
    nxt = level + 1
    for key in parents:
        _, rows = rows_from_key(key)
        for mask in range(1, new_bit):
            child = list(rows)
            mm = mask
            while mm:
                child[(mm & -mm).bit_length() - 1] |= new_bit
                mm &= mm - 1
            child.append(mask)
            out.add(canonical_key(nxt, child))
    return out


def _expand_level(level: int, parents: list[bytes], jobs: int,
                  progress: ProgressFn = None) -> list[bytes]:
    total = len(parents)
    # Process sharding only pays off once the level is large.
    if jobs > 1 and total * (1 << level) > 20000:
        chunk = max(1, total // (jobs * 4))
        chunks = [parents[i:i + chunk] for i in range(0, total, chunk)]
        keys: set[bytes] = set()
        done = 0
        ctx = multiprocessing.get_context()
        with ctx.Pool(jobs) as pool:
            for part, size in pool.imap_unordered(
                    _expand_chunk, [(level, c) for c in chunks]):
                keys |= part
                done += size
                if progress:
                    progress(level + 1, done, total)
    else:
        keys = set()
        done = 0
        for start in range(0, total, 256):
            keys |= _children_keys(level, parents[start:start + 256])
            done = min(total, start + 256)
            if progress:
                progress(level + 1, done, total)
    return sorted(keys)


def _expand_chunk(args: tuple[int, list[bytes]]) -> tuple[set[bytes], int]:
    level, parents = args
    return _children_keys(level, parents), len(parents)


def default_jobs() -> int:
    env = os.environ.get("ECIX_JOBS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _level_keys(n: int, jobs: int = 1, progress: ProgressFn = None) -> list[bytes]:
    if not 1 <= n <= MAX_GENERATED_N:
        raise ValueError(f"internal generation covers 1..{MAX_GENERATED_N} "
                         f"vertices, got {n}")
    top = max(_LEVELS)
    while top < n:
        _LEVELS[top + 1] = _expand_level(top, _LEVELS[top], jobs, progress)
        top += 1
    return _LEVELS[n]


def enumerate_connected(n: int, diameter: int | None = None,
                        size: int | None = None, jobs: int = 1,
                        progress: ProgressFn = None) -> Iterator[Graph]:
    """One canonical representative per isomorphism class of connected
    graphs on n vertices, in a fixed order, optionally filtered by
    diameter or edge count."""
    if diameter is not None and size is not None:
        raise ValueError("filter by diameter or by size, not both")
    for key in _level_keys(n, jobs, progress):
        _, rows = rows_from_key(key)
        if size is not None and sum(r.bit_count() for r in rows) // 2 != size:
            continue
        if diameter is not None:
            ecc = kernels.all_eccentricities(n, rows)
            if max(ecc) != diameter:
                continue
        yield Graph(n, rows)


def count_connected(n: int, diameter: int | None = None,
                    size: int | None = None, jobs: int = 1,
                    progress: ProgressFn = None) -> int:
    if diameter is None and size is None:
        return len(_level_keys(n, jobs, progress))
    return sum(1 for _ in enumerate_connected(n, diameter, size, jobs, progress))
