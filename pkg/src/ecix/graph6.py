"""graph6 interchange (short form, n <= 62).

One printable-ASCII line per graph: byte n+63, then the upper triangle
of the adjacency matrix in column order -- x(0,1), x(0,2), x(1,2),
x(0,3), ... -- packed 6 bits per byte (first bit most significant),
each byte offset by 63, zero-padded to a byte boundary.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .graphs import Graph, MAX_N


class Graph6Error(ValueError):
    """Malformed graph6 record."""


def encode_graph6(g: Graph) -> str:
    return encode_rows(g.n, g.adj)


def encode_rows(n: int, rows) -> str:
    if n < 1 or n > MAX_N:
        raise Graph6Error(f"graph6 short form needs 1 <= n <= {MAX_N}, got {n}")
    out = [chr(n + 63)]
    acc = 0
    nbits = 0
    for j in range(1, n):
        for i in range(j):
            acc = (acc << 1) | (rows[i] >> j & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def decode_graph6(text: str) -> Graph:
    line = text.rstrip("\n")
    if not line:
        raise Graph6Error("empty record")
    data = [ord(ch) for ch in line]
    if data[0] == 126:
        raise Graph6Error("long-form records (n > 62) are not supported")
    for pos, b in enumerate(data):
        if b < 63 or b > 126:
            raise Graph6Error(f"byte {b} at position {pos} outside 63..126")
    n = data[0] - 63
    if n < 1:
        raise Graph6Error("vertex count must be at least 1")
    npairs = n * (n - 1) // 2
    want = 1 + (npairs + 5) // 6
    if len(data) != want:
        raise Graph6Error(f"record for n={n} must have {want} bytes, got {len(data)}")
    bits = []
    for b in data[1:]:
        val = b - 63
        for shift in range(5, -1, -1):
            bits.append(val >> shift & 1)
    rows = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            idx += 1
    if any(bits[idx:]):
        raise Graph6Error("nonzero padding bits")
    return Graph(n, tuple(rows))


def iter_graph6(lines: Iterable[str]) -> Iterator[tuple[int, Graph]]:
    """Decode a stream of graph6 lines, yielding (line_number, graph).

    Blank lines and comment lines starting with '>' (header convention)
    are skipped.  Raises Graph6Error annotated with the line number.
    """
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith(">"):
            continue
        try:
            yield lineno, decode_graph6(line)
        except Graph6Error as exc:
            raise Graph6Error(f"line {lineno}: {exc}") from None
