"""graph6 reading and writing, plus corpus files of one graph per line."""

from __future__ import annotations

import sys
from pathlib import Path
from typing import IO, Iterable, Iterator

from .graph import MAX_VERTICES, Graph

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """A graph6 string could not be decoded.

    ``kind`` is one of ``format``, ``bad_byte``, ``length``, ``too_large``,
    ``truncated``, ``padding`` or ``trailing``; ``offset`` is the byte
    position (after any header) where the problem was detected.
    """

    def __init__(self, kind: str, offset: int, message: str):
        super().__init__(f"{message} (byte {offset})")
        self.kind = kind
        self.offset = offset


def _encode_n(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    return bytes([126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)])


def to_graph6(g: Graph) -> str:
    out = bytearray(_encode_n(g.n))
    adj = g.adj
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        row = adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return out.decode("ascii")


def parse_graph6(text: str) -> Graph:
    line = text.strip("\r\n")
    if line.startswith(">>sparse6<<") or line.startswith(":"):
        raise Graph6Error("format", 0, "sparse6 input is not supported")
    if line.startswith(">>digraph6<<") or line.startswith("&"):
        raise Graph6Error("format", 0, "digraph6 input is not supported")
    if line.startswith(HEADER):
        line = line[len(HEADER):]
    data = line.encode("ascii", errors="replace")
    for pos, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise Graph6Error("bad_byte", pos, f"byte {byte!r} outside the graph6 range 63..126")
    if not data:
        raise Graph6Error("length", 0, "empty graph6 string")

    if data[0] < 126:
        n = data[0] - 63
        pos = 1
    else:
        if len(data) >= 2 and data[1] == 126:
            raise Graph6Error("too_large", 0, "8-byte length form exceeds the 64-vertex cap")
        if len(data) < 4:
            raise Graph6Error("length", len(data), "truncated extended length field")
        n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
        if n <= 62:
            raise Graph6Error("length", 0, f"extended length form used for n={n}")
        pos = 4
    if n > MAX_VERTICES:
        raise Graph6Error("too_large", 0, f"n={n} exceeds the {MAX_VERTICES}-vertex cap")

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[pos:pos + nbytes]
    if len(body) < nbytes:
        raise Graph6Error("truncated", len(data), f"expected {nbytes} adjacency bytes, got {len(body)}")
    if len(data) > pos + nbytes:
        raise Graph6Error("trailing", pos + nbytes, "unexpected bytes after the adjacency section")

    acc = 0
    for b in body:
        acc = acc << 6 | (b - 63)
    pad = nbytes * 6 - nbits
    if acc & ((1 << pad) - 1):
        raise Graph6Error("padding", pos + nbytes - 1, "non-zero padding bits")
    acc >>= pad

    adj = [0] * n
    k = nbits
    for j in range(1, n):
        for i in range(j):
            k -= 1
            if acc >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(n, adj, check=False)


def iter_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for number, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            yield parse_graph6(line)
        except Graph6Error as exc:
            raise Graph6Error(exc.kind, exc.offset, f"line {number}: {exc}") from None


def read_corpus(source: str | Path | IO[str]) -> Iterator[Graph]:
    """Stream graphs from a graph6 file; ``"-"`` reads standard input."""
    if hasattr(source, "read"):
        yield from iter_graph6_lines(source)  # type: ignore[arg-type]
        return
    if str(source) == "-":
        yield from iter_graph6_lines(sys.stdin)
        return
    with open(source, encoding="ascii") as fh:
        yield from iter_graph6_lines(fh)


def write_corpus(graphs: Iterable[Graph], fh: IO[str]) -> int:
    count = 0
    for g in graphs:
        fh.write(to_graph6(g) + "\n")
        count += 1
    return count
