"""graph6 and edge-list encodings.

graph6 layout: a size field N(n), then the upper triangle of the adjacency
matrix read column by column (x01, x02, x12, x03, ...), packed big-endian
six bits per byte, every byte offset by 63, last byte zero-padded.
"""

from __future__ import annotations

from collections.abc import Iterator

from .errors import BadEdgeList, BadGraph6, GraphError
from .graph import Graph, from_edge_list

HEADER = b">>graph6<<"


def _encode_size(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise BadGraph6(f"n={n} exceeds the graph6 size limit")


def _decode_size(data: bytes) -> tuple[int, int]:
    """Return (n, offset of the first body byte)."""
    if not data:
        raise BadGraph6("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        field, start = data[2:8], 2
    else:
        field, start = data[1:4], 1
    if len(field) not in (3, 6):
        raise BadGraph6("truncated size field")
    n = 0
    for b in field:
        if not 63 <= b <= 126:
            raise BadGraph6(f"byte {b} outside 63..126 in size field")
        n = (n << 6) | (b - 63)
    return n, start + len(field)


def write_graph6(g: Graph, header: bool = False) -> bytes:
    n, adj = g.n, g.adj
    bits = 0
    nbits = n * (n - 1) // 2
    for j in range(1, n):
        row = adj[j]
        for i in range(j):
            bits = (bits << 1) | (row >> i & 1)
    pad = -nbits % 6
    bits <<= pad
    nbytes = (nbits + pad) // 6
    body = bytes(((bits >> (6 * (nbytes - 1 - k))) & 63) + 63 for k in range(nbytes))
    return (HEADER if header else b"") + _encode_size(n) + body


def parse_graph6(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii", errors="replace")
    data = data.strip()
    if data.startswith(HEADER):
        data = data[len(HEADER):]
    if data[:1] in (b":", b";", b"&"):
        raise BadGraph6("sparse6/digraph6 input is not graph6")
    n, pos = _decode_size(data)
    if n < 1:
        raise BadGraph6(f"graph6 size {n} is not a positive vertex count")
    body = data[pos:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise BadGraph6(f"body has {len(body)} bytes, expected {(nbits + 5) // 6} for n={n}")
    bits = 0
    for b in body:
        if not 63 <= b <= 126:
            raise BadGraph6(f"byte {b} outside 63..126 in body")
        bits = (bits << 6) | (b - 63)
    pad = len(body) * 6 - nbits
    if bits & ((1 << pad) - 1):
        raise BadGraph6("nonzero padding bits")
    bits >>= pad
    adj = [0] * n
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if bits >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k -= 1
    return Graph(n, tuple(adj))


def iter_graph6_lines(text: bytes | str) -> Iterator[tuple[int, Graph]]:
    """Yield (line number, graph) for each non-blank line of a graph6 stream."""
    if isinstance(text, str):
        text = text.encode("ascii", errors="replace")
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        try:
            yield lineno, parse_graph6(line)
        except BadGraph6 as exc:
            raise BadGraph6(f"line {lineno}: {exc}") from None


def parse_edge_list(text: str) -> Graph:
    """Parse ``n <count>`` followed by one ``u v`` pair per line; ``#`` starts a comment."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].split()
        if not line:
            continue
        if n is None:
            if len(line) != 2 or line[0] != "n":
                raise BadEdgeList(f"line {lineno}: expected 'n <count>', got {raw.strip()!r}")
            try:
                n = int(line[1])
            except ValueError:
                raise BadEdgeList(f"line {lineno}: bad vertex count {line[1]!r}") from None
            continue
        if len(line) != 2:
            raise BadEdgeList(f"line {lineno}: expected 'u v', got {raw.strip()!r}")
        try:
            edges.append((int(line[0]), int(line[1])))
        except ValueError:
            raise BadEdgeList(f"line {lineno}: non-integer vertex in {raw.strip()!r}") from None
    if n is None:
        raise BadEdgeList("missing 'n <count>' line")
    try:
        return from_edge_list(n, edges)
    except GraphError as exc:
        raise BadEdgeList(str(exc)) from None


def write_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
