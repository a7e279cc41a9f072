"""graph6 and plain edge-list serialization."""

from __future__ import annotations

from pathlib import Path
from typing import Iterator, TextIO

from .core import Graph, GraphError, _build, from_edge_list

GRAPH6_HEADER = b">>graph6<<"
MAX_GRAPH6_ORDER = (1 << 36) - 1


class GraphFormatError(ValueError):
    """Malformed graph6 or edge-list input; ``offset`` locates the bad byte."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


def _size_field(n: int) -> bytes:
    if n < 0 or n > MAX_GRAPH6_ORDER:
        raise GraphError(f"graph6 cannot encode n={n}")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def _pack_bits(code: int, width: int) -> bytes:
    nbytes = -(-width // 6)
    code <<= nbytes * 6 - width
    return bytes(((code >> (6 * (nbytes - 1 - k))) & 63) + 63 for k in range(nbytes))


def upper_triangle_code(g: Graph) -> int:
    """Edge bits in graph6 order (x01, x02, x12, x03, ...), first bit most significant."""
    code = 0
    adj = g.adjacency
    for j in range(1, g.n):
        col = adj[j]
        for i in range(j):
            code = (code << 1) | ((col >> i) & 1)
    return code


def encode_graph6(n: int, code: int) -> bytes:
    return _size_field(n) + _pack_bits(code, n * (n - 1) // 2)


def write_graph6(g: Graph) -> bytes:
    """graph6 record for ``g`` without header or trailing newline."""
    return encode_graph6(g.n, upper_triangle_code(g))


def _check_byte(b: int, offset: int) -> int:
    if not 63 <= b <= 126:
        raise GraphFormatError(f"byte {b!r} outside graph6 range 63..126", offset)
    return b - 63


def parse_graph6(line: bytes | str) -> Graph:
    """Decode one graph6 record (an optional ``>>graph6<<`` prefix is accepted)."""
    data = line.encode("ascii") if isinstance(line, str) else bytes(line)
    data = data.strip()
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
    if not data:
        raise GraphFormatError("empty graph6 record", 0)
    if data[0] in (ord(":"), ord("&")):
        raise GraphFormatError("sparse6/digraph6 records are not graph6", 0)

    if data[0] != 126:
        n = _check_byte(data[0], 0)
        pos = 1
    elif len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise GraphFormatError("truncated 8-byte size field", len(data))
        n = 0
        for k in range(2, 8):
            n = (n << 6) | _check_byte(data[k], k)
        pos = 8
    else:
        if len(data) < 4:
            raise GraphFormatError("truncated 4-byte size field", len(data))
        n = 0
        for k in range(1, 4):
            n = (n << 6) | _check_byte(data[k], k)
        pos = 4

    width = n * (n - 1) // 2
    nbytes = -(-width // 6)
    payload = data[pos:]
    if len(payload) < nbytes:
        raise GraphFormatError(
            f"truncated payload: expected {nbytes} bytes for n={n}, got {len(payload)}",
            len(data),
        )
    if len(payload) > nbytes:
        raise GraphFormatError("unexpected bytes after payload", pos + nbytes)

    code = 0
    for k, b in enumerate(payload):
        code = (code << 6) | _check_byte(b, pos + k)
    pad = nbytes * 6 - width
    if code & ((1 << pad) - 1):
        raise GraphFormatError("nonzero padding bits", pos + nbytes - 1)
    code >>= pad

    edges = []
    bit = width - 1
    for j in range(1, n):
        for i in range(j):
            if (code >> bit) & 1:
                edges.append((i, j))
            bit -= 1
    edges.sort()
    return _build(n, edges)


def read_graph6(source: str | Path | TextIO) -> Iterator[Graph]:
    """Stream graphs from a graph6 file (one record per line, blank lines skipped)."""
    if isinstance(source, (str, Path)):
        with open(source, "rb") as fh:
            yield from _read_graph6_lines(fh)
    else:
        yield from _read_graph6_lines(source)


def _read_graph6_lines(fh) -> Iterator[Graph]:
    for lineno, raw in enumerate(fh, start=1):
        line = raw.encode("ascii") if isinstance(raw, str) else raw
        if not line.strip():
            continue
        try:
            yield parse_graph6(line)
        except GraphFormatError as exc:
            raise GraphFormatError(f"line {lineno}: {exc}") from None


def format_edge_list(g: Graph) -> str:
    """Text form: ``"n m"`` then one ``"i j"`` line per edge, 0-based."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{i} {j}" for i, j in g.edges)
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows:
        raise GraphFormatError("empty edge-list input")
    try:
        header = [int(x) for x in rows[0]]
        pairs = [tuple(int(x) for x in r) for r in rows[1:]]
    except ValueError as exc:
        raise GraphFormatError(f"non-integer token in edge list: {exc}") from None
    if len(header) != 2:
        raise GraphFormatError("edge-list header must be 'n m'")
    n, m = header
    if any(len(p) != 2 for p in pairs):
        raise GraphFormatError("edge lines must hold exactly two vertex indices")
    if len(pairs) != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(pairs)}")
    try:
        return from_edge_list(n, pairs)
    except GraphError as exc:
        raise GraphFormatError(str(exc)) from None
