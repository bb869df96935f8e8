"""graph6 encoding and decoding for simple graphs of order at most 64."""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from pathlib import Path

from forcing_lab.models.graph import MAX_VERTICES, Graph, GraphError

_OFFSET = 63
_MAX_CHAR = 126
_LONG_SIZE_MARKER = "~"
_HEADER_PREFIX = ">>"


class Graph6Error(GraphError):
    """Raised for malformed graph6 text or orders that cannot be encoded."""


def from_graph6(text: str) -> Graph:
    """Decode one graph6 line (no header); surrounding whitespace is ignored."""
    data = text.strip()
    if not data:
        raise Graph6Error("Empty graph6 string.")
    for position, char in enumerate(data):
        if not _OFFSET <= ord(char) <= _MAX_CHAR:
            raise Graph6Error(f"Character {char!r} at position {position} is outside [63, 126].")

    n, body = _decode_size(data)
    pair_count = n * (n - 1) // 2
    expected = (pair_count + 5) // 6
    if len(body) != expected:
        raise Graph6Error(
            f"Order {n} needs {expected} adjacency characters, found {len(body)}."
        )

    bits = 0
    for char in body:
        bits = (bits << 6) | (ord(char) - _OFFSET)
    padding = expected * 6 - pair_count
    if bits & ((1 << padding) - 1):
        raise Graph6Error("Trailing padding bits must be zero.")
    bits >>= padding

    rows = [0] * n
    index = pair_count - 1
    for j in range(1, n):
        for i in range(j):
            if bits >> index & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            index -= 1
    return Graph(n, tuple(rows))


def to_graph6(g: Graph) -> str:
    """Encode ``g``; bits run over the upper triangle column by column, big-endian."""
    chunks = [_encode_size(g.n)]
    value = 0
    width = 0
    for j in range(1, g.n):
        column = g.adj[j]
        for i in range(j):
            value = (value << 1) | (column >> i & 1)
            width += 1
            if width == 6:
                chunks.append(chr(value + _OFFSET))
                value = 0
                width = 0
    if width:
        chunks.append(chr((value << (6 - width)) + _OFFSET))
    return "".join(chunks)


def iter_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, str]]:
    """Yield ``(line_number, text)`` for each graph line, skipping blanks and ``>>`` headers."""
    for line_number, raw in enumerate(lines, start=1):
        text = raw.strip()
        if not text or text.startswith(_HEADER_PREFIX):
            continue
        yield line_number, text


def load_graph6_path(path: str | Path) -> list[Graph]:
    """Read every graph from a graph6 file."""
    content = Path(path).read_text(encoding="ascii")
    return [from_graph6(text) for _, text in iter_graph6_lines(content.splitlines())]


def _decode_size(data: str) -> tuple[int, str]:
    if data[0] != _LONG_SIZE_MARKER:
        return ord(data[0]) - _OFFSET, data[1:]
    if len(data) < 4 or data[1] == _LONG_SIZE_MARKER:
        raise Graph6Error("Malformed multi-byte size prefix.")
    n = 0
    for char in data[1:4]:
        n = (n << 6) | (ord(char) - _OFFSET)
    if n <= 62:
        raise Graph6Error(f"Order {n} must use the single-byte size form.")
    if n > MAX_VERTICES:
        raise Graph6Error(f"Order {n} exceeds the supported maximum of {MAX_VERTICES}.")
    return n, data[4:]


def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(n + _OFFSET)
    if n > MAX_VERTICES:
        raise Graph6Error(f"Order {n} exceeds the supported maximum of {MAX_VERTICES}.")
    return _LONG_SIZE_MARKER + "".join(chr((n >> shift & 0x3F) + _OFFSET) for shift in (12, 6, 0))


__all__ = ["Graph6Error", "from_graph6", "iter_graph6_lines", "load_graph6_path", "to_graph6"]
