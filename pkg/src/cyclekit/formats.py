"""Graph ingestion and emission: graph6 and plain edge lists.

graph6 follows the standard ASCII encoding: an optional ">>graph6<<"
header, N(n), then the upper triangle of the adjacency matrix packed
into 6-bit groups (bit (i, j) for i < j, ordered by j then i, first bit
most significant, each group offset by 63).
"""

from __future__ import annotations

from .graph import Graph

HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr((n >> s & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr((n >> s & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError("vertex count too large for graph6")


def _decode_n(text: str) -> tuple[int, str]:
    if not text:
        raise ValueError("empty graph6 string")
    if text[0] != "~":
        return ord(text[0]) - 63, text[1:]
    if len(text) >= 2 and text[1] != "~":
        if len(text) < 4:
            raise ValueError("truncated graph6 size field")
        n = 0
        for ch in text[1:4]:
            n = n << 6 | (ord(ch) - 63)
        return n, text[4:]
    if len(text) < 8:
        raise ValueError("truncated graph6 size field")
    n = 0
    for ch in text[2:8]:
        n = n << 6 | (ord(ch) - 63)
    return n, text[8:]


def to_graph6(g: Graph, header: bool = False) -> str:
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = val << 1 | b
        chars.append(chr(val + 63))
    return (HEADER if header else "") + _encode_n(g.n) + "".join(chars)


def from_graph6(text: str) -> Graph:
    text = text.strip()
    if text.startswith(HEADER):
        text = text[len(HEADER) :]
    n, body = _decode_n(text)
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) < need:
        raise ValueError("graph6 body shorter than expected")
    body = body[:need]
    bits = []
    for ch in body:
        val = ord(ch) - 63
        if not 0 <= val <= 63:
            raise ValueError(f"invalid graph6 character {ch!r}")
        bits.extend(val >> s & 1 for s in (5, 4, 3, 2, 1, 0))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def parse_edge_list(text: str) -> Graph:
    """One "u v" pair per line; blank lines and '#' comments ignored.

    The vertex count is one more than the largest id mentioned.
    """
    edges = []
    top = -1
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"expected 'u v', got {raw!r}")
        u, v = int(parts[0]), int(parts[1])
        if u < 0 or v < 0:
            raise ValueError("vertex ids must be non-negative")
        top = max(top, u, v)
        edges.append((u, v))
    return Graph.from_edges(top + 1, edges)


def load_graph(path: str, fmt: str = "auto") -> Graph:
    with open(path, "r", encoding="ascii") as fh:
        text = fh.read()
    if fmt == "g6":
        return from_graph6(text)
    if fmt == "edges":
        return parse_edge_list(text)
    if fmt != "auto":
        raise ValueError(f"unknown format {fmt!r}")
    stripped = text.strip()
    if stripped.startswith(HEADER):
        return from_graph6(stripped)
    first = stripped.splitlines()[0].strip() if stripped else ""
    if first and (" " in first or first.startswith("#")):
        return parse_edge_list(text)
    return from_graph6(stripped)
