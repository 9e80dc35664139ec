"""graph6 encoding and decoding.

The format packs the upper triangle of the adjacency matrix, column by
column, into printable ASCII (63..126), six bits per byte, after a header
encoding the order.  Orders up to 62 use the one-byte header; larger orders
(up to this package's 512-vertex cap) use the four-byte ``126 + 18 bits``
header.  Decoding rejects out-of-range bytes, truncated payloads and
trailing bytes, naming the byte offset of the problem.
"""

from __future__ import annotations

from .bitset import bit
from .errors import CapExceeded, Graph6Error
from .graph import MAX_VERTICES, Graph

_HEADER = ">>graph6<<"


def _sextets(data: str, start: int):
    for i, ch in enumerate(data[start:], start=start):
        code = ord(ch) - 63
        if not 0 <= code <= 63:
            raise Graph6Error(f"byte {ch!r} outside graph6 range", offset=i)
        yield i, code


def parse_graph6(line: str) -> Graph:
    """Decode a single graph6 token (an optional ``>>graph6<<`` prefix is allowed)."""
    text = line.strip()
    if text.startswith(_HEADER):
        text = text[len(_HEADER):]
    if not text:
        raise Graph6Error("empty graph6 token", offset=0)

    pos = 0
    first = ord(text[0]) - 63
    if not 0 <= first <= 63:
        raise Graph6Error(f"byte {text[0]!r} outside graph6 range", offset=0)
    if first < 63:
        n = first
        pos = 1
    else:
        if len(text) < 2 or ord(text[1]) - 63 == 63:
            raise Graph6Error("8-byte order header not supported (order would exceed cap)", offset=1)
        if len(text) < 4:
            raise Graph6Error("truncated multi-byte order header", offset=len(text))
        n = 0
        for i in range(1, 4):
            code = ord(text[i]) - 63
            if not 0 <= code <= 63:
                raise Graph6Error(f"byte {text[i]!r} outside graph6 range", offset=i)
            n = (n << 6) | code
        pos = 4
    if n == 0:
        raise Graph6Error("order 0 not supported", offset=0)
    if n > MAX_VERTICES:
        raise CapExceeded(f"graph6 order {n} exceeds cap {MAX_VERTICES}")

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(text) - pos < nbytes:
        raise Graph6Error(
            f"truncated bit vector: need {nbytes} payload bytes, found {len(text) - pos}",
            offset=len(text),
        )
    if len(text) - pos > nbytes:
        raise Graph6Error("trailing bytes after bit vector", offset=pos + nbytes)

    adj = [0] * n
    bit_index = 0
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    for off, code in _sextets(text, pos):
        for k in range(5, -1, -1):
            if bit_index >= nbits:
                if (code >> k) & 1:
                    raise Graph6Error("nonzero padding bits", offset=off)
                continue
            if (code >> k) & 1:
                i, j = pairs[bit_index]
                adj[i] |= bit(j)
                adj[j] |= bit(i)
            bit_index += 1
    return Graph(n, tuple(adj))


def emit_graph6(g: Graph) -> str:
    """Canonical graph6 encoding of g in its current vertex order."""
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    else:
        head = chr(126) + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    out = []
    code = 0
    filled = 0
    for j in range(1, n):
        for i in range(j):
            code = (code << 1) | (1 if g.adj[i] & bit(j) else 0)
            filled += 1
            if filled == 6:
                out.append(chr(code + 63))
                code = 0
                filled = 0
    if filled:
        out.append(chr((code << (6 - filled)) + 63))
    return head + "".join(out)


def parse_graph6_lines(text: str) -> list[Graph]:
    """Decode one graph per nonempty line."""
    return [parse_graph6(ln) for ln in text.splitlines() if ln.strip()]
