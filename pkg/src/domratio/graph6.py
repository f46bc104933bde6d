"""graph6 codec restricted to the single-byte size field (n <= 62)."""

from __future__ import annotations

from .errors import ParseError, SizeError
from .graph import Graph

HEADER = ">>graph6<<"
MAX_N = 62


def _pairs(n: int):
    # column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    for j in range(1, n):
        for i in range(j):
            yield i, j


def encode_graph6(g: Graph) -> str:
    if g.n > MAX_N:
        raise SizeError(f"graph6 codec supports n <= {MAX_N}, got {g.n}")
    opens = g.open_masks
    bits = [opens[j] >> i & 1 for i, j in _pairs(g.n)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(63 + g.n)]
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = value << 1 | b
        out.append(chr(63 + value))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line; an optional ``>>graph6<<`` prefix is skipped.

    Only canonical encodings are accepted (zero padding bits), so
    ``encode_graph6(parse_graph6(s))`` reproduces ``s`` byte for byte.
    """
    s = text.rstrip("\r\n")
    base = 0
    if s.startswith(HEADER):
        base = len(HEADER)
        s = s[base:]
    if not s:
        raise ParseError(f"byte {base}: missing size byte", base)
    for off, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"byte {base + off}: character {ch!r} outside graph6 range", base + off)
    n = ord(s[0]) - 63
    if n > MAX_N:
        raise SizeError(f"byte {base}: multi-byte size field (n > {MAX_N}) is unsupported")
    nbits = n * (n - 1) // 2
    want = 1 + (nbits + 5) // 6
    if len(s) < want:
        raise ParseError(f"byte {base + len(s)}: truncated, expected {want} bytes", base + len(s))
    if len(s) > want:
        raise ParseError(f"byte {base + want}: trailing garbage after graph6 data", base + want)
    bits = []
    for ch in s[1:]:
        value = ord(ch) - 63
        bits.extend(value >> (5 - k) & 1 for k in range(6))
    if any(bits[nbits:]):
        raise ParseError(f"byte {base + want - 1}: non-zero padding bits", base + want - 1)
    edges = [(i, j) for (i, j), b in zip(_pairs(n), bits) if b]
    return Graph.from_edges(n, edges)
