"""Reading and writing graphs as edge-list text and graph6 strings.

Edge-list format: first non-empty line is the vertex count n, every
following non-empty line is one edge "u v" with 0-based ids.

graph6 (n <= 62 only): byte 0 is n+63; the upper triangle of the
adjacency matrix in column-major order x(0,1), x(0,2), x(1,2), x(0,3), ...
is packed 6 bits per byte (most significant bit first), each byte offset
by 63, with zero bits padding the last byte.
"""

from __future__ import annotations

from .graphs import Graph, InvalidGraphError, build_graph

__all__ = [
    "parse_edgelist",
    "format_edgelist",
    "parse_graph6",
    "format_graph6",
    "parse_graph",
    "format_graph",
]

_G6_MAX_N = 62


def _triangle_pairs(n: int):
    for v in range(1, n):
        for u in range(v):
            yield u, v


def parse_edgelist(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise InvalidGraphError("empty edge list input")
    try:
        n = int(lines[0])
    except ValueError:
        raise InvalidGraphError(f"bad vertex count line: {lines[0]!r}") from None
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise InvalidGraphError(f"bad edge line: {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise InvalidGraphError(f"bad edge line: {ln!r}") from None
        edges.append((u, v))
    return build_graph(n, edges)


def format_edgelist(g: Graph) -> str:
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise InvalidGraphError("empty graph6 input")
    data = [ord(ch) - 63 for ch in s]
    if any(b < 0 or b > 63 for b in data):
        raise InvalidGraphError("graph6 byte out of range")
    n = data[0]
    if n == 63:
        raise InvalidGraphError("graph6 long-form n > 62 not supported")
    body = data[1:]
    nbits = n * (n - 1) // 2
    expect = (nbits + 5) // 6
    if len(body) != expect:
        raise InvalidGraphError(
            f"graph6 body length {len(body)} inconsistent with n={n}"
        )
    bits = []
    for b in body:
        for shift in range(5, -1, -1):
            bits.append((b >> shift) & 1)
    if any(bits[nbits:]):
        raise InvalidGraphError("graph6 padding bits must be zero")
    edges = [
        (u, v) for (u, v), bit in zip(_triangle_pairs(n), bits) if bit
    ]
    return build_graph(n, edges)


def format_graph6(g: Graph) -> str:
    if g.n > _G6_MAX_N:
        raise InvalidGraphError(f"graph6 output limited to n <= {_G6_MAX_N}")
    bits = [1 if g.has_edge(u, v) else 0 for u, v in _triangle_pairs(g.n)]
    while len(bits) % 6:
        bits.append(0)
    out = [chr(g.n + 63)]
    for i in range(0, len(bits), 6):
        byte = 0
        for bit in bits[i : i + 6]:
            byte = (byte << 1) | bit
        out.append(chr(byte + 63))
    return "".join(out)


def parse_graph(text: str, fmt: str) -> Graph:
    if fmt == "edgelist":
        return parse_edgelist(text)
    if fmt == "graph6":
        return parse_graph6(text)
    raise InvalidGraphError(f"unknown graph format: {fmt!r}")


def format_graph(g: Graph, fmt: str) -> str:
    if fmt == "edgelist":
        return format_edgelist(g)
    if fmt == "graph6":
        return format_graph6(g) + "\n"
    raise InvalidGraphError(f"unknown graph format: {fmt!r}")
