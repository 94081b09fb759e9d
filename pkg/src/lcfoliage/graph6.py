"""graph6 encoding for qubit graphs and a plain text format for weighted ones.

graph6 packs the upper triangle column by column into 6-bit chunks offset by
63.  Sizes up to 62 use a single byte; larger sizes (up to 258047) use ``~``
followed by three 6-bit bytes.

The weighted format is line based::

    d 3 n 4
    0 1 2
    1 2 1

with a ``u v weight`` line per edge, weights in ``1..d-1``.
"""

from __future__ import annotations

from .graph import Graph, WeightedGraph

__all__ = ["encode_graph6", "decode_graph6", "encode_weighted", "decode_weighted"]

_HEADER = ">>graph6<<"


def encode_graph6(g: Graph) -> str:
    n = g.n
    if n > 258047:
        raise ValueError("graph6 size header supports at most n = 258047 here")
    if n <= 62:
        out = [chr(n + 63)]
    else:
        out = ["~", chr(((n >> 12) & 63) + 63), chr(((n >> 6) & 63) + 63), chr((n & 63) + 63)]
    acc = 0
    nbits = 0
    for j in range(1, n):
        col = g.rows[j]
        for i in range(j):
            acc = (acc << 1) | ((col >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        acc <<= 6 - nbits
        out.append(chr(acc + 63))
    return "".join(out)


def decode_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if not s:
        raise ValueError("empty graph6 string")
    vals = []
    for ch in s:
        o = ord(ch)
        if o < 63 or o > 126:
            raise ValueError(f"invalid graph6 character {ch!r}")
        vals.append(o - 63)
    if vals[0] < 63:
        n = vals[0]
        body = vals[1:]
    else:
        if len(vals) < 4:
            raise ValueError("truncated graph6 size header")
        if vals[1] == 63:
            raise ValueError("8-byte graph6 size headers are not supported")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise ValueError(
            f"graph6 body has {len(body)} bytes, expected {need} for n={n}"
        )
    rows = [0] * n
    pos = 0
    for j in range(1, n):
        for i in range(j):
            bit = (body[pos // 6] >> (5 - pos % 6)) & 1
            pos += 1
            if bit:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    if need and body[-1] & ((1 << (need * 6 - nbits)) - 1):
        raise ValueError("graph6 padding bits are not zero")
    return Graph._wrap(n, tuple(rows))


def encode_weighted(g: WeightedGraph) -> str:
    lines = [f"d {g.d} n {g.n}"]
    for u, v, x in g.edges():
        lines.append(f"{u} {v} {x}")
    return "\n".join(lines) + "\n"


def decode_weighted(text: str) -> WeightedGraph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty weighted graph text")
    head = lines[0].split()
    if len(head) != 4 or head[0] != "d" or head[2] != "n":
        raise ValueError(f"bad weighted header {lines[0]!r}, expected 'd <d> n <n>'")
    try:
        d = int(head[1])
        n = int(head[3])
    except ValueError as exc:
        raise ValueError(f"bad weighted header {lines[0]!r}") from exc
    mat = [[0] * n for _ in range(n)]
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 3:
            raise ValueError(f"bad edge line {ln!r}, expected 'u v weight'")
        try:
            u, v, x = (int(p) for p in parts)
        except ValueError as exc:
            raise ValueError(f"bad edge line {ln!r}") from exc
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if not (1 <= x < d):
            raise ValueError(f"weight {x} outside 1..{d - 1}")
        if mat[u][v]:
            raise ValueError(f"duplicate edge ({u}, {v})")
        mat[u][v] = x
        mat[v][u] = x
    return WeightedGraph(n, d, mat)
