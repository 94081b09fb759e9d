"""Graph data model and local-complementation operators.

Qubit graphs store one int bitmask per vertex (bit ``w`` of ``rows[v]`` is
the edge ``vw``).  Qudit graphs carry a symmetric weight matrix over Z_d for
prime d.  Both are immutable; every operator returns a new object.
"""

from __future__ import annotations

from math import isqrt
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Graph",
    "WeightedGraph",
    "SizeGuardError",
    "build_graph",
    "build_weighted_graph",
    "local_complement",
    "qudit_star",
    "qudit_scale",
    "connected_components",
    "iter_bits",
    "mask_of",
]


class SizeGuardError(Exception):
    """An operation exceeds its default size guard (override with force)."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """An undirected simple graph on vertices ``0..n-1``."""

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: Sequence[int]):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        if len(rows) != n:
            raise ValueError("need one adjacency row per vertex")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row < 0 or row & ~full:
                raise ValueError(f"row {v} has bits outside 0..{n - 1}")
            if (row >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v in range(n):
            for w in iter_bits(rows[v]):
                if not (rows[w] >> v) & 1:
                    raise ValueError(f"adjacency not symmetric at ({v}, {w})")
        self.n = n
        self.rows = tuple(rows)

    @classmethod
    def _wrap(cls, n: int, rows: tuple[int, ...]) -> "Graph":
        """Internal constructor for rows already known to be valid."""
        g = object.__new__(cls)
        g.n = n
        g.rows = rows
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls._wrap(n, tuple(rows))

    def neighbors(self, v: int) -> int:
        return self.rows[v]

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for v in range(self.n):
            row = self.rows[v] >> (v + 1)
            for w in iter_bits(row):
                out.append((v, v + 1 + w))
        return out

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()!r})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a validated qubit graph from an edge list."""
    return Graph.from_edges(n, edges)


def _is_prime(d: int) -> bool:
    if d < 2:
        return False
    if d < 4:
        return True
    if d % 2 == 0:
        return False
    for f in range(3, isqrt(d) + 1, 2):
        if d % f == 0:
            return False
    return True


class WeightedGraph:
    """A d-weighted graph over Z_d, d prime.

    ``weights[v][w]`` is the edge weight in ``0..d-1``; 0 means no edge.
    ``supports[v]`` caches the bitmask of neighbours of ``v``.
    """

    __slots__ = ("n", "d", "weights", "supports")

    def __init__(self, n: int, d: int, weights: Sequence[Sequence[int]]):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        if not _is_prime(d):
            raise ValueError(f"modulus {d} is not prime")
        if len(weights) != n:
            raise ValueError("need one weight row per vertex")
        rows = []
        for v, row in enumerate(weights):
            if len(row) != n:
                raise ValueError(f"weight row {v} has wrong length")
            for w, x in enumerate(row):
                if not (0 <= x < d):
                    raise ValueError(f"weight at ({v}, {w}) outside 0..{d - 1}")
                if v == w and x != 0:
                    raise ValueError(f"self-loop at vertex {v}")
                if row[w] != weights[w][v]:
                    raise ValueError(f"weights not symmetric at ({v}, {w})")
            rows.append(tuple(row))
        self.n = n
        self.d = d
        self.weights = tuple(rows)
        self.supports = tuple(
            mask_of(w for w, x in enumerate(row) if x) for row in rows
        )

    @classmethod
    def from_edges(
        cls, n: int, d: int, edges: Iterable[tuple[int, int, int]]
    ) -> "WeightedGraph":
        mat = [[0] * n for _ in range(n)]
        for u, v, x in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            mat[u][v] = x % d
            mat[v][u] = x % d
        return cls(n, d, mat)

    def weight(self, u: int, v: int) -> int:
        return self.weights[u][v]

    def degree(self, v: int) -> int:
        return self.supports[v].bit_count()

    def edges(self) -> list[tuple[int, int, int]]:
        out = []
        for v in range(self.n):
            for w in range(v + 1, self.n):
                x = self.weights[v][w]
                if x:
                    out.append((v, w, x))
        return out

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, WeightedGraph)
            and self.n == other.n
            and self.d == other.d
            and self.weights == other.weights
        )

    def __hash__(self) -> int:
        return hash((self.n, self.d, self.weights))

    def __repr__(self) -> str:
        return f"WeightedGraph(n={self.n}, d={self.d}, edges={self.edges()!r})"


def build_weighted_graph(
    n: int, d: int, edges: Iterable[tuple[int, int, int]]
) -> WeightedGraph:
    """Build a validated d-weighted graph from ``(u, v, weight)`` triples."""
    return WeightedGraph.from_edges(n, d, edges)


def local_complement(g: Graph, a: int) -> Graph:
    """Complement the subgraph induced on the neighbourhood of ``a``."""
    if not (0 <= a < g.n):
        raise ValueError(f"vertex {a} out of range")
    nb = g.rows[a]
    rows = list(g.rows)
    m = nb
    while m:
        low = m & -m
        v = low.bit_length() - 1
        m ^= low
        # toggle edges from v to the other neighbours of a, keep (v, v) clear
        rows[v] ^= nb ^ low
    return Graph._wrap(g.n, tuple(rows))


def qudit_star(g: WeightedGraph, w: int, a: int) -> WeightedGraph:
    """Apply the qudit local-complementation step ``*_a`` at vertex ``w``.

    Off-diagonal weights pick up ``a * weight(w, j) * weight(w, k)`` mod d.
    """
    if not (0 <= w < g.n):
        raise ValueError(f"vertex {w} out of range")
    d = g.d
    a = a % d
    if a == 0:
        return g
    wrow = g.weights[w]
    mat = [list(r) for r in g.weights]
    for j in range(g.n):
        wj = wrow[j]
        if not wj or j == w:
            continue
        for k in range(j + 1, g.n):
            if k == w:
                continue
            wk = wrow[k]
            if not wk:
                continue
            x = (mat[j][k] + a * wj * wk) % d
            mat[j][k] = x
            mat[k][j] = x
    return WeightedGraph(g.n, d, mat)


def qudit_scale(g: WeightedGraph, v: int, b: int) -> WeightedGraph:
    """Apply the qudit rescaling step ``o_b`` at vertex ``v`` (b nonzero)."""
    if not (0 <= v < g.n):
        raise ValueError(f"vertex {v} out of range")
    d = g.d
    b = b % d
    if b == 0:
        raise ValueError("scale factor must be nonzero mod d")
    if b == 1:
        return g
    mat = [list(r) for r in g.weights]
    for u in range(g.n):
        if u == v:
            continue
        x = (mat[v][u] * b) % d
        mat[v][u] = x
        mat[u][v] = x
    return WeightedGraph(g.n, d, mat)


def _support_rows(g: Graph | WeightedGraph) -> tuple[int, ...]:
    return g.rows if isinstance(g, Graph) else g.supports


def connected_components(g: Graph | WeightedGraph) -> list[int]:
    """Vertex bitmasks of the connected components, ordered by least member."""
    sup = _support_rows(g)
    seen = 0
    comps = []
    for v in range(g.n):
        if (seen >> v) & 1:
            continue
        comp = 1 << v
        frontier = 1 << v
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= sup[u]
            frontier = nxt & ~comp
            comp |= frontier
        comps.append(comp)
        seen |= comp
    return comps
