"""Bipartite entanglement entropies of graph states.

For a qubit graph state the entropy across a bipartition (A, A') equals the
GF(2) rank of the adjacency submatrix with rows in A and columns in A'.
When the graph is in normal form (no axils) the same number comes from a
much smaller matrix indexed by foliage parts: the quotient adjacency plus a
diagonal 1 on clique parts.

A dense statevector oracle (exact amplitudes, numpy SVD) is kept alongside
as an independent route for small systems, including prime-d qudits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .foliage import FoliageRepresentation, PartType, foliage_partition, foliage_representation
from .gf2 import BitMatrix, gf2_rank, submatrix
from .graph import Graph, SizeGuardError, WeightedGraph, connected_components, iter_bits

__all__ = [
    "EntropyVector",
    "UniformityReport",
    "entropy",
    "schmidt_vector",
    "e_matrix",
    "entropy_via_foliage",
    "marginal_maximally_mixed",
    "uniformity",
    "statevector_entropy_oracle",
]

_SCHMIDT_GUARD = 24
_UNIFORMITY_GUARD = 20
_STATEVECTOR_GUARD = 1 << 20


def entropy(g: Graph, subset: int) -> int:
    """Entanglement entropy across ``(subset, complement)`` in bits.

    ``subset`` is a vertex bitmask.
    """
    full = (1 << g.n) - 1
    if subset & ~full:
        raise ValueError("subset has bits outside the vertex range")
    comp = full & ~subset
    return gf2_rank(rows_restricted(g, subset, comp))


def rows_restricted(g: Graph, row_mask: int, col_mask: int) -> list[int]:
    """Adjacency rows of ``row_mask`` vertices, masked to ``col_mask`` columns."""
    return [g.rows[v] & col_mask for v in iter_bits(row_mask)]


@dataclass(frozen=True)
class EntropyVector:
    """Entropy for every vertex subset, packed one byte per bitmask."""

    n: int
    values: bytes

    def __getitem__(self, subset: int) -> int:
        return self.values[subset]

    def to_csv(self) -> str:
        lines = ["mask,size,entropy"]
        for mask in range(1 << self.n):
            lines.append(f"{mask},{mask.bit_count()},{self.values[mask]}")
        return "\n".join(lines) + "\n"


def schmidt_vector(g: Graph, force: bool = False) -> EntropyVector:
    """Entropies for all 2^n bipartitions.

    Uses the complement symmetry S_A = S_A' to halve the work.
    """
    if g.n > _SCHMIDT_GUARD and not force:
        raise SizeGuardError(
            f"schmidt_vector is limited to n <= {_SCHMIDT_GUARD} (force to override)"
        )
    full = (1 << g.n) - 1
    vals = bytearray(1 << g.n)
    half = g.n // 2
    for mask in range(1 << g.n):
        if mask.bit_count() > half:
            continue
        s = entropy(g, mask)
        vals[mask] = s
        vals[full ^ mask] = s
    return EntropyVector(g.n, bytes(vals))


def e_matrix(rep: FoliageRepresentation) -> BitMatrix:
    """Quotient adjacency plus a diagonal 1 on K parts, over part indices."""
    if rep.axils:
        raise ValueError("E-matrix needs an axil-free representation (normal form)")
    k = len(rep.partition.parts)
    rows = []
    for i in range(k):
        row = rep.quotient.rows[i]
        if rep.types[i] is PartType.K:
            row |= 1 << i
        rows.append(row)
    labels = tuple(range(k))
    return BitMatrix(tuple(rows), k, labels, labels)


def entropy_via_foliage(g: Graph, subset: int) -> int:
    """Entropy from the part-indexed matrix; requires ``g`` in normal form."""
    full = (1 << g.n) - 1
    if subset & ~full:
        raise ValueError("subset has bits outside the vertex range")
    rep = foliage_representation(g)
    em = e_matrix(rep)  # raises if g is not in normal form
    comp = full & ~subset
    row_parts = 0
    col_parts = 0
    for i, m in enumerate(rep.partition.masks):
        if m & subset:
            row_parts |= 1 << i
        if m & comp:
            col_parts |= 1 << i
    return gf2_rank(submatrix(em.rows, row_parts, col_parts))


def marginal_maximally_mixed(g: Graph, v: int, w: int) -> bool:
    """Whether the two-qubit marginal of ``v, w`` is maximally mixed.

    Defined for connected graphs; holds exactly when the two vertices lie
    in different foliage parts.
    """
    if v == w:
        raise ValueError("vertices must be distinct")
    if len(connected_components(g)) != 1:
        raise ValueError("marginal criterion assumes a connected graph")
    part = foliage_partition(g)
    return part.part_of(v) != part.part_of(w)


@dataclass(frozen=True)
class UniformityReport:
    n: int
    k_max: int
    witness: int | None  # smallest failing subset, as a bitmask


def uniformity(g: Graph, force: bool = False) -> UniformityReport:
    """Largest k such that every k-subset is maximally entangled.

    Checks subset sizes in increasing order and stops at the first failure;
    entropy can only be maximal for larger sets if it is for smaller ones.
    """
    if g.n > _UNIFORMITY_GUARD and not force:
        raise SizeGuardError(
            f"uniformity is limited to n <= {_UNIFORMITY_GUARD} (force to override)"
        )
    for k in range(1, g.n // 2 + 1):
        for combo in combinations(range(g.n), k):
            mask = 0
            for v in combo:
                mask |= 1 << v
            if entropy(g, mask) != k:
                return UniformityReport(g.n, k - 1, mask)
    return UniformityReport(g.n, g.n // 2, None)


def statevector_entropy_oracle(g: Graph | WeightedGraph, subset: int, force: bool = False) -> int:
    """Entropy via explicit amplitudes and a singular value decomposition.

    Builds the full d^n statevector, so only small systems are allowed.
    The answer must come out as log_d of an exact power of d; anything else
    means a bug somewhere and raises.
    """
    if isinstance(g, WeightedGraph):
        d = g.d
        weights = g.weights
    else:
        d = 2
        weights = [
            [(g.rows[v] >> w) & 1 for w in range(g.n)] for v in range(g.n)
        ]
    n = g.n
    if d**n > _STATEVECTOR_GUARD and not force:
        raise SizeGuardError(
            f"statevector oracle is limited to d^n <= {_STATEVECTOR_GUARD} (force to override)"
        )
    full = (1 << n) - 1
    if subset & ~full:
        raise ValueError("subset has bits outside the vertex range")
    size = d**n
    idx = np.arange(size)
    digits = [(idx // d ** (n - 1 - v)) % d for v in range(n)]
    phase = np.zeros(size, dtype=np.int64)
    for v in range(n):
        for w in range(v + 1, n):
            x = weights[v][w]
            if x:
                phase += x * digits[v] * digits[w]
    amps = np.exp(2j * np.pi * (phase % d) / d) / math.sqrt(size)
    a_axes = list(iter_bits(subset))
    b_axes = [v for v in range(n) if not (subset >> v) & 1]
    tensor = amps.reshape([d] * n)
    mat = tensor.transpose(a_axes + b_axes).reshape(d ** len(a_axes), d ** len(b_axes))
    sing = np.linalg.svd(mat, compute_uv=False)
    rank = int(np.count_nonzero(sing > 1e-9 * sing[0]))
    ent = round(math.log(rank, d))
    if d**ent != rank:
        raise ArithmeticError(
            f"oracle rank {rank} is not a power of d={d}; entropy would not be integral"
        )
    return ent
