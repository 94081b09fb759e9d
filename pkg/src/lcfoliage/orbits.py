"""LC orbits, equivalence classes, automorphism groups, and counting bounds.

The labelled orbit of a graph is its closure under local complementation at
every vertex.  Collapsing the orbit by graph isomorphism gives the LC class.
Class censuses over all (connected) graphs of a given order are built by
joining canonical isomorphism types along single complementation moves.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import factorial

from .canonical import canonical_form, canonical_key
from .foliage import FoliagePartition, foliage_partition, saturation
from .graph import Graph, SizeGuardError, connected_components, iter_bits, local_complement

__all__ = [
    "OrbitReport",
    "AutReport",
    "LCClass",
    "ClassCensus",
    "SaturationStatsRow",
    "lc_orbit",
    "nonisomorphic_graphs",
    "lc_classes",
    "lc_automorphism_group",
    "aut_bounds",
    "aut_in_group",
    "saturation_stats",
    "symmetry_table",
    "partition_number",
    "class_lower_bound",
    "integer_partitions",
    "graph_for_partition",
]

_ORBIT_GUARD = 16
_CLASS_GUARD = 8


def _tau_rows(rows: tuple[int, ...], a: int) -> tuple[int, ...]:
    nb = rows[a]
    out = list(rows)
    m = nb
    while m:
        low = m & -m
        out[low.bit_length() - 1] ^= nb ^ low
        m ^= low
    return tuple(out)


def _permute_rows(rows: tuple[int, ...], perm: tuple[int, ...]) -> tuple[int, ...]:
    n = len(rows)
    out = [0] * n
    for v in range(n):
        row = 0
        for w in iter_bits(rows[v]):
            row |= 1 << perm[w]
        out[perm[v]] = row
    return tuple(out)


@dataclass(frozen=True)
class OrbitReport:
    representative: Graph
    labeled_size: int
    class_size: int
    members: tuple[tuple[int, ...], ...]  # adjacency rows, sorted

    def member_graphs(self) -> list[Graph]:
        return [Graph._wrap(self.representative.n, rows) for rows in self.members]


def lc_orbit(g: Graph, force: bool = False) -> OrbitReport:
    """Breadth-first closure of ``g`` under single local complementations.

    ``class_size`` counts isomorphism types inside the orbit, which is the
    size of the whole LC class of ``g``.
    """
    if g.n > _ORBIT_GUARD and not force:
        raise SizeGuardError(
            f"lc_orbit is limited to n <= {_ORBIT_GUARD} (force to override)"
        )
    start = g.rows
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for rows in frontier:
            for a in range(g.n):
                nb = rows[a]
                if nb & (nb - 1) == 0:
                    continue  # degree 0 or 1: complementation is the identity
                image = _tau_rows(rows, a)
                if image not in seen:
                    seen.add(image)
                    nxt.append(image)
        frontier = nxt
    members = tuple(sorted(seen))
    types = {canonical_key(Graph._wrap(g.n, rows)) for rows in members}
    return OrbitReport(g, len(members), len(types), members)


# ---------------------------------------------------------------------------
# exhaustive isomorphism-type enumeration by vertex augmentation

_ATLAS: dict[int, list[Graph]] = {}


def _extend_chunk(args: tuple[int, list[tuple[int, ...]]]) -> dict[bytes, tuple[int, ...]]:
    n, parents = args
    found: dict[bytes, tuple[int, ...]] = {}
    for rows in parents:
        for mask in range(1 << (n - 1)):
            ext = tuple(
                rows[v] | ((mask >> v & 1) << (n - 1)) for v in range(n - 1)
            ) + (mask,)
            key, perm = canonical_form(Graph._wrap(n, ext))
            if key not in found:
                found[key] = _permute_rows(ext, perm)
    return found


def nonisomorphic_graphs(n: int, connected: bool = False, workers: int = 1) -> list[Graph]:
    """All isomorphism types of order ``n``, canonical, sorted by key.

    Built level by level: every type on ``n`` vertices arises by attaching a
    new vertex to some type on ``n - 1``.  Levels are cached per process.
    """
    if n < 1:
        raise ValueError("need at least one vertex")
    if n not in _ATLAS:
        if n == 1:
            _ATLAS[1] = [Graph._wrap(1, (0,))]
        else:
            parents = [g.rows for g in nonisomorphic_graphs(n - 1, workers=workers)]
            if workers > 1 and len(parents) >= workers:
                chunk = (len(parents) + workers - 1) // workers
                jobs = [
                    (n, parents[i : i + chunk]) for i in range(0, len(parents), chunk)
                ]
                found: dict[bytes, tuple[int, ...]] = {}
                with ProcessPoolExecutor(max_workers=workers) as pool:
                    for part in pool.map(_extend_chunk, jobs):
                        for key, rows in part.items():
                            found.setdefault(key, rows)
            else:
                found = _extend_chunk((n, parents))
            _ATLAS[n] = [Graph._wrap(n, found[k]) for k in sorted(found)]
    level = _ATLAS[n]
    if connected:
        return [g for g in level if len(connected_components(g)) == 1]
    return list(level)


# ---------------------------------------------------------------------------
# class census

@dataclass(frozen=True)
class LCClass:
    representative: Graph  # canonical, least key in the class
    size: int              # isomorphism types in the class


@dataclass(frozen=True)
class ClassCensus:
    n: int
    connected_only: bool
    classes: tuple[LCClass, ...]

    @property
    def count(self) -> int:
        return len(self.classes)


_CENSUS_CACHE: dict[tuple[int, bool], ClassCensus] = {}


def _move_keys_chunk(args: tuple[int, list[tuple[int, ...]]]) -> list[list[bytes]]:
    n, graphs = args
    out = []
    for rows in graphs:
        keys = []
        for a in range(n):
            nb = rows[a]
            if nb & (nb - 1) == 0:
                continue
            keys.append(canonical_key(Graph._wrap(n, _tau_rows(rows, a))))
        out.append(keys)
    return out


def lc_classes(
    n: int,
    connected_only: bool = True,
    force: bool = False,
    workers: int = 1,
) -> ClassCensus:
    """Partition the isomorphism types of order ``n`` into LC classes.

    Types are joined whenever one complementation move maps one to the
    other; classes are the resulting connected components.  Moves never
    change vertex count or connectivity, so the move graph stays inside the
    enumerated set.
    """
    if n > _CLASS_GUARD and not force:
        raise SizeGuardError(
            f"lc_classes is limited to n <= {_CLASS_GUARD} (force to override)"
        )
    cached = _CENSUS_CACHE.get((n, connected_only))
    if cached is not None:
        return cached
    graphs = nonisomorphic_graphs(n, connected=connected_only, workers=workers)
    keys = [canonical_key(g) for g in graphs]
    index = {k: i for i, k in enumerate(keys)}

    parent = list(range(len(graphs)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    rows_list = [g.rows for g in graphs]
    if workers > 1 and len(rows_list) >= workers:
        chunk = (len(rows_list) + workers - 1) // workers
        jobs = [(n, rows_list[i : i + chunk]) for i in range(0, len(rows_list), chunk)]
        move_keys: list[list[bytes]] = []
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_move_keys_chunk, jobs):
                move_keys.extend(part)
    else:
        move_keys = _move_keys_chunk((n, rows_list))
    for i, keys_i in enumerate(move_keys):
        for k2 in keys_i:
            union(i, index[k2])

    groups: dict[int, list[int]] = {}
    for i in range(len(graphs)):
        groups.setdefault(find(i), []).append(i)
    classes = []
    for root in sorted(groups, key=lambda r: keys[r]):
        members = groups[root]
        lead = min(members, key=lambda i: keys[i])
        classes.append(LCClass(graphs[lead], len(members)))
    census = ClassCensus(n, connected_only, tuple(classes))
    _CENSUS_CACHE[(n, connected_only)] = census
    return census


# ---------------------------------------------------------------------------
# LC automorphisms

@dataclass(frozen=True)
class AutReport:
    order: int
    generators: tuple[tuple[int, ...], ...]
    aut_in_order: int
    aut_out_upper_order: int
    labeled_size: int
    class_size: int
    interplay: Fraction  # order * class_size / labeled_size


def _closure(gens: list[tuple[int, ...]], n: int) -> set[tuple[int, ...]]:
    ident = tuple(range(n))
    group = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for q in gens:
                r = tuple(q[p[v]] for v in range(n))
                if r not in group:
                    group.add(r)
                    nxt.append(r)
        frontier = nxt
    return group


def _greedy_generators(elements: list[tuple[int, ...]], n: int) -> list[tuple[int, ...]]:
    gens: list[tuple[int, ...]] = []
    group: set[tuple[int, ...]] = {tuple(range(n))}
    for p in elements:
        if p not in group:
            gens.append(p)
            group = _closure(gens, n)
    return gens


def lc_automorphism_group(g: Graph, force: bool = False) -> AutReport:
    """Permutations whose relabelling of ``g`` stays inside its LC orbit.

    Brute force over all n! permutations, so kept to small orders.
    """
    if g.n > _CLASS_GUARD and not force:
        raise SizeGuardError(
            f"lc_automorphism_group is limited to n <= {_CLASS_GUARD} (force to override)"
        )
    orbit = lc_orbit(g, force=force)
    member_set = set(orbit.members)
    auts = [
        sigma
        for sigma in permutations(range(g.n))
        if _permute_rows(g.rows, sigma) in member_set
    ]
    part = foliage_partition(g)
    lower, upper = aut_bounds(part)
    return AutReport(
        order=len(auts),
        generators=tuple(_greedy_generators(auts, g.n)),
        aut_in_order=lower,
        aut_out_upper_order=upper // lower,
        labeled_size=orbit.labeled_size,
        class_size=orbit.class_size,
        interplay=Fraction(len(auts) * orbit.class_size, orbit.labeled_size),
    )


def aut_bounds(part: FoliagePartition) -> tuple[int, int]:
    """Lower and upper bounds on the LC-automorphism order from part sizes.

    Permuting within parts is always allowed; on top of that, at most the
    permutations of equally-sized parts.
    """
    sizes = part.sizes()
    counts: dict[int, int] = {}
    for s in sizes:
        counts[s] = counts.get(s, 0) + 1
    lower = 1
    upper_extra = 1
    for s, t in counts.items():
        lower *= factorial(s) ** t
        upper_extra *= factorial(t)
    return lower, lower * upper_extra


def aut_in_group(part: FoliagePartition) -> list[tuple[int, ...]]:
    """Adjacent-transposition generators of the within-part permutations."""
    n = part.n
    gens = []
    for members in part.parts:
        for a, b in zip(members, members[1:]):
            p = list(range(n))
            p[a], p[b] = b, a
            gens.append(tuple(p))
    return gens


# ---------------------------------------------------------------------------
# census-level tables

@dataclass(frozen=True)
class SaturationStatsRow:
    n: int
    class_count: int
    avg_time: Fraction
    avg_size: Fraction
    reducible: Fraction
    fully_reducible: Fraction

    def two_decimals(self) -> tuple[str, str, str, str]:
        return (
            _fmt2(self.avg_time),
            _fmt2(self.avg_size),
            _fmt2(self.reducible),
            _fmt2(self.fully_reducible),
        )


def _fmt2(x: Fraction) -> str:
    cents = round(x * 100)
    return f"{cents // 100}.{cents % 100:02d}"


def saturation_stats(n: int, force: bool = False, workers: int = 1) -> SaturationStatsRow:
    """Average saturation behaviour over the connected LC classes of order ``n``."""
    census = lc_classes(n, connected_only=True, force=force, workers=workers)
    times = []
    sizes = []
    reducible = 0
    fully = 0
    for cls in census.classes:
        rep = cls.representative
        sat = saturation(rep)
        times.append(sat.time)
        sizes.append(sat.size)
        if not foliage_partition(rep).is_trivial:
            reducible += 1
        if sat.size == 1:
            fully += 1
    count = census.count
    return SaturationStatsRow(
        n=n,
        class_count=count,
        avg_time=Fraction(sum(times), count),
        avg_size=Fraction(sum(sizes), count),
        reducible=Fraction(reducible, count),
        fully_reducible=Fraction(fully, count),
    )


def symmetry_table(
    n: int, connected_only: bool = True, force: bool = False, workers: int = 1
) -> list[tuple]:
    """Per-class symmetry rows: partition shape, aut orders, orbit sizes.

    Columns: class_id, n, partition, aut_in, aut_out_upper, aut_order, L, C, I.
    """
    census = lc_classes(n, connected_only=connected_only, force=force, workers=workers)
    rows = []
    for cid, cls in enumerate(census.classes, start=1):
        rep = cls.representative
        report = lc_automorphism_group(rep, force=force)
        shape = "+".join(
            str(s) for s in sorted(foliage_partition(rep).sizes())
        )
        rows.append(
            (
                cid,
                n,
                shape,
                report.aut_in_order,
                report.aut_out_upper_order,
                report.order,
                report.labeled_size,
                report.class_size,
                _fmt2(report.interplay),
            )
        )
    return rows


# ---------------------------------------------------------------------------
# integer partitions and the counting bound

_PARTITION_NUMBERS = [1]


def partition_number(n: int) -> int:
    """Number of integer partitions of ``n``, by the pentagonal recurrence."""
    if n < 0:
        raise ValueError("partition numbers are defined for n >= 0")
    while len(_PARTITION_NUMBERS) <= n:
        m = len(_PARTITION_NUMBERS)
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * _PARTITION_NUMBERS[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * _PARTITION_NUMBERS[m - g2]
            k += 1
        _PARTITION_NUMBERS.append(total)
    return _PARTITION_NUMBERS[n]


def class_lower_bound(n: int) -> int:
    """Lower bound on the number of connected LC classes of order ``n``.

    Almost every integer partition of ``n`` is realised as the part-size
    profile of some connected graph, and different profiles can never be LC
    equivalent.  The unrealisable profiles are exactly ``[1, n-1]``,
    ``[1, 1, n-2]``, and ``[1, 1, 1, n-3]``, of which ``min(3, n - 1)``
    exist for a given ``n``.
    """
    if n < 2:
        raise ValueError("bound is defined for n >= 2")
    return partition_number(n) - min(3, n - 1)


def integer_partitions(n: int) -> list[tuple[int, ...]]:
    """All partitions of ``n`` as non-decreasing tuples, lexicographic."""
    out: list[tuple[int, ...]] = []

    def rec(remaining: int, minimum: int, prefix: tuple[int, ...]) -> None:
        if remaining == 0:
            out.append(prefix)
            return
        for first in range(minimum, remaining + 1):
            rec(remaining - first, first, prefix + (first,))

    rec(n, 1, ())
    return out


def graph_for_partition(sizes: tuple[int, ...] | list[int]) -> Graph:
    """A connected graph whose foliage parts have exactly these sizes.

    Builds one star per part and joins the star centres in a cycle (a single
    edge for two parts).  The handful of profiles where every part except
    one is a singleton and there are 2 to 4 parts admit no graph at all;
    those raise.
    """
    sizes = tuple(sizes)
    if not sizes or any(s < 1 for s in sizes):
        raise ValueError("part sizes must be positive")
    if list(sizes) != sorted(sizes):
        raise ValueError("part sizes must be non-decreasing")
    k = len(sizes)
    if 2 <= k <= 4 and all(s == 1 for s in sizes[:-1]):
        raise ValueError(
            f"no connected graph has foliage part sizes {list(sizes)}"
        )
    n = sum(sizes)
    edges = []
    centres = []
    offset = 0
    for s in sizes:
        centres.append(offset)
        for leaf in range(offset + 1, offset + s):
            edges.append((offset, leaf))
        offset += s
    if k == 2:
        edges.append((centres[0], centres[1]))
    elif k >= 3:
        for i in range(k):
            edges.append((centres[i], centres[(i + 1) % k]))
    return Graph.from_edges(n, edges)
