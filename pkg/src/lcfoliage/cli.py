"""Command-line interface.

Graphs come in as graph6 (or the weighted text format), results go out as
plain deterministic text; tabular reports offer ``--csv``.  Exit status is 0
on success, 2 on bad input, 3 when a size guard trips (override with
``--force``).
"""

from __future__ import annotations

import argparse
import sys

from .entanglement import entropy, schmidt_vector, uniformity
from .foliage import (
    foliage_partition,
    foliage_representation,
    normal_form,
    partition_text,
    representation_json,
    representation_text,
    saturation,
)
from .graph import (
    Graph,
    SizeGuardError,
    connected_components,
    iter_bits,
    local_complement,
    qudit_scale,
    qudit_star,
)
from .graph6 import decode_graph6, decode_weighted, encode_graph6, encode_weighted
from .orbits import (
    class_lower_bound,
    graph_for_partition,
    lc_automorphism_group,
    lc_classes,
    lc_orbit,
    partition_number,
    saturation_stats,
    symmetry_table,
)

_CSV_HEADER = "class_id,n,partition,aut_in,aut_out_upper,aut_order,L,C,I"


def _read_source(args: argparse.Namespace) -> str:
    if getattr(args, "g6", None) is not None:
        return args.g6
    path = args.input
    if path is None:
        raise ValueError("no input given (pass a path, '-', or --g6 TEXT)")
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="ascii") as fh:
            return fh.read()
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc}") from exc


def _load_graph(args: argparse.Namespace) -> Graph:
    return decode_graph6(_read_source(args))


def _subset_mask(args: argparse.Namespace, n: int) -> int:
    if args.mask is not None:
        mask = int(args.mask, 0)
        if mask < 0:
            raise ValueError("subset mask must be nonnegative")
    else:
        mask = 0
        for chunk in args.subset.split(","):
            chunk = chunk.strip()
            if chunk == "":
                continue
            try:
                v = int(chunk)
            except ValueError as exc:
                raise ValueError(f"bad subset entry {chunk!r}") from exc
            if not (0 <= v < n):
                raise ValueError(f"subset vertex {v} out of range")
            mask |= 1 << v
    if mask >= 1 << n:
        raise ValueError("subset mask has bits outside the vertex range")
    return mask


def _set_str(mask: int) -> str:
    return "{" + ",".join(str(v) for v in iter_bits(mask)) + "}"


def _cycle_str(perm: tuple[int, ...]) -> str:
    seen = [False] * len(perm)
    out = []
    for start in range(len(perm)):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        v = perm[start]
        while v != start:
            cyc.append(v)
            seen[v] = True
            v = perm[v]
        out.append("(" + " ".join(str(x) for x in cyc) + ")")
    return "".join(out) if out else "()"


def _cmd_foliage(args: argparse.Namespace) -> str:
    if args.weighted:
        g = decode_weighted(_read_source(args))
        return partition_text(foliage_partition(g)) + "\n"
    rep = foliage_representation(_load_graph(args))
    if args.json:
        return representation_json(rep) + "\n"
    return representation_text(rep) + "\n"


def _cmd_lc(args: argparse.Namespace) -> str:
    g = _load_graph(args)
    return encode_graph6(local_complement(g, args.vertex)) + "\n"


def _cmd_qlc(args: argparse.Namespace) -> str:
    g = decode_weighted(_read_source(args))
    if args.op == "star":
        out = qudit_star(g, args.vertex, args.scalar)
    else:
        out = qudit_scale(g, args.vertex, args.scalar)
    return encode_weighted(out)


def _cmd_normal_form(args: argparse.Namespace) -> str:
    return encode_graph6(normal_form(_load_graph(args))) + "\n"


def _chain_str(chain: tuple[int, ...]) -> str:
    return "[" + ",".join(str(x) for x in chain) + "]"


def _cmd_saturation(args: argparse.Namespace) -> str:
    g = _load_graph(args)
    sat = saturation(g)
    lines = [f"time={sat.time} size={sat.size} chain={_chain_str(sat.chain)}"]
    comps = connected_components(g)
    if len(comps) > 1:
        for comp in comps:
            verts = list(iter_bits(comp))
            relabel = {v: i for i, v in enumerate(verts)}
            rows = []
            for v in verts:
                row = 0
                for w in iter_bits(g.rows[v] & comp):
                    row |= 1 << relabel[w]
                rows.append(row)
            sub = Graph._wrap(len(verts), tuple(rows))
            s = saturation(sub)
            lines.append(
                f"component={_set_str(comp)} time={s.time} size={s.size} "
                f"chain={_chain_str(s.chain)}"
            )
    return "\n".join(lines) + "\n"


def _cmd_entropy(args: argparse.Namespace) -> str:
    g = _load_graph(args)
    mask = _subset_mask(args, g.n)
    return f"subset={_set_str(mask)} entropy={entropy(g, mask)}\n"


def _cmd_schmidt(args: argparse.Namespace) -> str:
    g = _load_graph(args)
    return schmidt_vector(g, force=args.force).to_csv()


def _cmd_uniformity(args: argparse.Namespace) -> str:
    g = _load_graph(args)
    rep = uniformity(g, force=args.force)
    witness = "none" if rep.witness is None else _set_str(rep.witness)
    return f"k_max={rep.k_max} witness={witness}\n"


def _cmd_orbit(args: argparse.Namespace) -> str:
    g = _load_graph(args)
    rep = lc_orbit(g, force=args.force)
    if args.members is not None:
        lines = "".join(
            encode_graph6(h) + "\n" for h in rep.member_graphs()
        )
        if args.members == "-":
            return lines + f"labeled={rep.labeled_size} classes={rep.class_size}\n"
        with open(args.members, "w", encoding="ascii") as fh:
            fh.write(lines)
    return f"labeled={rep.labeled_size} classes={rep.class_size}\n"


def _cmd_aut(args: argparse.Namespace) -> str:
    g = _load_graph(args)
    rep = lc_automorphism_group(g, force=args.force)
    gens = ",".join(_cycle_str(p) for p in rep.generators)
    return (
        f"order={rep.order} aut_in={rep.aut_in_order} "
        f"aut_out_upper={rep.aut_out_upper_order} L={rep.labeled_size} "
        f"C={rep.class_size} interplay={float(rep.interplay):.2f}\n"
        f"generators=[{gens}]\n"
    )


def _cmd_classes(args: argparse.Namespace) -> str:
    connected = not args.all
    if args.csv:
        rows = symmetry_table(
            args.n, connected_only=connected, force=args.force, workers=args.workers
        )
        lines = [_CSV_HEADER]
        for row in rows:
            lines.append(",".join(str(x) for x in row))
        return "\n".join(lines) + "\n"
    census = lc_classes(
        args.n, connected_only=connected, force=args.force, workers=args.workers
    )
    if args.reps is not None:
        lines = "".join(
            encode_graph6(cls.representative) + "\n" for cls in census.classes
        )
        if args.reps == "-":
            return lines
        with open(args.reps, "w", encoding="ascii") as fh:
            fh.write(lines)
    return f"{census.count}\n"


def _cmd_stats(args: argparse.Namespace) -> str:
    row = saturation_stats(args.n, force=args.force, workers=args.workers)
    t, s, r, f = row.two_decimals()
    if args.csv:
        return f"{t},{s},{r},{f}\n"
    return f"time={t} size={s} reducible={r} fully_reducible={f}\n"


def _cmd_bound(args: argparse.Namespace) -> str:
    return f"p={partition_number(args.n)} bound={class_lower_bound(args.n)}\n"


def _cmd_construct(args: argparse.Namespace) -> str:
    try:
        sizes = [int(x) for x in args.partition.split(",")]
    except ValueError as exc:
        raise ValueError(f"bad partition {args.partition!r}") from exc
    return encode_graph6(graph_for_partition(sizes)) + "\n"


def _add_graph_input(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("input", nargs="?", help="path to a graph file, or - for stdin")
    sub.add_argument("--g6", help="inline graph text instead of a file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lcfoliage",
        description="Foliage partitions and local-complementation invariants of graph states",
    )
    parser.add_argument("-o", "--output", help="write the result to this path")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("foliage", help="foliage partition / representation")
    _add_graph_input(p)
    p.add_argument("--weighted", action="store_true", help="input is weighted text")
    p.add_argument("--json", action="store_true", help="structured output")
    p.set_defaults(func=_cmd_foliage)

    p = sub.add_parser("lc", help="local complementation at a vertex")
    p.add_argument("vertex", type=int)
    _add_graph_input(p)
    p.set_defaults(func=_cmd_lc)

    p = sub.add_parser("qlc", help="qudit local-complementation steps")
    p.add_argument("op", choices=["star", "scale"])
    p.add_argument("vertex", type=int)
    p.add_argument("scalar", type=int)
    _add_graph_input(p)
    p.set_defaults(func=_cmd_qlc)

    p = sub.add_parser("normal-form", help="complement away every axil")
    _add_graph_input(p)
    p.set_defaults(func=_cmd_normal_form)

    p = sub.add_parser("saturation", help="iterate the foliage graph to a fixed point")
    _add_graph_input(p)
    p.set_defaults(func=_cmd_saturation)

    p = sub.add_parser("entropy", help="bipartite entropy of a subset")
    _add_graph_input(p)
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--subset", help="comma-separated vertices, e.g. 0,2")
    grp.add_argument("--mask", help="subset bitmask (int literal)")
    p.set_defaults(func=_cmd_entropy)

    p = sub.add_parser("schmidt", help="entropies of all bipartitions (CSV)")
    _add_graph_input(p)
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=_cmd_schmidt)

    p = sub.add_parser("uniformity", help="largest k with all k-subsets maximal")
    _add_graph_input(p)
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=_cmd_uniformity)

    p = sub.add_parser("orbit", help="labelled LC orbit and class size")
    _add_graph_input(p)
    p.add_argument("--members", help="write orbit members as graph6 to this path (- for stdout)")
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=_cmd_orbit)

    p = sub.add_parser("aut", help="LC automorphism group report")
    _add_graph_input(p)
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=_cmd_aut)

    p = sub.add_parser("classes", help="LC class census for a given order")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--all", action="store_true", help="include disconnected graphs")
    p.add_argument("--csv", action="store_true", help="per-class symmetry table")
    p.add_argument("--reps", help="write class representatives as graph6 to this path")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=_cmd_classes)

    p = sub.add_parser("stats", help="average saturation statistics")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--csv", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("bound", help="partition-count lower bound on classes")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("construct", help="graph realising given foliage part sizes")
    p.add_argument("--partition", required=True, help="comma-separated sizes, e.g. 2,3")
    p.set_defaults(func=_cmd_construct)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text = args.func(args)
    except SizeGuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.output:
        with open(args.output, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
