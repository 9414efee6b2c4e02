"""Command-line surface: build graphs, print tables, run verification suites.

Exit codes: 0 on success, 1 when a verification suite reports failures,
2 for usage or configuration errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .crystal import CrystalContext, _is_type_a, as_convention
from .kgraph import KGraph
from .rightends import right_end_tuple
from .rootdata import resolve_datum
from .tableaux import Tableau, from_crystal, left_key, right_key
from .verify import SUITES, run_suite


def element_str(b) -> str:
    """Stable printable form of a crystal element id."""
    if isinstance(b, str):
        return b
    if isinstance(b, tuple) and all(isinstance(x, int) for x in b):
        if all(x <= 9 for x in b):
            return "".join(str(x) for x in b)
        return ",".join(str(x) for x in b)
    return "(" + " ".join(element_str(x) for x in b) + ")"


def vertex_str(v) -> str:
    return "|".join(element_str(x) for x in v)


def _parse_bound(text: str, rank: int) -> tuple[int, ...]:
    parts = [int(x) for x in text.split(",")]
    if len(parts) != rank or any(x < 0 for x in parts):
        raise ValueError(f"degree bound {text!r} does not fit rank {rank}")
    return tuple(parts)


def _context(args) -> CrystalContext:
    datum = resolve_datum(args.algebra)
    return CrystalContext(datum, as_convention(args.convention))


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_skeleton(args) -> int:
    ctx = _context(args)
    kg = KGraph(ctx)
    skel = kg.skeleton()
    color_str = {i: f"w{i}" for i in ctx.datum.indices}.__getitem__
    if args.output == "dot":
        _emit(args, skel.to_dot(vertex_str, color_str,
                                show_loops=args.show_loops, key_str=element_str))
    else:
        data = skel.to_json(vertex_str, color_str,
                            show_loops=args.show_loops, key_str=element_str)
        _emit(args, json.dumps(data, indent=2, sort_keys=True) + "\n")
    return 0


def cmd_verify(args) -> int:
    config = {}
    if args.algebra:
        config["algebra"] = args.algebra
        config["convention"] = args.convention
    if args.degree_bound:
        rank = resolve_datum(args.algebra or "A2").rank
        config["degree_bound"] = _parse_bound(args.degree_bound, rank)
    report = run_suite(args.suite, **config)
    _emit(args, json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n")
    return 0 if report.ok else 1


def cmd_braiding(args) -> int:
    ctx = _context(args)
    i, j = (int(x) for x in args.factors.split(","))
    table = ctx.braiding(i, j)
    rows = []
    for (x, y), out in sorted(table.items(), key=lambda kv: (element_str(kv[0][0]),
                                                             element_str(kv[0][1]))):
        rows.append({
            "in": [element_str(x), element_str(y)],
            "out": None if out is None else [element_str(out[0]), element_str(out[1])],
        })
    if args.format == "json":
        _emit(args, json.dumps(rows, indent=2) + "\n")
    else:
        lines = []
        for row in rows:
            rhs = "0" if row["out"] is None else " (x) ".join(row["out"])
            lines.append(f"{' (x) '.join(row['in'])}  ->  {rhs}")
        _emit(args, "\n".join(lines) + "\n")
    return 0


def cmd_rightends(args) -> int:
    ctx = _context(args)
    if args.via == "slides" and not _is_type_a(ctx.datum):
        raise ValueError("the slides route is only defined for type A algebras")
    rho = ctx.rho_crystal()
    rows = []
    for b in rho.elements:
        ends = right_end_tuple(ctx, b)
        if args.via == "slides":
            from .tableaux import right_ends_via_slides
            slid = right_ends_via_slides(from_crystal(b))
            ends = tuple(reversed(slid))
        rows.append({"element": [element_str(x) for x in b],
                     "ends": [element_str(x) for x in ends]})
    rows.sort(key=lambda r: r["element"])
    if args.format == "json":
        _emit(args, json.dumps(rows, indent=2) + "\n")
    else:
        lines = [f"{' (x) '.join(r['element'])}  ->  ({', '.join(r['ends'])})"
                 for r in rows]
        _emit(args, "\n".join(lines) + "\n")
    return 0


def cmd_keys(args) -> int:
    with open(args.tableau) as fh:
        rows = json.load(fh)
    tab = Tableau(rows)
    kl, kr = left_key(tab), right_key(tab)
    if args.format == "json":
        _emit(args, json.dumps({
            "tableau": [list(r) for r in tab.rows],
            "left_key": [list(r) for r in kl.rows],
            "right_key": [list(r) for r in kr.rows],
        }, indent=2) + "\n")
    else:
        def fmt(t):
            return " / ".join(" ".join(str(x) for x in row) for row in t.rows)
        _emit(args, f"T        = {fmt(tab)}\n"
                    f"left key  = {fmt(kl)}\nright key = {fmt(kr)}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crystalgraphs",
        description="Crystals, braidings, right ends, keys, and k-graphs")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--algebra", default="A2",
                       help="built-in name (A1..A9, C2) or a Cartan data file")
        p.add_argument("--convention", default="hong-kang",
                       choices=["hong-kang", "opposite"])
        p.add_argument("-o", "--out", help="write to a file instead of stdout")

    p = sub.add_parser("skeleton", help="emit the k-graph skeleton")
    add_common(p)
    p.add_argument("--output", default="dot", choices=["dot", "json"])
    p.add_argument("--show-loops", action="store_true",
                   help="keep the loop edges (omitted by default)")
    p.set_defaults(run=cmd_skeleton)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("--suite", required=True, choices=sorted(SUITES))
    p.add_argument("--algebra", default="",
                   help="algebra for the structural suites")
    p.add_argument("--convention", default="hong-kang",
                   choices=["hong-kang", "opposite"])
    p.add_argument("--degree-bound", default="",
                   help="comma-separated componentwise bound, e.g. 1,1")
    p.add_argument("-o", "--out")
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("braiding", help="print a fundamental braiding table")
    add_common(p)
    p.add_argument("--factors", default="1,2", help="fundamental indices i,j")
    p.add_argument("--format", default="text", choices=["text", "json"])
    p.set_defaults(run=cmd_braiding)

    p = sub.add_parser("rightends", help="print the right ends of B(rho)")
    add_common(p)
    p.add_argument("--via", default="braiding", choices=["braiding", "slides"],
                   help="slides is available for type A only")
    p.add_argument("--format", default="text", choices=["text", "json"])
    p.set_defaults(run=cmd_rightends)

    p = sub.add_parser("keys", help="print the left and right keys of a tableau")
    p.add_argument("--tableau", required=True,
                   help="JSON file: rows as arrays, top row first")
    p.add_argument("--format", default="text", choices=["text", "json"])
    p.add_argument("-o", "--out")
    p.set_defaults(run=cmd_keys)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
