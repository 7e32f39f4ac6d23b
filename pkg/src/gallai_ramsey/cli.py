"""Command-line entry point.

Exit status: 0 success/clean, 1 violation found (or FOUND in prove mode),
2 usage or I/O error, 3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import sys

from . import construct, formulas, partition, search
from .coloring import TargetProfile, parse_pattern
from .errors import GallaiRamseyError, PreconditionError
from .formats import (dumps_report, export_dot, read_coloring, report, serialize_coloring,
                      write_coloring)

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _emit(text: str, out_path=None) -> None:
    if out_path and out_path != "-":
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_table(args) -> int:
    rows = formulas.table(args.kmax)
    if args.json:
        results = {"rows": [{"k": k, "s": s, "case": case, "f": str(fv), "gr": str(gr)}
                            for k, s, case, fv, gr in rows]}
        _emit(dumps_report(report("table", {"kmax": args.kmax}, results)))
        return EXIT_OK
    header = ("k", "s", "case", "f", "gr")
    cells = [header] + [tuple(map(str, r)) for r in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
    lines = ["  ".join(cell.rjust(w) for cell, w in zip(row, widths)).rstrip() for row in cells]
    _emit("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_build(args) -> int:
    g, trace = construct.build_extremal(args.k, args.s)
    write_coloring(g, args.output)
    print(f"order {g.n} written to {args.output}")
    if args.trace:
        for case, colors, base in trace.steps:
            cols = ",".join(map(str, colors))
            print(f"case {case}: blow up {base} in colors {cols} (x{construct.CASE_FACTOR[case]})")
        print(f"final order {trace.final_order}")
    return EXIT_OK


def _violation_dict(viol, profile):
    if viol is None:
        return None
    color, emb = viol
    return {"color": color, "pattern": profile.pattern_for(color).label, "embedding": list(emb)}


def cmd_verify(args) -> int:
    c = read_coloring(args.file)
    k = args.k if args.k is not None else c.k
    profile = TargetProfile(args.s, k)
    tri, viol = construct.check_coloring(c, args.s, k)
    clean = tri is None and viol is None
    if args.json:
        results = {
            "order": c.n,
            "k": k,
            "gallai": tri is None,
            "rainbow_triangle": None if tri is None else list(tri),
            "violation": _violation_dict(viol, profile),
            "clean": clean,
        }
        _emit(dumps_report(report("verify", {"file": args.file, "s": args.s, "k": k}, results)))
    else:
        parts = [f"order {c.n}", "gallai" if tri is None else f"not gallai (rainbow triangle {tri})"]
        if viol is None:
            parts.append("clean")
        else:
            color, emb = viol
            parts.append(f"violation: color {color} {profile.pattern_for(color).label} at {emb}")
        print(", ".join(parts))
    return EXIT_OK if clean else EXIT_VIOLATION


def cmd_partition(args) -> int:
    c = read_coloring(args.file)
    try:
        gp = partition.find_gallai_partition(c)
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    red = partition.reduce(c, gp)
    prof = partition.classify_parts(c, gp)
    two = partition.coarsen_to_two(c, gp)
    if args.json:
        results = gp.to_dict()
        results["degrees"] = [{"red": red.red_degree(i), "blue": red.blue_degree(i)} for i in range(gp.t)]
        results["profile"] = prof.to_dict()
        results["two_part"] = None if two is None else [list(p) for p in two.parts]
        _emit(dumps_report(report("partition", {"file": args.file}, results)))
        return EXIT_OK
    print(f"t={gp.t} between_colors={list(gp.between_colors)} (red={gp.red}, blue={gp.blue})")
    for i, p in enumerate(gp.parts):
        print(f"part {i}: size {len(p)} d_r={red.red_degree(i)} d_b={red.blue_degree(i)} "
              f"vertices {' '.join(map(str, p))}")
    print(f"l={prof.l} p0={prof.p0} p1={prof.p1} p2={prof.p2} "
          f"I_r={sorted(prof.I_r)} I_b={sorted(prof.I_b)}")
    if two is not None:
        print(f"two-part coarsening: {[len(p) for p in two.parts]}")
    return EXIT_OK


def cmd_search(args) -> int:
    mode = search.Mode.PROVE_NONE if args.prove else search.Mode.FIND_ONE
    task = search.SearchTask(args.n, parse_pattern(args.red), parse_pattern(args.blue), mode,
                             args.budget_nodes, args.budget_secs)
    run = search.prove_upper_bound if args.prove else search.search_sharpness
    out = run(task, threads=args.threads, split_depth=args.split_depth)
    print(f"elapsed {out.elapsed:.3f}s", file=sys.stderr)
    if out.coloring is not None and args.output:
        write_coloring(out.coloring, args.output)
    if args.json:
        _emit(dumps_report(report("search", task.to_dict(), out.to_dict())))
    else:
        print(f"n={task.n} red={task.red_pattern} blue={task.blue_pattern} mode={mode.value}: "
              f"{out.verdict.value} after {out.nodes_explored} nodes")
        if out.coloring is not None and not args.output:
            sys.stdout.write(serialize_coloring(out.coloring))
    if out.verdict is search.Verdict.BUDGET_EXHAUSTED:
        return EXIT_BUDGET
    if args.prove:
        return EXIT_VIOLATION if out.verdict is search.Verdict.FOUND else EXIT_OK
    return EXIT_OK if out.verdict is search.Verdict.FOUND else EXIT_VIOLATION


def cmd_inequalities(args) -> int:
    rep = formulas.verify_inequalities(args.kmax)
    if args.json:
        _emit(dumps_report(report("inequalities", {"kmax": args.kmax}, rep.to_dict())))
    else:
        for display in sorted(rep.checked):
            bad = sum(1 for v in rep.violations if v.display == display)
            print(f"display {display}: {rep.checked[display]} checked, {bad} violated")
        for v in rep.violations:
            print(f"  violated {v.display} at k={v.k} s={v.s} (f_{v.j}): {v.lhs} vs {v.rhs}")
    return EXIT_OK if rep.ok else EXIT_VIOLATION


def cmd_export_dot(args) -> int:
    c = read_coloring(args.file)
    palette = args.palette.split(",") if args.palette else None
    _emit(export_dot(c, palette), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="gallai-ramsey", description="Gallai-Ramsey numbers for K4PLUS / K3 profiles")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    t = sub.add_parser("table", help="f(k,s) and gr values")
    t.add_argument("--kmax", type=int, required=True)
    t.add_argument("--json", action="store_true")
    t.set_defaults(func=cmd_table)

    b = sub.add_parser("build", help="write the extremal coloring for (k, s)")
    b.add_argument("--k", type=int, required=True)
    b.add_argument("--s", type=int, required=True)
    b.add_argument("-o", "--output", required=True)
    b.add_argument("--trace", action="store_true")
    b.set_defaults(func=cmd_build)

    v = sub.add_parser("verify", help="check a coloring against the (s, k) profile")
    v.add_argument("file")
    v.add_argument("--s", type=int, required=True)
    v.add_argument("--k", type=int, help="profile color count (default: the file's k)")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("partition", help="Gallai partition, reduced graph and part profile")
    g.add_argument("file")
    g.add_argument("--json", action="store_true")
    g.set_defaults(func=cmd_partition)

    s = sub.add_parser("search", help="two-color search for sharpness colorings")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--red", required=True, help="K2, K3, K4, K4PLUS or m:a-b,c-d,...")
    s.add_argument("--blue", required=True)
    s.add_argument("--prove", action="store_true", help="exhaustive mode with symmetry reduction")
    s.add_argument("--budget-nodes", type=int)
    s.add_argument("--budget-secs", type=float)
    s.add_argument("--threads", type=int, default=1)
    s.add_argument("--split-depth", type=int)
    s.add_argument("-o", "--output")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_search)

    q = sub.add_parser("inequalities", help="exact sweep of the recursion inequalities")
    q.add_argument("--kmax", type=int, required=True)
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_inequalities)

    d = sub.add_parser("export-dot", help="Graphviz export")
    d.add_argument("file")
    d.add_argument("-o", "--output", required=True)
    d.add_argument("--palette", help="comma-separated color names, one per color index")
    d.set_defaults(func=cmd_export_dot)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GallaiRamseyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())
