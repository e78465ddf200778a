"""Command-line front end.

Results go to stdout, diagnostics to stderr.  Exit status is 0 on success,
1 when a verification or OEIS comparison fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Sequence

from . import height2, paths, poset, unrestricted, width
from .oeis import OeisError, oeis_check
from .verify import run_all


def _pair(key) -> str:
    return f"({key[0]},{key[1]})"


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _csv(rows: list[Sequence], header: Sequence[str]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _key_str(group_by: str, key) -> str:
    if group_by == "endpoint":
        return key.label()
    if group_by == "stats":
        return _pair(key)
    return str(key)


def cmd_paths_enumerate(args) -> tuple[int, str]:
    found = paths.enumerate_paths(args.n)
    labelled = [[step.label() for step in p] for p in found]
    if args.format == "json":
        return 0, _dump_json(labelled)
    if args.format == "csv":
        return 0, _csv([[i, " ".join(p)] for i, p in enumerate(labelled)], ["index", "steps"])
    return 0, "".join(" ".join(p) + "\n" for p in labelled)


def cmd_paths_count(args) -> tuple[int, str]:
    table = paths.count_grouped(args.n, args.group_by, args.height_bound)
    items = [(_key_str(args.group_by, k), v) for k, v in table.items()]
    if args.format == "json":
        return 0, _dump_json({k: str(v) for k, v in items})
    if args.format == "csv":
        return 0, _csv([[k, v] for k, v in items], [args.group_by, "count"])
    return 0, "".join(f"{k}\t{v}\n" for k, v in items)


def cmd_gf_width(args) -> tuple[int, str]:
    bundle = width.L_k_ratfn(args.k, terms=args.terms)
    cf = width.a_nk_closed_form(args.k, args.k)
    if args.format == "json":
        return 0, _dump_json(
            {
                "k": args.k,
                "numerator": [str(c) for c in bundle.L.num.coeffs],
                "denominator": [str(c) for c in bundle.L.den.coeffs],
                "L_tilde": [str(c) for c in bundle.L_tilde.coeffs],
                "coefficients": [str(c) for c in bundle.coefficients],
                "v_kk": str(cf.product_leading),
                "growth_constant": str(cf.growth_constant),
            }
        )
    if args.format == "csv":
        return 0, _csv([[n, a] for n, a in enumerate(bundle.coefficients)], ["n", "a_nk"])
    out = [
        f"L_{args.k}(t) = ({bundle.L.num}) / ({bundle.L.den})",
        f"L~_{args.k}(t) = {bundle.L_tilde}",
        f"a_n,{args.k} for n < {args.terms}: {', '.join(map(str, bundle.coefficients))}",
        f"v_kk = {cf.product_leading}; a_(n+k),k / k^n -> {cf.growth_constant}",
    ]
    return 0, "\n".join(out) + "\n"


def cmd_gf_height2(args) -> tuple[int, str]:
    table = height2.c2_table(args.imax, args.jmax)
    if args.format == "json":
        return 0, _dump_json({_pair(k): str(v) for k, v in sorted(table.items())})
    if args.format == "csv":
        return 0, _csv([[i, j, v] for (i, j), v in sorted(table.items())], ["i", "j", "c2"])
    lines = ["i\\j\t" + "\t".join(str(j) for j in range(args.jmax + 1))]
    for i in range(args.imax + 1):
        lines.append(f"{i}\t" + "\t".join(str(table[(i, j)]) for j in range(args.jmax + 1)))
    return 0, "\n".join(lines) + "\n"


def cmd_gf_unrestricted(args) -> tuple[int, str]:
    slices = unrestricted.egf_slices(args.n)
    if args.format == "json":
        return 0, _dump_json(
            [
                {
                    "n": s.n,
                    "coefficients": {_pair(k): str(v) for k, v in s.coeffs.items()},
                    "total": str(s.evaluate()),
                }
                for s in slices
            ]
        )
    if args.format == "csv":
        rows = [[s.n, i, j, c] for s in slices for (i, j), c in s.coeffs.items()]
        return 0, _csv(rows, ["n", "i", "j", "gamma"])
    return 0, "".join(f"x^{s.n}/{s.n}!: {s}  [total {s.evaluate()}]\n" for s in slices)


def cmd_verify_all(args) -> tuple[int, str]:
    buf = []

    def show(result):
        line = result.line()
        buf.append(line)
        if args.progress:
            print(line, file=sys.stderr, flush=True)

    results = run_all(args.max_weight, progress=show)
    failed = [r for r in results if not r.passed]
    buf.append(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return (1 if failed else 0), "\n".join(buf) + "\n"


def cmd_hasse(args) -> tuple[int, str]:
    graph = poset.hasse_graph(args.poset, args.max_weight)
    if args.format == "dot":
        return 0, poset.export_dot(graph)
    if args.format == "json":
        return 0, _dump_json(
            {
                "poset": graph.poset,
                "nodes": [n.label() for n in graph.nodes],
                "edges": [[p.label(), q.label()] for p, q in graph.edges],
            }
        )
    if args.format == "csv":
        return 0, _csv([[p.label(), q.label()] for p, q in graph.edges], ["lower", "upper"])
    return 0, "".join(f"{p.label()} -> {q.label()}\n" for p, q in graph.edges)


def cmd_oeis_check(args) -> tuple[int, str]:
    offline = args.offline or os.environ.get("NO_NETWORK") == "1"
    cache_dir = args.cache_dir or os.environ.get("OEIS_CACHE_DIR")
    if args.against == "c0n":
        produced, start = [height2.c2_closed_forms(n)[0] for n in range(args.terms)], 0
    else:
        produced, start = [height2.c2_closed_forms(n)[1] for n in range(args.terms)], 1
    report = oeis_check(
        args.id, produced, mode="offline" if offline else "online", start=start, cache_dir=cache_dir
    )
    if args.format == "json":
        body = _dump_json(
            {
                "id": report.seq_id,
                "against": args.against,
                "start": report.start,
                "compared": report.compared,
                "matched": report.matched,
                "first_mismatch": report.first_mismatch,
            }
        )
    else:
        body = str(report) + "\n"
    return (0 if report.matched else 1), body


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="npaths", description="Standard paths in the composition poset N."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_paths = sub.add_parser("paths", help="enumerate or count standard paths")
    paths_sub = p_paths.add_subparsers(dest="action", required=True)
    p = paths_sub.add_parser("enumerate")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.set_defaults(func=cmd_paths_enumerate)
    p = paths_sub.add_parser("count")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--group-by", choices=["endpoint", "stats", "width", "height"], default="endpoint")
    p.add_argument("--height-bound", type=int, default=None)
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.set_defaults(func=cmd_paths_count)

    p_gf = sub.add_parser("gf", help="generating functions")
    gf_sub = p_gf.add_subparsers(dest="family", required=True)
    p = gf_sub.add_parser("width")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--terms", type=int, default=12)
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.set_defaults(func=cmd_gf_width)
    p = gf_sub.add_parser("height2")
    p.add_argument("--imax", type=int, required=True)
    p.add_argument("--jmax", type=int, required=True)
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.set_defaults(func=cmd_gf_height2)
    p = gf_sub.add_parser("unrestricted")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.set_defaults(func=cmd_gf_unrestricted)

    p_verify = sub.add_parser("verify", help="run the cross-checks")
    verify_sub = p_verify.add_subparsers(dest="suite", required=True)
    p = verify_sub.add_parser("all")
    p.add_argument("--max-weight", type=int, default=12)
    p.add_argument("--progress", action="store_true", help="echo each check to stderr as it finishes")
    p.set_defaults(func=cmd_verify_all)

    p = sub.add_parser("hasse", help="Hasse diagram export")
    p.add_argument("--poset", choices=list(poset.POSETS), default="N")
    p.add_argument("--max-weight", type=int, required=True)
    p.add_argument("--format", choices=["dot", "json", "csv", "text"], default="dot")
    p.set_defaults(func=cmd_hasse)

    p_oeis = sub.add_parser("oeis", help="compare against OEIS b-files")
    oeis_sub = p_oeis.add_subparsers(dest="action", required=True)
    p = oeis_sub.add_parser("check")
    p.add_argument("--id", required=True)
    p.add_argument("--against", choices=["c0n", "c1n"], default="c0n")
    p.add_argument("--terms", type=int, default=20)
    p.add_argument("--offline", action="store_true")
    p.add_argument("--cache-dir", default=None)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_oeis_check)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    for name in ("n", "k", "terms", "imax", "jmax", "max_weight", "height_bound"):
        val = getattr(args, name, None)
        if val is not None and val < 0:
            parser.print_usage(sys.stderr)
            print(f"npaths: error: --{name.replace('_', '-')} must be non-negative", file=sys.stderr)
            return 2
    try:
        code, out = args.func(args)
    except OeisError as exc:
        print(f"npaths: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"npaths: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(out)
    return code


def main() -> None:
    sys.exit(run())
