"""Command-line interface.

    linealliance compute   --input g.g6 --kind defensive [--line] [--oracle]
    linealliance verify    [--max-n 7] [--family odd-graph --n 5] [--checks ...] [--star-erratum]
    linealliance bounds    --input g.g6
    linealliance classify  --input g.g6
    linealliance linegraph --input g.g6 [--output out.g6]
    linealliance generate  --family cycle --n 8 [--format g6|edgelist]

JSON goes to stdout, diagnostics to stderr.  Exit codes: 0 ok, 1 violations
found, 2 input error, 3 infeasible, 4 budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bounds
from .graph import (
    FAMILIES, Graph, GraphError, GraphFamily, ParseError, encode_edge_list, encode_graph6,
    generate, parse_edge_list, read_graph6_lines,
)
from .kernel import AllianceKind
from .linegraph import line_graph
from .solver import (
    Budget, InfeasibleError, OracleCapError, brute_force_oracle, line_alliance_number, min_alliance,
)
from .verify import CHECKS, VerifyConfig, run_verification, star_erratum_report

EXIT_OK, EXIT_VIOLATIONS, EXIT_INPUT, EXIT_INFEASIBLE, EXIT_BUDGET = 0, 1, 2, 3, 4


class InputError(Exception):
    pass


def _emit(payload: dict) -> None:
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")


def _fail(message: str, code: int) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def read_graph(path: str, fmt: str | None) -> Graph:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    if fmt is None:
        fmt = "g6" if path.endswith(".g6") else "edgelist" if path != "-" else "g6"
    if fmt == "edgelist":
        return parse_edge_list(text)
    graphs = read_graph6_lines(text)
    if len(graphs) != 1:
        raise InputError(f"{path}: expected exactly one graph6 record, found {len(graphs)}")
    return graphs[0]


def _family(args) -> GraphFamily:
    params = {
        "path": (args.n,), "cycle": (args.n,), "complete": (args.n,), "star": (args.n,),
        "complete-bipartite": (args.n, args.k), "kneser": (args.n, args.k),
        "odd-graph": (args.n,), "petersen": (), "hypercube": (args.n,),
    }[args.family]
    if any(p is None for p in params):
        raise InputError(f"family {args.family} needs --n{' and --k' if len(params) == 2 else ''}")
    return GraphFamily(args.family, params)


# --------------------------------------------------------------------------
# subcommands


def cmd_compute(args) -> int:
    g = read_graph(args.input, args.format)
    kind = AllianceKind.parse(args.kind)
    budget = Budget.from_env(args.budget_nodes, args.budget_secs)
    if args.line:
        res = line_alliance_number(g, kind, budget)
        host = line_graph(g).graph
    else:
        res = min_alliance(g, kind, budget)
        host = g
    out = res.to_json()
    if args.oracle:
        try:
            ref = brute_force_oracle(host, kind)
            out["oracle"] = {
                "value": ref.value, "witness": list(ref.witness),
                "agree": ref.value == res.value,
            }
        except OracleCapError as exc:
            out["oracle"] = {"skipped": str(exc)}
    if args.pretty:
        print(f"{kind.symbol}{'(L)' if args.line else ''} = {res.value}  [{res.status}, {res.method}]")
        print(f"witness: {list(res.witness)}")
        if res.witness_edges is not None:
            print(f"edges:   {[list(e) for e in res.witness_edges]}")
        if "oracle" in out:
            print(f"oracle:  {out['oracle']}")
    else:
        _emit(out)
    return EXIT_OK if res.certified else EXIT_BUDGET


def cmd_verify(args) -> int:
    if args.star_erratum:
        report = star_erratum_report()
        _emit(report)
        return EXIT_OK if report["closed forms hold"] else EXIT_VIOLATIONS
    checks = None
    if args.checks:
        checks = tuple(c.strip() for c in args.checks.split(",") if c.strip())
        unknown = [c for c in checks if c not in CHECKS]
        if unknown:
            raise InputError(f"unknown check(s) {', '.join(unknown)}; available: {', '.join(CHECKS)}")
    cfg = VerifyConfig(
        max_n=args.max_n,
        min_n=args.min_n,
        corpus_files=tuple(args.corpus or ()),
        family=_family(args) if args.family else None,
        checks=checks,
        oracle_cap=args.oracle_cap,
        line_oracle_cap=args.line_oracle_cap,
        charset_max_n=args.charset_max_n,
        budget=Budget.from_env(args.budget_nodes, args.budget_secs),
        jobs=args.jobs,
    )
    try:
        report = run_verification(cfg)
    except FileNotFoundError as exc:
        raise InputError(str(exc)) from None
    if args.report:
        Path(args.report).write_text(json.dumps(report, indent=2) + "\n", encoding="utf-8")
    if args.pretty:
        s = report["summary"]
        print(f"corpus: {report['corpus']}  graphs: {s['graphs']}  violations: {s['violations']}  skipped: {s['skipped']}")
        for name, row in s["by_check"].items():
            print(f"  {name:<30} passed {row['passed']:>5}  violations {row['violations']:>3}")
        for v in report["violations"][:20]:
            print(f"  VIOLATION {v['check']} {v['graph6']}: {v['details']}")
    else:
        _emit(report)
    return EXIT_OK if report["ok"] else EXIT_VIOLATIONS


def cmd_bounds(args) -> int:
    g = read_graph(args.input, args.format)
    report = bounds.bound_report(g).to_json()
    if args.pretty:
        for e in report["entries"]:
            lo, hi = ("-" if x is None else x for x in (e["lower"], e["upper"]))
            rng = f"[{lo}, {hi}]" if e["applicable"] else "n/a"
            print(f"{e['id']:<22} {e['target']:<8} {rng:<12} {e['reason']}")
    else:
        _emit(report)
    return EXIT_OK


def cmd_classify(args) -> int:
    g = read_graph(args.input, args.format)
    out = {"graph": bounds.classify_small_alliance(g).to_json()}
    if g.m:
        out["line"] = bounds.classify_small_line_alliance(g).to_json()
    _emit(out)
    return EXIT_OK


def cmd_linegraph(args) -> int:
    g = read_graph(args.input, args.format)
    lg = line_graph(g)
    g6 = encode_graph6(lg.graph)
    edge_map = {str(i): list(e) for i, e in enumerate(lg.edge_of)}
    if args.output:
        out = Path(args.output)
        out.write_text(g6 + "\n", encoding="ascii")
        out.with_suffix(".json").write_text(json.dumps(edge_map, indent=2) + "\n", encoding="utf-8")
    _emit({"graph6": g6, "edge_map": edge_map})
    return EXIT_OK


def cmd_generate(args) -> int:
    g = generate(_family(args))
    text = encode_graph6(g) + "\n" if args.format == "g6" else encode_edge_list(g)
    if args.output:
        Path(args.output).write_text(text, encoding="ascii")
    else:
        sys.stdout.write(text)
    return EXIT_OK


# --------------------------------------------------------------------------


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", required=True, help="graph file ('-' for stdin)")
    p.add_argument("--format", choices=("g6", "edgelist"), default=None,
                   help="input format (default: by extension, .g6 means graph6)")


def _add_budget(p: argparse.ArgumentParser) -> None:
    p.add_argument("--budget-nodes", type=int, default=None,
                   help="search-node cap (default: $ALLIANCE_BUDGET_NODES, else unlimited)")
    p.add_argument("--budget-secs", type=float, default=None, help="wall-clock cap in seconds")


def _add_family(p: argparse.ArgumentParser, required: bool) -> None:
    p.add_argument("--family", choices=FAMILIES, required=required)
    p.add_argument("--n", type=int, default=None, help="first family parameter")
    p.add_argument("--k", type=int, default=None, help="second family parameter")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="linealliance", description="Exact defensive-alliance numbers of graphs and line graphs.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="exact alliance number with witness")
    _add_input(p)
    p.add_argument("--kind", required=True, choices=[k.value for k in AllianceKind])
    p.add_argument("--line", action="store_true", help="solve on the line graph")
    p.add_argument("--oracle", action="store_true", help="cross-check with the brute-force oracle")
    _add_budget(p)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="run the verification harness")
    p.add_argument("--max-n", type=int, default=7)
    p.add_argument("--min-n", type=int, default=1)
    p.add_argument("--corpus", nargs="+", help=".g6 files to use instead of the bundled corpus")
    _add_family(p, required=False)
    p.add_argument("--checks", help="comma-separated check ids (default: all)")
    p.add_argument("--star-erratum", action="store_true", help="report the star line-graph values only")
    p.add_argument("--oracle-cap", type=int, default=16)
    p.add_argument("--line-oracle-cap", type=int, default=16)
    p.add_argument("--charset-max-n", type=int, default=6)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--report", help="also write the JSON report to this path")
    _add_budget(p)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="every applicable bound as JSON")
    _add_input(p)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("classify", help="small alliance-number classes of the graph and its line graph")
    _add_input(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("linegraph", help="line graph in graph6 plus the edge map")
    _add_input(p)
    p.add_argument("--output", help="write <output> (graph6) and <output>.json (edge map)")
    p.set_defaults(func=cmd_linegraph)

    p = sub.add_parser("generate", help="deterministic family member")
    _add_family(p, required=True)
    p.add_argument("--format", choices=("g6", "edgelist"), default="g6")
    p.add_argument("--output")
    p.set_defaults(func=cmd_generate)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InfeasibleError as exc:
        return _fail(str(exc), EXIT_INFEASIBLE)
    except (InputError, ParseError, GraphError, ValueError) as exc:
        return _fail(str(exc), EXIT_INPUT)


if __name__ == "__main__":
    raise SystemExit(main())
