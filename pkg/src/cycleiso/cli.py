"""Command-line front end.

Subcommands cover every library capability: verifying candidate isolating
sets, exact isolation numbers, the constructive bound with its case trace,
building and recognising the extremal family, tree and connected-graph
enumeration, and bound surveys over graph streams.

Exit codes: 0 success, 1 usage or parse error, 2 survey found violations,
3 solver node budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from typing import Optional

from .constructive import bound_value, construct
from .family import Tree, build, canonical_isolating_set, enumerate_trees, recognize
from .graphs import (
    Graph,
    GraphFormatError,
    encode_graph6,
    mask_of,
    parse_edge_list,
    parse_graph6,
    vertices_of,
)
from .isolation import BudgetExceededError, iota_exact, verify
from .survey import (
    BoundSpec,
    IngestFailure,
    SurveyReport,
    conjecture_bound,
    enumerate_connected,
    check_graph,
    ingest_graph6,
    survey,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VIOLATIONS = 2
EXIT_BUDGET = 3


class CliError(Exception):
    pass


def _parse_bound(text: str, k: int) -> BoundSpec:
    """Parse "a*n+b*m+c/d" with integer coefficients, e.g. "m+1/6" or "n/4"."""
    body = text.replace(" ", "")
    if "/" not in body:
        raise CliError(f"bound {text!r} lacks a denominator")
    num, _, den = body.rpartition("/")
    if num.startswith("(") and num.endswith(")"):
        num = num[1:-1]
    try:
        d = int(den)
    except ValueError:
        raise CliError(f"bound denominator {den!r} is not an integer") from None
    a = b = c = 0
    for term in re.findall(r"[+-]?[^+-]+", num):
        sign = -1 if term.startswith("-") else 1
        term = term.lstrip("+-")
        if term.endswith("n") or term.endswith("m"):
            var = term[-1]
            coeff_text = term[:-1].rstrip("*")
            coeff = sign * (int(coeff_text) if coeff_text else 1)
            if var == "n":
                a += coeff
            else:
                b += coeff
        else:
            try:
                c += sign * int(term)
            except ValueError:
                raise CliError(f"bad bound term {term!r}") from None
    try:
        return BoundSpec(k=k, a=a, b=b, c=c, d=d)
    except ValueError as exc:
        raise CliError(str(exc)) from None


def _load_graph(args) -> Graph:
    sources = [s for s in ("graph6", "file") if getattr(args, s, None)]
    if len(sources) > 1:
        raise CliError("give at most one of --graph6 and --file")
    try:
        if getattr(args, "graph6", None):
            return parse_graph6(args.graph6)
        if getattr(args, "file", None):
            with open(args.file, encoding="ascii") as fh:
                text = fh.read()
            if text.lstrip().startswith("n "):
                return parse_edge_list(text)
            return parse_graph6(text)
        line = sys.stdin.readline()
        if not line.strip():
            raise CliError("no graph on stdin")
        return parse_graph6(line)
    except (GraphFormatError, OSError) as exc:
        raise CliError(str(exc)) from None


def _parse_vertex_set(text: str) -> int:
    if not text.strip():
        return 0
    try:
        return mask_of(int(part) for part in text.split(","))
    except ValueError:
        raise CliError(f"bad vertex set {text!r}; expected comma-separated ids") from None


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _cmd_verify(args) -> int:
    g = _load_graph(args)
    d = _parse_vertex_set(args.set)
    cert = verify(g, d, args.k)
    payload = {
        "k": args.k,
        "set": list(cert.vertices),
        "valid": cert.valid,
        "residual_components": [list(emb) for _, emb in cert.residual],
    }
    _emit(
        args,
        payload,
        [
            f"valid: {str(cert.valid).lower()}",
            f"set: {','.join(map(str, cert.vertices)) or '-'}",
            f"residual components: {len(cert.residual)}",
        ],
    )
    return EXIT_OK


def _cmd_exact(args) -> int:
    g = _load_graph(args)
    try:
        res = iota_exact(g, args.k, args.budget)
    except BudgetExceededError as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        raise CliError(str(exc)) from None
    payload = {
        "k": args.k,
        "iota": res.iota,
        "witness": list(res.vertices),
        "explored": res.explored,
    }
    _emit(
        args,
        payload,
        [
            f"iota: {res.iota}",
            f"witness: {','.join(map(str, res.vertices)) or '-'}",
            f"explored: {res.explored}",
        ],
    )
    return EXIT_OK


def _cmd_construct(args) -> int:
    if args.k != 4:
        raise CliError("the constructive bound is implemented for k=4 only")
    g = _load_graph(args)
    try:
        d, trace = construct(g)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    size = d.bit_count()
    limit = bound_value(g.m)
    payload = {
        "set": list(vertices_of(d)),
        "size": size,
        "bound": [limit.numerator, limit.denominator],
        "trace": [
            {
                "label": s.label,
                "working": list(s.working),
                "increment": list(s.increment),
                "recursed": [list(p) for p in s.recursed],
            }
            for s in trace.steps
        ],
        "fallback": trace.used_fallback(),
    }
    lines = [
        f"set: {','.join(map(str, vertices_of(d))) or '-'}",
        f"size: {size} (bound (m+1)/6 = {limit})",
    ]
    lines.extend(f"trace: {s.label}" for s in trace.steps)
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_cons(args) -> int:
    try:
        if args.tree:
            with open(args.tree, encoding="ascii") as fh:
                tg = parse_edge_list(fh.read())
        else:
            tg = parse_edge_list(sys.stdin.read())
        tree = Tree(tg.n, tuple(tg.edges()))
    except (GraphFormatError, ValueError, OSError) as exc:
        raise CliError(str(exc)) from None
    g, decomp = build(tree, args.k)
    payload = {
        "graph6": encode_graph6(g),
        "n": g.n,
        "m": g.m,
        "connection_vertices": list(vertices_of(decomp.connection_vertices)),
        "constituents": [
            {
                "connection": c.connection,
                "attachment": c.attachment,
                "cycle": list(c.cycle),
            }
            for c in decomp.constituents
        ],
    }
    _emit(
        args,
        payload,
        [
            f"graph6: {encode_graph6(g)}",
            f"n: {g.n}  m: {g.m}",
            f"connection vertices: {','.join(map(str, vertices_of(decomp.connection_vertices)))}",
        ],
    )
    return EXIT_OK


def _cmd_recognize(args) -> int:
    g = _load_graph(args)
    decomp = recognize(g, args.k)
    if decomp is None:
        _emit(args, {"member": False}, ["member: false"])
        return EXIT_OK
    payload = {
        "member": True,
        "connection_vertices": list(vertices_of(decomp.connection_vertices)),
        "tree_edges": [list(e) for e in decomp.tree_edges],
        "canonical_isolating_set": list(vertices_of(canonical_isolating_set(decomp))),
    }
    _emit(
        args,
        payload,
        [
            "member: true",
            f"connection vertices: {','.join(map(str, vertices_of(decomp.connection_vertices)))}",
        ],
    )
    return EXIT_OK


def _cmd_trees(args) -> int:
    try:
        trees = enumerate_trees(args.n)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    payload = {"n": args.n, "count": len(trees), "trees": [[list(e) for e in t.edges] for t in trees]}
    lines = [f"count: {len(trees)}"]
    lines.extend(" ".join(f"{u}-{v}" for u, v in t.edges) or "K1" for t in trees)
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    try:
        for g in enumerate_connected(args.n):
            print(encode_graph6(g))
    except ValueError as exc:
        raise CliError(str(exc)) from None
    return EXIT_OK


def _survey_spec(args) -> BoundSpec:
    presets = [bool(args.bound), args.bound_c3, args.bound_c4, args.conjecture]
    if sum(presets) > 1:
        raise CliError("give only one bound specification")
    if args.bound_c3:
        spec = BoundSpec(k=3, a=0, b=1, c=1, d=5)
    elif args.bound_c4:
        spec = BoundSpec(k=4, a=0, b=1, c=1, d=6)
    elif args.conjecture:
        spec = conjecture_bound(args.k)
    elif args.bound:
        spec = _parse_bound(args.bound, args.k)
    else:
        spec = conjecture_bound(args.k)
    if args.exclude:
        try:
            with open(args.exclude, encoding="ascii") as fh:
                exclusions = tuple(ln.strip() for ln in fh if ln.strip())
            spec = BoundSpec(
                k=spec.k, a=spec.a, b=spec.b, c=spec.c, d=spec.d, exclusions=exclusions
            )
        except (OSError, ValueError, GraphFormatError) as exc:
            raise CliError(f"bad exclusion list: {exc}") from None
    return spec


def _survey_graphs(args) -> list[Graph]:
    if args.enumerate is not None:
        if args.graph6 or args.file:
            raise CliError("--enumerate conflicts with --graph6/--file input")
        try:
            return [
                g
                for order in range(1, args.enumerate + 1)
                for g in enumerate_connected(order)
            ]
        except ValueError as exc:
            raise CliError(str(exc)) from None
    failures: list[IngestFailure] = []
    if args.graph6:
        source: object = args.graph6
    elif args.file:
        try:
            with open(args.file, encoding="ascii") as fh:
                source = fh.read()
        except OSError as exc:
            raise CliError(str(exc)) from None
    else:
        source = sys.stdin.read()
    try:
        graphs = list(ingest_graph6(source, skip_errors=args.skip_bad, failures=failures))
    except GraphFormatError as exc:
        raise CliError(str(exc)) from None
    for failure in failures:
        print(f"skipped line {failure.line_no}: {failure.error}", file=sys.stderr)
    return graphs


def _report_output(args, report: SurveyReport) -> None:
    if args.format == "csv":
        sys.stdout.write(report.to_csv())
        return
    if args.format == "json":
        print(json.dumps(report.to_json_dict(include_timing=args.timing), sort_keys=True))
        return
    totals = report.totals()
    print(f"records: {totals['records']}")
    for status, count in totals["by_status"].items():
        print(f"  {status}: {count}")
    for rec in report.violations:
        print(f"violation: {rec.graph6} iota={rec.iota} bound={rec.bound}")
    for rec in report.equalities:
        print(f"equality: {rec.graph6} iota={rec.iota} class={rec.extremal_class or '-'}")
    if args.timing:
        print(f"wall time: {report.wall_time_s:.3f}s")


def _cmd_survey(args) -> int:
    spec = _survey_spec(args)
    graphs = _survey_graphs(args)
    report = survey(graphs, spec, workers=args.workers, node_budget=args.budget)
    _report_output(args, report)
    if report.violations:
        return EXIT_VIOLATIONS
    if report.budget_failures:
        return EXIT_BUDGET
    return EXIT_OK


def _cmd_check(args) -> int:
    spec = _survey_spec(args)
    g = _load_graph(args)
    rec = check_graph(g, spec, node_budget=args.budget)
    if args.format == "csv":
        print(rec.CSV_HEADER)
        print(rec.csv_row())
        return (
            EXIT_VIOLATIONS
            if rec.status == "violation"
            else EXIT_BUDGET
            if rec.status == "budget_exhausted"
            else EXIT_OK
        )
    payload = rec.to_dict()
    _emit(
        args,
        payload,
        [
            f"graph6: {rec.graph6}",
            f"status: {rec.status}",
            f"iota: {rec.iota if rec.iota is not None else '-'} vs bound {rec.bound}",
            f"class: {rec.extremal_class or '-'}",
        ],
    )
    if rec.status == "violation":
        return EXIT_VIOLATIONS
    if rec.status == "budget_exhausted":
        return EXIT_BUDGET
    return EXIT_OK


def _default_workers() -> int:
    try:
        return max(1, int(os.environ.get("CYCLEISO_WORKERS", "1")))
    except ValueError:
        return 1


def _add_graph_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("--graph6", help="inline graph6 record")
    p.add_argument("--file", help="edge-list file ('n <count>' header) or graph6 file")


def _add_common(p: argparse.ArgumentParser, k_default: Optional[int] = None) -> None:
    p.add_argument("-k", type=int, default=k_default, help="cycle length")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cycleiso",
        description="cycle-isolation numbers: exact values, constructive bounds, surveys",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check whether a vertex set is cycle-isolating")
    _add_graph_input(p)
    _add_common(p, 4)
    p.add_argument("--set", required=True, help="comma-separated vertex ids")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("exact", help="exact isolation number with an optimal witness")
    _add_graph_input(p)
    _add_common(p, 4)
    p.add_argument("--budget", type=int, default=None, help="search node budget")
    p.set_defaults(fn=_cmd_exact)

    p = sub.add_parser("construct", help="constructive isolating set within (m+1)/6")
    _add_graph_input(p)
    _add_common(p, 4)
    p.set_defaults(fn=_cmd_construct)

    p = sub.add_parser("cons", help="attach a cycle to every vertex of a tree")
    p.add_argument("--tree", help="tree edge-list file (default: stdin)")
    _add_common(p, 4)
    p.set_defaults(fn=_cmd_cons)

    p = sub.add_parser("recognize", help="recognise membership in the extremal family")
    _add_graph_input(p)
    _add_common(p, 4)
    p.set_defaults(fn=_cmd_recognize)

    p = sub.add_parser("trees", help="enumerate trees up to isomorphism")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(fn=_cmd_trees)

    p = sub.add_parser("enumerate", help="enumerate connected graphs as graph6")
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(fn=_cmd_enumerate)

    for name in ("survey", "check"):
        p = sub.add_parser(
            name,
            help="evaluate a bound over a graph stream"
            if name == "survey"
            else "evaluate a bound for one graph",
        )
        _add_graph_input(p)
        _add_common(p, 4)
        p.add_argument("--bound", help='bound expression "a*n+b*m+c/d", e.g. "m+1/6"')
        p.add_argument(
            "--bound-c3", action="store_true", help="preset: k=3 bound (m+1)/5"
        )
        p.add_argument(
            "--bound-c4", action="store_true", help="preset: k=4 bound (m+1)/6"
        )
        p.add_argument(
            "--conjecture", action="store_true", help="preset: (m+1)/(k+2) for the given k"
        )
        p.add_argument("--exclude", help="file of graph6 records exempt from the bound")
        p.add_argument("--budget", type=int, default=None, help="solver node budget per graph")
        if name == "survey":
            p.add_argument(
                "--enumerate",
                type=int,
                default=None,
                metavar="N",
                help="survey every connected graph with at most N vertices",
            )
            p.add_argument("--skip-bad", action="store_true", help="skip malformed graph6 lines")
            p.add_argument("--workers", type=int, default=_default_workers())
            p.add_argument("--timing", action="store_true", help="report wall time")
            p.set_defaults(fn=_cmd_survey)
        else:
            p.set_defaults(fn=_cmd_check)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    if getattr(args, "k", None) is not None and args.k < 3:
        print("error: cycle length must be at least 3", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.fn(args)
    except (CliError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
