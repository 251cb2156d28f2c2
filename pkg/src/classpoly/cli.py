"""Command-line interface.

Exit codes: 0 success or all cases pass, 1 any case fails, 2 usage or parse
error, 3 budget refusal.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import engine, fields, groups, verify
from . import graphs as gr
from .fields import BudgetError
from .graphs import Graph

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _max_vertices(budget_subsets: int) -> int:
    if budget_subsets < 1:
        raise UsageError("--budget-subsets must be positive")
    return int(math.log2(budget_subsets))


def read_graph(args) -> Graph:
    given = [a for a in (args.g6, args.edges, args.family) if a]
    if len(given) != 1:
        raise UsageError("give exactly one of --g6, --edges, --family")
    if args.g6:
        return gr.parse_graph6(args.g6)
    if args.edges:
        return gr.parse_edge_list(Path(args.edges).read_text())
    kind, *params = args.family
    try:
        values = [int(p) for p in params]
    except ValueError:
        raise UsageError(f"family parameters must be integers, got {params}") from None
    return gr.family(kind, *values)


def _add_graph_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--g6", help="graph in graph6 format")
    p.add_argument("--edges", metavar="FILE", help="edge-list file ('n m' header, then one edge per line)")
    p.add_argument("--family", nargs="+", metavar=("KIND", "PARAM"),
                   help=f"named family: {', '.join(gr.FAMILIES)} followed by its parameters")


def _add_output_args(p: argparse.ArgumentParser, latex: bool = False, csv: bool = False) -> None:
    g = p.add_mutually_exclusive_group()
    g.add_argument("--json", action="store_true", help="emit JSON")
    if csv:
        g.add_argument("--csv", action="store_true", help="emit CSV")
    if latex:
        g.add_argument("--latex", action="store_true", help="emit LaTeX")


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


# commands --------------------------------------------------------------------


def cmd_poly(args) -> int:
    g = read_graph(args)
    rep = engine.graph_report(g, _max_vertices(args.budget_subsets))
    if args.json:
        _emit_json({"schema": verify.SCHEMA_VERSION, **rep.to_json()})
    elif args.latex:
        print(rep.to_latex())
    else:
        print(f"graph6: {rep.graph6}  n={rep.n} m={rep.m}")
        print(f"C = {rep.C}")
        print(f"F = {rep.F}")
        print(f"f = {rep.f}")
        print(f"eta = {rep.eta}  deg f = {rep.deg_f}  rank = {rep.rank}")
    return EXIT_OK


def _scope(args) -> verify.Scope:
    return verify.Scope(
        nmax=args.nmax, nmin=args.nmin, qs=args.q, Ns=args.N,
        graphs=tuple(gr.parse_graph6(s).to_graph6() for s in (args.g6 or ())),
        trees=args.trees, budget_elems=args.budget_elems)


def cmd_verify(args) -> int:
    if args.nmax > gr.MAX_ENUM_VERTICES and not args.g6 and not args.trees:
        raise UsageError(f"--nmax above {gr.MAX_ENUM_VERTICES} needs --trees or explicit --g6 graphs")
    try:
        report = verify.run_suite(args.suite, _scope(args), jobs=args.jobs)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.json:
        print(report.dumps(timing=not args.no_timestamp))
    elif args.csv:
        sys.stdout.write(report.to_csv())
    else:
        for r in report.records:
            if r.status in ("fail", "error"):
                print(json.dumps(r.witness, sort_keys=True))
        print(report.summary())
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_batch(args) -> int:
    try:
        lines = Path(args.file).read_text().splitlines()
    except OSError as exc:
        raise UsageError(f"cannot read {args.file}: {exc}") from exc
    scope = verify.Scope(qs=args.q, Ns=args.N, budget_elems=args.budget_elems)
    try:
        records = verify.batch_records(lines, args.suite, scope)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    report = verify.VerificationReport(suite=args.suite or "poly", scope={"file": Path(args.file).name},
                                       records=records)
    if args.json:
        print(report.dumps(timing=False))
    elif args.csv or args.suite is None:
        sys.stdout.write(verify.batch_csv(records))
    else:
        print(report.summary())
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_family(args) -> int:
    kind = args.kind
    if args.upto is not None:
        if args.params:
            raise UsageError("--upto replaces the family parameter")
        if kind == "complete_bipartite":
            raise UsageError("--upto needs a one-parameter family")
        sizes = [(k,) for k in range(1, args.upto + 1)]
    else:
        sizes = [tuple(args.params)]
    rows = []
    for params in sizes:
        try:
            g = gr.family(kind, *params)
        except gr.GraphError:
            if args.upto is not None:
                continue  # e.g. cycles below 3 vertices
            raise
        label = f"{kind}({', '.join(map(str, params))})"
        rows.append((label, engine.graph_report(g, _max_vertices(args.budget_subsets))))
    if args.latex:
        print(engine.family_latex_table(rows))
    elif args.json:
        _emit_json({"schema": verify.SCHEMA_VERSION, "family": kind,
                    "rows": [{"label": lbl, **rep.to_json()} for lbl, rep in rows]})
    else:
        for label, rep in rows:
            print(f"{label}: f = {rep.f}")
    return EXIT_OK


def cmd_zeta(args) -> int:
    g = read_graph(args)
    out = {"schema": verify.SCHEMA_VERSION, "graph6": g.to_graph6(), "fields": [], "rings": []}
    ok = True
    for q in args.q:
        poly_hist = groups.histogram_from_poly(g, q)
        lie_hist = groups.lie_class_histogram(g, q, args.budget_elems)
        agree = poly_hist == lie_hist
        ok &= agree
        out["fields"].append({"q": q, "zeta": groups.class_zeta(poly_hist).to_json(),
                              "class_number": groups.class_number(poly_hist), "lie_agrees": agree})
    for N in args.N:
        hist = groups.brute_force_class_histogram(g, groups.zmod_ring(N), args.budget_elems)
        out["rings"].append({"N": N, "zeta": groups.class_zeta(hist).to_json(),
                             "class_number": groups.class_number(hist)})
    if args.json:
        _emit_json(out)
    else:
        for rec in out["fields"]:
            zeta = groups.class_zeta({d["size"]: d["count"] for d in rec["zeta"]})
            print(f"F_{rec['q']}: {zeta}   (classes: {rec['class_number']})")
        for rec in out["rings"]:
            zeta = groups.class_zeta({d["size"]: d["count"] for d in rec["zeta"]})
            print(f"Z/{rec['N']}: {zeta}   (classes: {rec['class_number']})")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_domset(args) -> int:
    g = read_graph(args)
    if g.n < 2:
        raise UsageError("connected dominating sets are compared against C only for n >= 2")
    sets = gr.connected_dominating_sets(g)
    poly = engine.connected_domination_poly(g)
    lead = engine.compute_C(g, _max_vertices(args.budget_subsets)).shift_x(1).coeff_y(g.n - 1)
    agree = poly == lead
    if args.json:
        _emit_json({"schema": verify.SCHEMA_VERSION, "graph6": g.to_graph6(),
                    "sets": [gr.members(D) for D in sets], "polynomial": poly.to_json(), "agrees": agree})
    else:
        for D in sets:
            print(" ".join(map(str, gr.members(D))))
        print(f"generating polynomial: {poly}  (matches C: {'yes' if agree else 'NO'})")
    return EXIT_OK if agree else EXIT_FAIL


def cmd_eta(args) -> int:
    g = read_graph(args)
    mv = _max_vertices(args.budget_subsets)
    e = engine.eta(g, mv)
    via_dom = engine.eta_via_dominating(g, mv)
    deg = engine.compute_f(g, mv).degree()
    agree = e == via_dom == deg - g.m
    if args.json:
        _emit_json({"schema": verify.SCHEMA_VERSION, "graph6": g.to_graph6(), "eta": e,
                    "eta_dominating": via_dom, "deg_f_minus_m": deg - g.m, "agrees": agree})
    else:
        print(f"eta = {e}  (dominating sets: {via_dom}, deg f - m: {deg - g.m})")
    return EXIT_OK if agree else EXIT_FAIL


# parser --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="classpoly", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def budgets(p, elems=False, subsets=False):
        if elems:
            p.add_argument("--budget-elems", type=int, default=groups.DEFAULT_ELEMENT_BUDGET,
                           help="largest group or vector space enumerated (default %(default)s)")
        if subsets:
            p.add_argument("--budget-subsets", type=int, default=2 ** engine.DEFAULT_MAX_VERTICES,
                           help="largest number of vertex subsets enumerated (default %(default)s)")

    p = sub.add_parser("poly", help="class-counting polynomials of one graph")
    _add_graph_args(p)
    _add_output_args(p, latex=True)
    budgets(p, subsets=True)
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=verify.SUITES)
    p.add_argument("--nmax", type=int, default=4)
    p.add_argument("--nmin", type=int, default=None,
                   help="smallest size in scope (default: nmax for single graphs, 2 for pairs)")
    p.add_argument("--q", type=_int_list, default=(2, 3), help="field sizes, e.g. 2,3")
    p.add_argument("--N", type=_int_list, default=(2, 3), help="moduli for the crt suite, e.g. 2,3")
    p.add_argument("--g6", action="append", help="restrict to this graph (repeatable)")
    p.add_argument("--trees", action="store_true", help="enumerate labeled trees instead of all graphs")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--no-timestamp", action="store_true", help="omit timing fields from JSON")
    _add_output_args(p, csv=True)
    budgets(p, elems=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("batch", help="process a file of graph6 lines")
    p.add_argument("file")
    p.add_argument("--suite", choices=verify.SINGLE_SUITES)
    p.add_argument("--q", type=_int_list, default=(2, 3))
    p.add_argument("--N", type=_int_list, default=(2, 3))
    _add_output_args(p, csv=True)
    budgets(p, elems=True)
    p.set_defaults(func=cmd_batch)

    p = sub.add_parser("family", help="polynomials of a named family")
    p.add_argument("kind", choices=gr.FAMILIES)
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--upto", type=int, help="tabulate sizes 1..UPTO of a one-parameter family")
    _add_output_args(p, latex=True)
    budgets(p, subsets=True)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("zeta", help="conjugacy class zeta functions")
    _add_graph_args(p)
    p.add_argument("--q", type=_int_list, default=(2,))
    p.add_argument("--N", type=_int_list, default=(), help="also enumerate over Z/N by brute force")
    _add_output_args(p)
    budgets(p, elems=True)
    p.set_defaults(func=cmd_zeta)

    p = sub.add_parser("domset", help="connected dominating sets")
    _add_graph_args(p)
    _add_output_args(p)
    budgets(p, subsets=True)
    p.set_defaults(func=cmd_domset)

    p = sub.add_parser("eta", help="the invariant eta = deg f - m")
    _add_graph_args(p)
    _add_output_args(p)
    budgets(p, subsets=True)
    p.set_defaults(func=cmd_eta)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, gr.GraphError, fields.FieldError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (BudgetError, engine.EnumerationCapError) as exc:
        print(f"budget refused: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
