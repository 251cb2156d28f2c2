"""Verification suites.

A suite is a deterministic list of cases (graph6 strings plus parameters) and a
module-level check function mapping one case to a ``CaseRecord``.  Cases are
independent, so ``run_suite`` can fan them out over a process pool; records
come back in case order either way.
"""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone
from functools import lru_cache
from itertools import combinations
from math import comb, gcd
from typing import Callable, Iterable, Iterator

from . import engine, fields, groups
from . import graphs as gr
from .fields import BudgetError
from .graphs import Graph
from .poly import XPoly, XYPoly, YSeries2, expand_in_x_minus_1

SCHEMA_VERSION = 1
SINGLE_SUITES = ("thm-a", "adj-dim", "degree", "domination", "crt", "shifted-nonneg")
PAIR_SUITES = ("compose", "zeta-join")
SUITES = ("thm-a", "adj-dim", "compose", "degree", "domination", "zeta-join", "crt", "shifted-nonneg")


@dataclass
class CaseRecord:
    graph6: str
    params: dict
    status: str  # "pass", "fail", "skip" or "error"
    witness: dict | None = None
    data: dict | None = None

    def to_json(self) -> dict:
        out = {"graph6": self.graph6, "params": self.params, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.data is not None:
            out["data"] = self.data
        return out


@dataclass
class VerificationReport:
    suite: str
    scope: dict
    records: list[CaseRecord] = field(default_factory=list)
    wall_time: float = 0.0
    timestamp: str | None = None

    @property
    def totals(self) -> dict[str, int]:
        out = {"total": len(self.records), "pass": 0, "fail": 0, "skip": 0, "error": 0}
        for r in self.records:
            out[r.status] += 1
        return out

    @property
    def ok(self) -> bool:
        t = self.totals
        return t["fail"] == 0 and t["error"] == 0

    def to_json(self, timing: bool = True) -> dict:
        out = {
            "schema": SCHEMA_VERSION,
            "suite": self.suite,
            "scope": self.scope,
            "totals": self.totals,
            "records": [r.to_json() for r in self.records],
        }
        if timing:
            out["wall_time_s"] = round(self.wall_time, 3)
            out["timestamp"] = self.timestamp
        return out

    def dumps(self, timing: bool = True) -> str:
        return json.dumps(self.to_json(timing), indent=2, sort_keys=True)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["graph6", "params", "status", "witness"])
        for r in self.records:
            w.writerow([r.graph6, json.dumps(r.params, sort_keys=True), r.status,
                        json.dumps(r.witness, sort_keys=True) if r.witness else ""])
        return buf.getvalue()

    def summary(self) -> str:
        t = self.totals
        verdict = "PASS" if self.ok else "FAIL"
        return (f"{self.suite}: {verdict} ({t['total']} cases: {t['pass']} pass, {t['fail']} fail, "
                f"{t['skip']} skip, {t['error']} error)")


# helpers -----------------------------------------------------------------


def _poly_terms(p) -> dict[str, int]:
    if isinstance(p, XYPoly):
        return {f"X^{a}*Y^{b}": c for (a, b), c in sorted(p.terms.items())}
    return {f"X^{a}": c for a, c in sorted(p.terms.items())}


def first_mismatch(expected: dict, got: dict) -> dict | None:
    """Smallest key on which two coefficient tables differ (missing keys count as 0)."""
    for key in sorted(set(expected) | set(got), key=str):
        if expected.get(key, 0) != got.get(key, 0):
            return {"coefficient": str(key), "expected": expected.get(key, 0), "got": got.get(key, 0)}
    return None


def _fail(g6: str, params: dict, check: str, mismatch: dict | None = None, **extra) -> CaseRecord:
    witness = {"graph6": g6, **params, "check": check}
    if mismatch:
        witness.update(mismatch)
    witness.update(extra)
    return CaseRecord(g6, params, "fail", witness)


def _poly_fail(g6, params, check, expected, got) -> CaseRecord:
    return _fail(g6, params, check, first_mismatch(_poly_terms(expected), _poly_terms(got)))


# join-zeta first order ------------------------------------------------------


def join_zeta_y_coefficient(g1: Graph, g2: Graph) -> XPoly:
    """Y-coefficient of Q_{G1,G2} / ((1 - X^c Y)(1 - X^(c+1) Y)) mod Y^2,
    where c = m1 + m2 + n1 n2 and each factor W_i is taken as 1 + f_i Y."""
    n1, m1, n2, m2 = g1.n, g1.m, g2.n, g2.m
    f1, f2 = engine.compute_f(g1), engine.compute_f(g2)
    W1, W2 = YSeries2(1, f1), YSeries2(1, f2)

    b1 = m1 + m2 + (n1 - 1) * n2
    b2 = m1 + m2 + n1 * (n2 - 1)
    line1 = YSeries2(-1, XPoly.monomial(m1 + m2 + (n1 - 1) * (n2 - 1)))
    line2 = W1.scale_y(m2 + (n1 - 1) * n2) * YSeries2.linear(b1, -1) * YSeries2.linear(b1 + 1, -1)
    line3 = W2.scale_y(m1 + n1 * (n2 - 1)) * YSeries2.linear(b2, -1) * YSeries2.linear(b2 + 1, -1)
    Q = line1 + line2 + line3

    c = m1 + m2 + n1 * n2
    denom = YSeries2.linear(c, -1) * YSeries2.linear(c + 1, -1)
    series = Q * denom.inverse()
    if series.c0 != XPoly.const(1):
        raise ArithmeticError(f"constant term of the quotient is {series.c0}, expected 1")
    return series.c1


def join_zeta_first_order(g1: Graph, g2: Graph) -> bool:
    y1 = join_zeta_y_coefficient(g1, g2)
    direct = engine.compute_f(gr.join(g1, g2))
    formula = engine.join_f(engine.compute_f(g1), g1.m, g1.n, engine.compute_f(g2), g2.m, g2.n)
    return y1 == direct == formula


# case checks ---------------------------------------------------------------


def check_thm_a(case: tuple) -> CaseRecord:
    g6, q, budget_elems = case
    params = {"q": q}
    g = gr.parse_graph6(g6)
    poly_hist = groups.histogram_from_poly(g, q)
    rank_hist = fields.rank_class_histogram(g, q)
    lie_hist = groups.lie_class_histogram(g, q)
    for name, hist in (("rank", rank_hist), ("lie", lie_hist)):
        mm = first_mismatch(poly_hist, hist)
        if mm:
            return _fail(g6, params, f"polynomial vs {name} histogram", mm)
    data = {"histogram": {str(k): v for k, v in poly_hist.items()}}
    order = q ** (g.n + g.m)
    if order <= budget_elems:
        brute = groups.brute_force_class_histogram(g, groups.field_ring(q), budget_elems)
        mm = first_mismatch(poly_hist, brute)
        if mm:
            return _fail(g6, params, "polynomial vs brute-force histogram", mm)
        data["brute_force"] = "checked"
    else:
        data["brute_force"] = f"skipped: {order} elements > budget {budget_elems}"
    return CaseRecord(g6, params, "pass", data=data)


def check_adj_dim(case: tuple) -> CaseRecord:
    g6, q = case
    params = {"q": q}
    g = gr.parse_graph6(g6)
    F = fields.field_make(q)
    for x in fields.all_vectors(F, g.n):
        got = fields.adj_dim(g, F, x)
        want = fields.adj_dim_formula(g, fields.support(x))
        if got != want:
            return _fail(g6, params, "adjacency dimension", {"x": list(x), "expected": want, "got": got})
    return CaseRecord(g6, params, "pass")


@lru_cache(maxsize=None)
def _graph_polys(g6: str) -> tuple[Graph, XYPoly, XPoly]:
    g = gr.parse_graph6(g6)
    prof = engine.subset_profile(g)
    return g, engine.c_from_profile(prof, g.n), engine.f_from_profile(prof, g.n, g.m)


def check_compose(case: tuple) -> CaseRecord:
    g6a, g6b = case
    label = f"{g6a}+{g6b}"
    params = {"left": g6a, "right": g6b}
    (g1, C1, f1), (g2, C2, f2) = _graph_polys(g6a), _graph_polys(g6b)
    direct = engine.compute_C(gr.disjoint_union(g1, g2))
    if engine.union_C(C1, C2) != direct:
        return _poly_fail(label, params, "union_C", direct, engine.union_C(C1, C2))
    jg = gr.join(g1, g2)
    prof = engine.subset_profile(jg)
    direct = engine.c_from_profile(prof, jg.n)
    formula = engine.join_C(C1, g1.n, C2, g2.n)
    if formula != direct:
        return _poly_fail(label, params, "join_C", direct, formula)
    direct_f = engine.f_from_profile(prof, jg.n, jg.m)
    formula_f = engine.join_f(f1, g1.m, g1.n, f2, g2.m, g2.n)
    if formula_f != direct_f:
        return _poly_fail(label, params, "join_f", direct_f, formula_f)
    return CaseRecord(label, params, "pass")


def check_degree(case: tuple) -> CaseRecord:
    (g6,) = case
    params: dict = {}
    g = gr.parse_graph6(g6)
    prof = engine.subset_profile(g)
    C = engine.c_from_profile(prof, g.n)
    f = engine.f_from_profile(prof, g.n, g.m)
    d = f.degree()
    e = engine.eta_from_profile(prof)
    n = g.n

    def fail(check, expected, got):
        return _fail(g6, params, check, {"expected": expected, "got": got})

    if d != g.m + e:
        return fail("deg f = m + eta", g.m + e, d)
    if e != engine.eta_via_dominating(g):
        return fail("eta via dominating sets", engine.eta_via_dominating(g), e)
    if not n <= d <= comb(n, 2) + 1:
        return fail("n <= deg f <= C(n,2)+1", [n, comb(n, 2) + 1], d)
    if (d == n) != gr.is_path_forest(g):
        return fail("lower bound attained iff disjoint union of paths", gr.is_path_forest(g), d == n)
    upper_class = g.m == comb(n, 2) or n == 2
    if (d == comb(n, 2) + 1) != upper_class:
        return fail("upper bound attained iff complete or n = 2", upper_class, d == comb(n, 2) + 1)
    if gr.is_connected(g) and gr.is_claw_free(g) and e != 1:
        return fail("connected claw-free has eta = 1", 1, e)
    if not engine.hansen_ok(g, gr.independence_number(g)):
        return fail("independence number bound", gr.hansen_bound(n, g.m), gr.independence_number(g))
    # structural identities of C
    if C.deg_y() != gr.matroid_rank(g):
        return fail("deg_Y C = rank", gr.matroid_rank(g), C.deg_y())
    if C.eval_y(0) != XPoly.monomial(gr.isolated_count(g)):
        return fail("C(X,0) = X^isolated", f"X^{gr.isolated_count(g)}", str(C.eval_y(0)))
    if C.eval_x(1) != XPoly.const(1, "Y"):
        return fail("C(1,Y) = 1", "1", str(C.eval_x(1)))
    shifted = C.shift_x(1)
    top = shifted.coeff_y(gr.matroid_rank(g))
    if top.degree() != n or top.coeff(n) != 1 or any(
            a >= n for b, p in shifted.y_coeffs().items() if b != gr.matroid_rank(g) for a in p.terms):
        return fail("C(X+1,Y) = X^n Y^rank + lower", f"X^{n}*Y^{gr.matroid_rank(g)}", str(shifted))
    return CaseRecord(g6, params, "pass", data={"deg_f": d, "eta": e})


def _k2_power(g: Graph) -> int | None:
    """r if g is a disjoint union of r edges, else None."""
    if all(g.degree(v) == 1 for v in range(g.n)):
        return g.m
    return None


def check_domination(case: tuple) -> CaseRecord:
    (g6,) = case
    params: dict = {}
    g = gr.parse_graph6(g6)
    C = engine.compute_C(g)
    if g.n >= 2:
        lhs = C.shift_x(1).coeff_y(g.n - 1)
        rhs = engine.connected_domination_poly(g)
        if lhs != rhs:
            return _poly_fail(g6, params, "leading coefficient vs connected dominating sets", rhs, lhs)
    if gr.is_tree(g) and g.n >= 3 and not engine.tree_leading_coeff_check(g, C):
        ell = gr.leaves(g)
        return _fail(g6, params, "tree leading coefficient",
                     expected=f"(X-1)^{g.n - ell}*X^{ell}", got=str(C.coeff_y(g.n - 1)))
    F0 = engine.compute_F(g, C=C).eval_x(0)
    r = _k2_power(g)
    want = XPoly.monomial(r, (-1) ** r, "Y") if r is not None else XPoly({}, "Y")
    if F0 != want:
        return _fail(g6, params, "F(0,Y)", expected=str(want), got=str(F0))
    return CaseRecord(g6, params, "pass")


def check_zeta_join(case: tuple) -> CaseRecord:
    g6a, g6b = case
    label = f"{g6a}+{g6b}"
    params = {"left": g6a, "right": g6b}
    g1, g2 = gr.parse_graph6(g6a), gr.parse_graph6(g6b)
    y1 = join_zeta_y_coefficient(g1, g2)
    direct = engine.compute_f(gr.join(g1, g2))
    if y1 != direct:
        return _poly_fail(label, params, "Y-coefficient vs f of the join", direct, y1)
    formula = engine.join_f(engine.compute_f(g1), g1.m, g1.n, engine.compute_f(g2), g2.m, g2.n)
    if formula != direct:
        return _poly_fail(label, params, "join_f vs f of the join", direct, formula)
    return CaseRecord(label, params, "pass")


def check_crt(case: tuple) -> CaseRecord:
    g6, N1, N2, budget_elems = case
    params = {"N1": N1, "N2": N2}
    g = gr.parse_graph6(g6)
    try:
        h = groups.brute_force_class_histogram(g, groups.zmod_ring(N1 * N2), budget_elems)
        h1 = groups.brute_force_class_histogram(g, groups.zmod_ring(N1), budget_elems)
        h2 = groups.brute_force_class_histogram(g, groups.zmod_ring(N2), budget_elems)
    except BudgetError as exc:
        return CaseRecord(g6, params, "skip", data={"reason": str(exc)})
    conv = groups.dirichlet_convolution(h1, h2)
    mm = first_mismatch(conv, h)
    if mm:
        return _fail(g6, params, f"Z/{N1 * N2} histogram vs Dirichlet convolution", mm)
    return CaseRecord(g6, params, "pass", data={"histogram": {str(k): v for k, v in h.items()}})


def check_shifted_nonneg(case: tuple) -> CaseRecord:
    (g6,) = case
    params: dict = {}
    g = gr.parse_graph6(g6)
    table = expand_in_x_minus_1(engine.compute_F(g))
    for (a, b), c in sorted(table.items()):
        if c < 0:
            return _fail(g6, params, "F in powers of X-1", coefficient=f"(X-1)^{a}*Y^{b}", got=c)
    for a, c in sorted(expand_in_x_minus_1(engine.compute_f(g)).items()):
        if c < 0:
            return _fail(g6, params, "f in powers of X-1", coefficient=f"(X-1)^{a}", got=c)
    return CaseRecord(g6, params, "pass")


CHECKS: dict[str, Callable[[tuple], CaseRecord]] = {
    "thm-a": check_thm_a,
    "adj-dim": check_adj_dim,
    "compose": check_compose,
    "degree": check_degree,
    "domination": check_domination,
    "zeta-join": check_zeta_join,
    "crt": check_crt,
    "shifted-nonneg": check_shifted_nonneg,
}


# scopes --------------------------------------------------------------------


@dataclass
class Scope:
    """Which graphs and parameters a suite runs over.

    Single-graph suites use every labeled graph with nmin <= n <= nmax (or only
    trees, or an explicit list); pair suites use ordered pairs of labeled
    graphs with nmin <= n1 + n2 <= nmax.
    """

    nmax: int = 4
    nmin: int | None = None
    qs: tuple[int, ...] = (2, 3)
    Ns: tuple[int, ...] = (2, 3)
    graphs: tuple[str, ...] = ()
    trees: bool = False
    budget_elems: int = groups.DEFAULT_ELEMENT_BUDGET

    def describe(self, suite: str) -> dict:
        out: dict = {"nmax": self.nmax, "nmin": self.effective_nmin(suite)}
        if self.graphs:
            out = {"graphs": list(self.graphs)}
        if self.trees:
            out["trees"] = True
        if suite in ("thm-a", "adj-dim"):
            out["q"] = list(self.qs)
        if suite == "crt":
            out["N"] = list(self.Ns)
        if suite in ("thm-a", "crt"):
            out["budget_elems"] = self.budget_elems
        return out

    def effective_nmin(self, suite: str) -> int:
        if self.nmin is not None:
            return self.nmin
        return 2 if suite in PAIR_SUITES else self.nmax


def _graphs_on(n: int, trees: bool) -> Iterator[Graph]:
    if trees:
        return gr.all_trees(n)
    return gr.all_labeled_graphs(n)


def scope_graphs(scope: Scope, suite: str) -> list[str]:
    if scope.graphs:
        return list(scope.graphs)
    out = []
    for n in range(max(1, scope.effective_nmin(suite)), scope.nmax + 1):
        out.extend(g.to_graph6() for g in _graphs_on(n, scope.trees))
    return out


def scope_pairs(scope: Scope, suite: str) -> list[tuple[str, str]]:
    if scope.graphs:
        return [(a, b) for a in scope.graphs for b in scope.graphs]
    by_n = {n: [g.to_graph6() for g in gr.all_labeled_graphs(n)] for n in range(1, scope.nmax)}
    lo = max(2, scope.effective_nmin(suite))
    out = []
    for total in range(lo, scope.nmax + 1):
        for n1 in range(1, total):
            out.extend((a, b) for a in by_n[n1] for b in by_n[total - n1])
    return out


def coprime_pairs(Ns: Iterable[int]) -> list[tuple[int, int]]:
    Ns = sorted(set(Ns))
    return [(a, b) for a, b in combinations(Ns, 2) if gcd(a, b) == 1]


def suite_cases(suite: str, scope: Scope) -> list[tuple]:
    if suite not in CHECKS:
        raise ValueError(f"unknown suite {suite!r}; expected one of {', '.join(SUITES)}")
    if suite in PAIR_SUITES:
        return scope_pairs(scope, suite)
    g6s = scope_graphs(scope, suite)
    if suite == "thm-a":
        return [(g6, q, scope.budget_elems) for q in scope.qs for g6 in g6s]
    if suite == "adj-dim":
        return [(g6, q) for q in scope.qs for g6 in g6s]
    if suite == "crt":
        pairs = coprime_pairs(scope.Ns)
        if not pairs:
            raise ValueError(f"crt needs at least two coprime moduli, got {list(scope.Ns)}")
        return [(g6, a, b, scope.budget_elems) for a, b in pairs for g6 in g6s]
    return [(g6,) for g6 in g6s]


def _run_case(suite: str, case: tuple) -> CaseRecord:
    try:
        return CHECKS[suite](case)
    except BudgetError as exc:
        return CaseRecord(str(case[0]), {}, "skip", data={"reason": str(exc)})
    except engine.EnumerationCapError as exc:
        return CaseRecord(str(case[0]), {}, "skip", data={"reason": str(exc)})


def _run_star(args: tuple) -> CaseRecord:
    return _run_case(*args)


def run_suite(suite: str, scope: Scope, jobs: int = 1) -> VerificationReport:
    cases = suite_cases(suite, scope)
    start = time.perf_counter()
    if jobs > 1 and len(cases) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_run_star, [(suite, c) for c in cases], chunksize=16))
    else:
        records = [_run_case(suite, c) for c in cases]
    return VerificationReport(
        suite=suite, scope=scope.describe(suite), records=records,
        wall_time=time.perf_counter() - start,
        timestamp=datetime.now(timezone.utc).isoformat(timespec="seconds"))


# batch ---------------------------------------------------------------------


def batch_records(lines: Iterable[str], suite: str | None = None, scope: Scope | None = None) -> list[CaseRecord]:
    """One record per non-blank line, in input order.

    Without a suite each record carries the polynomial report; with a single
    graph suite each line is checked as one case of it.  Parse errors become
    ``error`` records and processing continues.
    """
    scope = scope or Scope()
    out = []
    for lineno, raw in enumerate(lines, start=1):
        text = raw.strip()
        if not text:
            continue
        params = {"line": lineno}
        try:
            g = gr.parse_graph6(text)
        except gr.GraphError as exc:
            witness = {"line": lineno, "input": text, "error": str(exc)}
            if isinstance(exc, gr.Graph6Error):
                witness["offset"] = exc.offset
            out.append(CaseRecord(text, params, "error", witness))
            continue
        g6 = g.to_graph6()
        if suite is None:
            try:
                rep = engine.graph_report(g)
            except engine.EnumerationCapError as exc:
                out.append(CaseRecord(g6, params, "skip", data={"reason": str(exc)}))
                continue
            out.append(CaseRecord(g6, params, "pass", data={
                "n": rep.n, "m": rep.m, "f": str(rep.f), "eta": rep.eta, "F": str(rep.F)}))
            continue
        if suite in PAIR_SUITES:
            raise ValueError(f"suite {suite!r} takes pairs of graphs and cannot run per line")
        sub = Scope(nmax=scope.nmax, qs=scope.qs, Ns=scope.Ns, graphs=(g6,), budget_elems=scope.budget_elems)
        for case in suite_cases(suite, sub):
            rec = _run_case(suite, case)
            rec.params = {**params, **rec.params}
            out.append(rec)
    return out


def batch_csv(records: list[CaseRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["line", "graph6", "status", "n", "m", "f", "eta", "detail"])
    for r in records:
        d = r.data or {}
        detail = json.dumps(r.witness, sort_keys=True) if r.witness else ""
        w.writerow([r.params.get("line", ""), r.graph6, r.status, d.get("n", ""), d.get("m", ""),
                    d.get("f", ""), d.get("eta", ""), detail])
    return buf.getvalue()
