"""Class-size polynomials of graphs by exhaustive subset enumeration.

For a vertex subset U write s = |U|, b = |N[U]| and c = number of components
of the induced subgraph on U.  Every polynomial here is a sum over subsets of
a term depending only on (s, b, c), so the enumeration is done once into a
histogram of those triples (:func:`subset_profile`) and the polynomials are
assembled from it.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import comb

from . import graphs as gr
from .graphs import Graph
from .poly import XPoly, XYPoly

DEFAULT_MAX_VERTICES = 24

X_MINUS_1 = XPoly({1: 1, 0: -1})


class EnumerationCapError(RuntimeError):
    """Refusal to enumerate 2^n subsets beyond the configured vertex cap."""

    def __init__(self, n: int, cap: int):
        super().__init__(f"graph has {n} vertices; subset enumeration is capped at {cap} (2^{cap} subsets)")
        self.n = n
        self.cap = cap


def _check_cap(g: Graph, cap: int) -> None:
    if g.n > cap:
        raise EnumerationCapError(g.n, cap)


def subset_profile(g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES, method: str = "dp") -> Counter:
    """Histogram ``(|U|, |N[U]|, c(U)) -> number of subsets U``.

    ``method="dp"`` walks 0..2^n-1 once, reusing N[U \\ {v}] and the component
    count of U minus the component containing its lowest vertex.
    ``method="naive"`` recomputes everything per subset from scratch.
    """
    _check_cap(g, max_vertices)
    n = g.n
    total = 1 << n
    if method == "naive":
        prof: Counter = Counter()
        for U in range(total):
            prof[(U.bit_count(), gr.closed_neighborhood(g, U).bit_count(),
                  gr.component_count_induced(g, U))] += 1
        return prof
    if method != "dp":
        raise ValueError(f"unknown method {method!r}")

    adj = g.adj
    closed = g.closed
    nbh = [0] * total
    comps = [0] * total
    prof = Counter({(0, 0, 0): 1})
    for U in range(1, total):
        low = U & -U
        v = low.bit_length() - 1
        nbh[U] = nb = nbh[U ^ low] | closed[v]
        # flood fill the component of v inside U
        comp = frontier = low
        while frontier:
            grown = 0
            while frontier:
                f = frontier & -frontier
                grown |= adj[f.bit_length() - 1]
                frontier ^= f
            frontier = grown & U & ~comp
            comp |= frontier
        comps[U] = c = comps[U & ~comp] + 1
        prof[(U.bit_count(), nb.bit_count(), c)] += 1
    return prof


def _x_minus_1_rows(n: int) -> list[list[int]]:
    """Row s lists the coefficients of (X-1)^s by ascending power of X."""
    return [[comb(s, i) * (-1) ** (s - i) for i in range(s + 1)] for s in range(n + 1)]


def c_from_profile(prof: Counter, n: int) -> XYPoly:
    rows = _x_minus_1_rows(n)
    acc: dict[tuple[int, int], int] = {}
    for (s, b, c), count in prof.items():
        j = b - c
        for i, coef in enumerate(rows[s]):
            acc[(i, j)] = acc.get((i, j), 0) + coef * count
    return XYPoly(acc)


def compute_C(g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES, method: str = "dp") -> XYPoly:
    """sum over U of (X-1)^|U| * Y^(|N[U]| - c(U))."""
    return c_from_profile(subset_profile(g, max_vertices, method), g.n)


def compute_F(g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES, C: XYPoly | None = None) -> XYPoly:
    """X^m * C(X, Y/X)."""
    if C is None:
        C = compute_C(g, max_vertices)
    F = C.substitute_y_scaled(-1).mul_monomial(g.m)
    if not F.is_polynomial():
        raise AssertionError(f"class-size polynomial has negative X exponents for {g!r}: {F}")
    return F


def f_from_profile(prof: Counter, n: int, m: int) -> XPoly:
    rows = _x_minus_1_rows(n)
    acc: dict[int, int] = {}
    for (s, b, c), count in prof.items():
        shift = m + c - b
        for i, coef in enumerate(rows[s]):
            acc[i + shift] = acc.get(i + shift, 0) + coef * count
    return XPoly(acc)


def compute_f(g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES) -> XPoly:
    """sum over U of (X-1)^|U| * X^(m + c(U) - |N[U]|), the class-counting polynomial."""
    return f_from_profile(subset_profile(g, max_vertices), g.n, g.m)


# closed forms ------------------------------------------------------------


@dataclass(frozen=True)
class ClosedForm:
    C: XYPoly | None = None
    F: XYPoly | None = None
    f: XPoly | None = None


def _x(a: int, c: int = 1) -> XPoly:
    return XPoly.monomial(a, c)


def _xy(p: XPoly, b: int) -> XYPoly:
    return XYPoly.from_x(p, b)


def _complete_forms(n: int) -> ClosedForm:
    C = _xy(_x(n) - 1, n - 1) + 1
    F = _xy(_x(comb(n, 2) + 1) - _x(comb(n - 1, 2)), n - 1) + _x(comb(n, 2))
    f = _x(comb(n - 1, 2)) * (_x(n) + _x(n - 1) - 1)
    return ClosedForm(C, F, f)


def _edgeless_forms(n: int) -> ClosedForm:
    return ClosedForm(XYPoly.from_x(_x(n)), XYPoly.from_x(_x(n)), _x(n))


def _star_forms(n: int) -> ClosedForm:
    C = _xy(_x(n + 1) - _x(n), n) + _xy(_x(n) - 1, 1) + 1
    F = (_xy(_x(2) - _x(1), n) + _xy(_x(n) - 1, 1) + XYPoly.from_x(_x(1))).mul_monomial(n - 1)
    f = _x(n - 1) * (_x(n) + _x(2) - 1)
    return ClosedForm(C, F, f)


def _bipartite_forms(a: int, b: int) -> ClosedForm:
    A, B = _x(a) - 1, _x(b) - 1
    C = 1 + _xy(A, b) + _xy(B, a) + _xy(A * B, a + b - 1)
    F = (_xy(_x((a - 1) * (b - 1)) * A * B, a + b - 1)
         + _xy(_x((a - 1) * b) * A, b)
         + _xy(_x(a * (b - 1)) * B, a)
         + _x(a * b))
    f = _x((a - 1) * (b - 1)) * (A * B + _x(a - 1) * A + _x(b - 1) * B + _x(a + b - 1))
    return ClosedForm(C, F, f)


def _binom(top: int, k: int) -> int:
    return comb(top, k) if 0 <= k <= top else 0


def path_f(n: int) -> XPoly:
    """Closed form for the class-counting polynomial of the path on n vertices."""
    out = XPoly()
    for a in range(n // 2 + 1):
        out = out + _x(n - a - 1) * X_MINUS_1 ** a * _binom(n - a, a)
        out = out + _x(n - a - 1) * X_MINUS_1 ** (a + 1) * _binom(n - a - 1, a)
    return out


def closed_form(kind: str, *params: int) -> ClosedForm:
    """Transcribed formulas for the families with known closed forms."""
    if any(not isinstance(p, int) or p < 1 for p in params):
        raise ValueError(f"family parameters must be positive integers, got {params}")
    table = {
        "complete": (_complete_forms, 1),
        "edgeless": (_edgeless_forms, 1),
        "star": (_star_forms, 1),
        "complete_bipartite": (_bipartite_forms, 2),
        "path": (lambda n: ClosedForm(f=path_f(n)), 1),
    }
    if kind not in table:
        raise ValueError(f"no closed form for family {kind!r}")
    make, arity = table[kind]
    if len(params) != arity:
        raise ValueError(f"family {kind!r} takes {arity} parameter(s), got {len(params)}")
    return make(*params)


# composition -------------------------------------------------------------


def union_C(C1: XYPoly, C2: XYPoly) -> XYPoly:
    return C1 * C2


def join_C(C1: XYPoly, n1: int, C2: XYPoly, n2: int) -> XYPoly:
    return (1 + (C1 - 1).mul_monomial(0, n2) + (C2 - 1).mul_monomial(0, n1)
            + _xy((_x(n1) - 1) * (_x(n2) - 1), n1 + n2 - 1))


def join_f(f1: XPoly, m1: int, n1: int, f2: XPoly, m2: int, n2: int) -> XPoly:
    return (_x(m1 + m2 + n1 * n2)
            + (f1 - _x(m1)).shift_exponent(m2 + (n1 - 1) * n2)
            + (f2 - _x(m2)).shift_exponent(m1 + n1 * (n2 - 1))
            + _x(m1 + m2 + (n1 - 1) * (n2 - 1)) * (_x(n1) - 1) * (_x(n2) - 1))


# eta and domination -------------------------------------------------------


def eta_from_profile(prof: Counter) -> int:
    return max(c - (b - s) for (s, b, c) in prof)


def eta(g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES, verify: bool = False) -> int:
    """max over U of c(U) - |N[U] \\ U|.

    With ``verify=True`` the value is also checked against deg(f) - m and
    against the maximum over dominating sets.
    """
    prof = subset_profile(g, max_vertices)
    value = eta_from_profile(prof)
    if verify:
        via_degree = f_from_profile(prof, g.n, g.m).degree() - g.m
        via_dom = eta_via_dominating(g, max_vertices)
        if not value == via_degree == via_dom:
            raise AssertionError(
                f"eta mismatch for {g.to_graph6()}: subsets {value}, deg f - m {via_degree}, "
                f"dominating sets {via_dom}")
    return value


def eta_via_dominating(g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES) -> int:
    """max over dominating sets U of c(U) + |U| - n."""
    _check_cap(g, max_vertices)
    full = g.vertices
    best = None
    for U in range(1, full + 1):
        if gr.closed_neighborhood(g, U) != full:
            continue
        val = gr.component_count_induced(g, U) + U.bit_count() - g.n
        if best is None or val > best:
            best = val
    return best


def connected_domination_poly(g: Graph) -> XPoly:
    out: dict[int, int] = {}
    for D in gr.connected_dominating_sets(g):
        k = D.bit_count()
        out[k] = out.get(k, 0) + 1
    return XPoly(out)


def tree_leading_coeff_check(t: Graph, C: XYPoly | None = None) -> bool:
    """Leading Y-coefficient of C for a tree with n >= 3 vertices and l leaves is (X-1)^(n-l) X^l."""
    if not gr.is_tree(t):
        raise ValueError(f"not a tree: {t.to_graph6()}")
    if t.n < 3:
        raise ValueError(f"tree must have at least 3 vertices, got {t.n}")
    if C is None:
        C = compute_C(t)
    ell = gr.leaves(t)
    return C.coeff_y(t.n - 1) == X_MINUS_1 ** (t.n - ell) * _x(ell)


def hansen_ok(g: Graph, alpha: int) -> bool:
    return alpha <= gr.hansen_bound(g.n, g.m)


# report ------------------------------------------------------------------


@dataclass
class GraphPolyReport:
    graph6: str
    n: int
    m: int
    C: XYPoly
    F: XYPoly
    f: XPoly
    eta: int
    deg_f: int
    rank: int
    isolated: int
    extra: dict = field(default_factory=dict)

    def check(self) -> list[str]:
        """Internal consistency problems (empty when everything agrees)."""
        problems = []
        if self.F != self.C.substitute_y_scaled(-1).mul_monomial(self.m):
            problems.append("F != X^m C(X, Y/X)")
        if not self.F.is_polynomial():
            problems.append("F has negative X exponents")
        if self.f != self.F.eval_y(1):
            problems.append("f != F(X, 1)")
        if self.deg_f != self.m + self.eta:
            problems.append("deg f != m + eta")
        if self.C.deg_y() != self.rank:
            problems.append("deg_Y C != rank")
        return problems

    def to_json(self) -> dict:
        out = {
            "graph6": self.graph6,
            "n": self.n,
            "m": self.m,
            "C": self.C.to_json(),
            "F": self.F.to_json(),
            "f": self.f.to_json(),
            "f_text": str(self.f),
            "eta": self.eta,
            "deg_f": self.deg_f,
            "rank": self.rank,
            "isolated": self.isolated,
        }
        out.update(self.extra)
        return out

    def to_latex(self) -> str:
        return "\n".join([
            f"% graph6: {self.graph6}",
            rf"\mathcal{{C}}_\Gamma(X,Y) &= {self.C.to_latex()} \\",
            rf"\mathsf{{F}}_\Gamma(X,Y) &= {self.F.to_latex()} \\",
            rf"f_\Gamma(X) &= {self.f.to_latex()}",
        ])


def graph_report(g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES, verify: bool = False) -> GraphPolyReport:
    prof = subset_profile(g, max_vertices)
    C = c_from_profile(prof, g.n)
    F = compute_F(g, C=C)
    f = f_from_profile(prof, g.n, g.m)
    e = eta(g, max_vertices, verify=True) if verify else eta_from_profile(prof)
    report = GraphPolyReport(
        graph6=g.to_graph6(), n=g.n, m=g.m, C=C, F=F, f=f, eta=e, deg_f=f.degree(),
        rank=gr.matroid_rank(g), isolated=gr.isolated_count(g))
    if verify:
        problems = report.check()
        if problems:
            raise AssertionError(f"inconsistent report for {report.graph6}: {problems}")
    return report


def family_latex_table(rows: list[tuple[str, GraphPolyReport]]) -> str:
    """A LaTeX tabular with one row per (label, report)."""
    lines = [r"\begin{tabular}{lll}", r"\hline",
             r"graph & $\mathsf{F}_\Gamma(X,Y)$ & $f_\Gamma(X)$ \\", r"\hline"]
    for label, rep in rows:
        lines.append(rf"{label} & ${rep.F.to_latex()}$ & ${rep.f.to_latex()}$ \\")
    lines += [r"\hline", r"\end{tabular}"]
    return "\n".join(lines)
