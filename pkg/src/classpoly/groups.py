"""Graphical groups over small finite rings, built explicitly.

An element is a pair (x, z): x has one coordinate per vertex, z one per edge
(edges in lexicographic order).  The product is

    (x, z) * (x', z') = (x + x', z + z' + gamma(x, x')),
    gamma(x, x')_(j,k) = -x_k * x'_j        for each edge (j, k), j < k,

which makes the edge coordinates central and gives
``s e_j * r e_i = r e_i + s e_j - rs e_ij`` for adjacent i < j.

Everything that touches many elements works on numpy arrays of ring digits,
with the ring operations applied through lookup tables.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Iterable, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from . import fields
from .engine import compute_C, compute_F
from .fields import BudgetError, FiniteField
from .graphs import Graph

DEFAULT_ELEMENT_BUDGET = 200_000
FULL_CONJUGATION_LIMIT = 4096
MAX_ZMOD = 9


# rings -------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class GroupRing:
    kind: str  # "field" or "zmod"
    order: int
    add_table: np.ndarray
    mul_table: np.ndarray
    name: str

    @cached_property
    def neg_table(self) -> np.ndarray:
        return np.argmax(self.add_table == 0, axis=1)

    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def neg(self, a: int) -> int:
        return int(self.neg_table[a])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def __repr__(self) -> str:
        return f"GroupRing({self.name})"


def check_ring_axioms(R: GroupRing) -> None:
    """Commutative unital ring axioms on the full tables."""
    A, M = R.add_table, R.mul_table
    els = np.arange(R.order)
    a, b, c = np.meshgrid(els, els, els, indexing="ij")
    ok = (
        np.array_equal(A, A.T) and np.array_equal(M, M.T)
        and np.array_equal(A[0], els) and np.array_equal(M[1], els)
        and np.array_equal(A[A[a, b], c], A[a, A[b, c]])
        and np.array_equal(M[M[a, b], c], M[a, M[b, c]])
        and np.array_equal(M[a, A[b, c]], A[M[a, b], M[a, c]])
        and np.all((A == 0).sum(axis=1) == 1)
    )
    if not ok:
        raise ValueError(f"ring axioms fail for {R.name}")


def field_ring(q: int) -> GroupRing:
    F = fields.field_make(q)
    els = range(q)
    add = np.array([[F.add(a, b) for b in els] for a in els], dtype=np.int64)
    mul = np.array([[F.mul(a, b) for b in els] for a in els], dtype=np.int64)
    R = GroupRing("field", q, add, mul, f"F{q}")
    if q <= 9:
        check_ring_axioms(R)
    return R


def zmod_ring(N: int) -> GroupRing:
    if not 2 <= N <= MAX_ZMOD:
        raise ValueError(f"Z/N supported for 2 <= N <= {MAX_ZMOD}, got {N}")
    els = np.arange(N)
    add = (els[:, None] + els[None, :]) % N
    mul = (els[:, None] * els[None, :]) % N
    R = GroupRing("zmod", N, add, mul, f"Z{N}")
    check_ring_axioms(R)
    return R


def parse_ring(text: str) -> GroupRing:
    """``"F4"``/``"GF4"``/``"4"`` for fields, ``"Z6"``/``"Z/6"`` for integers mod N."""
    t = text.strip().upper().replace("/", "")
    if t.startswith("GF"):
        return field_ring(int(t[2:]))
    if t.startswith("F"):
        return field_ring(int(t[1:]))
    if t.startswith("Z"):
        return zmod_ring(int(t[1:]))
    return field_ring(int(t))


# elements ----------------------------------------------------------------


@dataclass(frozen=True)
class GroupElement:
    x: tuple[int, ...]
    z: tuple[int, ...]


class GraphicalGroup:
    """The graphical group of ``graph`` over ``ring``."""

    def __init__(self, graph: Graph, ring: GroupRing):
        self.graph = graph
        self.ring = ring
        self.n = graph.n
        self.m = graph.m
        self.js = np.array([j for j, _ in graph.edges], dtype=np.int64)
        self.ks = np.array([k for _, k in graph.edges], dtype=np.int64)
        r = ring.order
        self.radix = np.array([r ** i for i in range(self.n + self.m)], dtype=np.int64)

    @property
    def order(self) -> int:
        return self.ring.order ** (self.n + self.m)

    def identity(self) -> GroupElement:
        return GroupElement((0,) * self.n, (0,) * self.m)

    def element(self, x: Sequence[int], z: Sequence[int] | None = None) -> GroupElement:
        z = (0,) * self.m if z is None else z
        if len(x) != self.n or len(z) != self.m:
            raise ValueError(f"element dimensions ({len(x)}, {len(z)}) do not match ({self.n}, {self.m})")
        r = self.ring.order
        if any(not 0 <= v < r for v in (*x, *z)):
            raise ValueError(f"coordinates must lie in 0..{r - 1}")
        return GroupElement(tuple(x), tuple(z))

    def basis(self, i: int, r: int = 1) -> GroupElement:
        """``r * e_i``."""
        x = [0] * self.n
        x[i] = r
        return GroupElement(tuple(x), (0,) * self.m)

    def edge_basis(self, j: int, k: int, r: int = 1) -> GroupElement:
        """``r * e_jk``."""
        z = [0] * self.m
        z[self.graph.edge_index[(j, k)]] = r
        return GroupElement((0,) * self.n, tuple(z))

    def _check(self, a: GroupElement) -> None:
        if len(a.x) != self.n or len(a.z) != self.m:
            raise ValueError(f"element dimensions ({len(a.x)}, {len(a.z)}) do not match ({self.n}, {self.m})")

    def cocycle(self, x: Sequence[int], y: Sequence[int]) -> tuple[int, ...]:
        R = self.ring
        return tuple(R.neg(R.mul(x[k], y[j])) for j, k in self.graph.edges)

    def mul(self, a: GroupElement, b: GroupElement) -> GroupElement:
        self._check(a)
        self._check(b)
        R = self.ring
        gam = self.cocycle(a.x, b.x)
        x = tuple(R.add(u, v) for u, v in zip(a.x, b.x))
        z = tuple(R.add(R.add(u, v), w) for u, v, w in zip(a.z, b.z, gam))
        return GroupElement(x, z)

    def inv(self, a: GroupElement) -> GroupElement:
        self._check(a)
        R = self.ring
        gam = self.cocycle(a.x, a.x)
        return GroupElement(tuple(R.neg(u) for u in a.x),
                            tuple(R.add(R.neg(u), w) for u, w in zip(a.z, gam)))

    def add(self, a: GroupElement, b: GroupElement) -> GroupElement:
        """Coordinatewise sum in the underlying module (not the group product)."""
        R = self.ring
        return GroupElement(tuple(R.add(u, v) for u, v in zip(a.x, b.x)),
                            tuple(R.add(u, v) for u, v in zip(a.z, b.z)))

    def commutator(self, a: GroupElement, b: GroupElement) -> GroupElement:
        """``a^-1 b^-1 a b``."""
        return self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))

    def conjugate(self, h: GroupElement, g: GroupElement) -> GroupElement:
        """``h g h^-1``."""
        return self.mul(self.mul(h, g), self.inv(h))

    def lie_bracket(self, a: GroupElement, b: GroupElement) -> GroupElement:
        """Bracket of the graphical Lie algebra; (e_j, e_k) = e_jk for edges j < k."""
        R = self.ring
        z = tuple(R.sub(R.mul(a.x[j], b.x[k]), R.mul(a.x[k], b.x[j])) for j, k in self.graph.edges)
        return GroupElement((0,) * self.n, z)

    # batch operations on digit arrays ------------------------------------

    def mul_batch(self, X1, Z1, X2, Z2):
        A, M, Ng = self.ring.add_table, self.ring.mul_table, self.ring.neg_table
        X = A[X1, X2]
        gam = Ng[M[X1[..., self.ks], X2[..., self.js]]]
        Z = A[A[Z1, Z2], gam]
        return X, Z

    def inv_batch(self, X, Z):
        A, M, Ng = self.ring.add_table, self.ring.mul_table, self.ring.neg_table
        gam = Ng[M[X[..., self.ks], X[..., self.js]]]
        return Ng[X], A[Ng[Z], gam]

    def encode(self, X, Z) -> np.ndarray:
        digits = np.concatenate([X, Z], axis=-1)
        return digits @ self.radix

    def decode(self, idx):
        idx = np.asarray(idx, dtype=np.int64)
        digits = (idx[..., None] // self.radix) % self.ring.order
        return digits[..., :self.n], digits[..., self.n:]

    def encode_element(self, a: GroupElement) -> int:
        return int(self.encode(np.array(a.x, dtype=np.int64), np.array(a.z, dtype=np.int64)))

    def decode_element(self, idx: int) -> GroupElement:
        X, Z = self.decode(idx)
        return GroupElement(tuple(int(v) for v in X), tuple(int(v) for v in Z))

    def all_elements(self):
        return self.decode(np.arange(self.order, dtype=np.int64))

    def generators(self) -> list[GroupElement]:
        """``r e_i`` for every vertex i and non-zero r; together with the central
        edge coordinates these generate the group."""
        return [self.basis(i, r) for i in range(self.n) for r in range(1, self.ring.order)]

    def random_elements(self, count: int, rng: np.random.Generator):
        r = self.ring.order
        return (rng.integers(0, r, size=(count, self.n)), rng.integers(0, r, size=(count, self.m)))


def gg_mul(g: Graph, R: GroupRing, a: GroupElement, b: GroupElement) -> GroupElement:
    return GraphicalGroup(g, R).mul(a, b)


def gg_inv(g: Graph, R: GroupRing, a: GroupElement) -> GroupElement:
    return GraphicalGroup(g, R).inv(a)


# conjugacy classes --------------------------------------------------------


def _check_element_budget(G: GraphicalGroup, budget: int) -> None:
    if G.order > budget:
        raise BudgetError(f"graphical group of {G.graph.to_graph6()} over {G.ring.name}", G.order, budget)


def _orbits_all(G: GraphicalGroup) -> list[int]:
    """Class sizes, conjugating one representative at a time by every element."""
    HX, HZ = G.all_elements()
    HiX, HiZ = G.inv_batch(HX, HZ)
    seen = np.zeros(G.order, dtype=bool)
    sizes = []
    for rep in range(G.order):
        if seen[rep]:
            continue
        gx, gz = G.decode(rep)
        gx = np.broadcast_to(gx, HX.shape)
        gz = np.broadcast_to(gz, HZ.shape)
        X, Z = G.mul_batch(*G.mul_batch(HX, HZ, gx, gz), HiX, HiZ)
        orbit = np.unique(G.encode(X, Z))
        seen[orbit] = True
        sizes.append(len(orbit))
    return sizes


def _orbits_generators(G: GraphicalGroup) -> list[int]:
    """Class sizes as connected components of the conjugation-by-generators graph."""
    X, Z = G.all_elements()
    src = np.arange(G.order, dtype=np.int64)
    rows, cols = [], []
    for h in G.generators():
        hx = np.broadcast_to(np.array(h.x, dtype=np.int64), X.shape)
        hz = np.broadcast_to(np.array(h.z, dtype=np.int64), Z.shape)
        hix, hiz = G.inv_batch(hx, hz)
        CX, CZ = G.mul_batch(*G.mul_batch(hx, hz, X, Z), hix, hiz)
        rows.append(src)
        cols.append(G.encode(CX, CZ))
    r = np.concatenate(rows)
    c = np.concatenate(cols)
    graph = coo_matrix((np.ones(len(r), dtype=np.int8), (r, c)), shape=(G.order, G.order))
    _, labels = connected_components(graph, directed=True, connection="weak")
    return list(np.bincount(labels))


def brute_force_class_histogram(g: Graph, R: GroupRing, budget: int = DEFAULT_ELEMENT_BUDGET,
                                mode: str = "auto") -> dict[int, int]:
    """Class size -> number of classes, by exhaustive conjugation.

    ``mode="all"`` conjugates by every element, ``mode="generators"`` by the
    vertex generators only; ``"auto"`` uses the former up to
    ``FULL_CONJUGATION_LIMIT`` elements.
    """
    G = GraphicalGroup(g, R)
    _check_element_budget(G, budget)
    if mode == "auto":
        mode = "all" if G.order <= FULL_CONJUGATION_LIMIT else "generators"
    if mode == "all":
        sizes = _orbits_all(G)
    elif mode == "generators":
        sizes = _orbits_generators(G)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return dict(sorted(Counter(int(s) for s in sizes).items()))


def ad_matrix(G: GraphicalGroup, F: FiniteField, x: Sequence[int]) -> fields.FFMatrix:
    """Rows are the brackets (x, e_i) for i = 0..n-1, written in edge coordinates."""
    rows = []
    for i in range(G.n):
        rows.append(G.lie_bracket(GroupElement(tuple(x), (0,) * G.m), G.basis(i)).z)
    return fields.FFMatrix.make(F, rows, G.m)


def lie_class_histogram(g: Graph, q: int, budget: int = fields.DEFAULT_VECTOR_BUDGET) -> dict[int, int]:
    """Class sizes from Lie centralisers: (x, z) has class size q^rank(ad x)."""
    F = fields.field_make(q)
    if q ** g.n > budget:
        raise BudgetError(f"enumerating GF({q})^{g.n}", q ** g.n, budget)
    G = GraphicalGroup(g, field_ring(q))
    hist: dict[int, int] = {}
    for x in fields.all_vectors(F, g.n):
        r = fields.rank(ad_matrix(G, F, x))
        hist[q ** r] = hist.get(q ** r, 0) + q ** (g.m - r)
    return dict(sorted(hist.items()))


def class_number(hist: dict[int, int]) -> int:
    return sum(hist.values())


def histogram_mass(hist: dict[int, int]) -> int:
    return sum(e * c for e, c in hist.items())


def histogram_from_poly(g: Graph, q: int) -> dict[int, int]:
    """Coefficients of the class-size polynomial at X = q, keyed by class size q^i."""
    values = compute_F(g).eval_x(q)
    return {q ** i: c for i, c in sorted(values.terms.items())}


# zeta functions ------------------------------------------------------------


@dataclass(frozen=True)
class DirichletPoly:
    """``sum_e count_e * e^-s`` as a sorted tuple of (e, count_e)."""

    terms: tuple[tuple[int, int], ...]

    def __post_init__(self):
        es = [e for e, _ in self.terms]
        if es != sorted(set(es)):
            raise ValueError("Dirichlet polynomial sizes must be strictly increasing")

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(str(c) if e == 1 else f"{c}*{e}^-s" for e, c in self.terms)

    def to_json(self) -> list[dict]:
        return [{"size": e, "count": c} for e, c in self.terms]


def class_zeta(hist: dict[int, int]) -> DirichletPoly:
    return DirichletPoly(tuple(sorted((e, c) for e, c in hist.items() if c)))


def zeta_from_C(g: Graph, q: int) -> DirichletPoly:
    """q^m * C(q, q^(-1-s)) collected by powers of q^-s."""
    acc: dict[int, Fraction] = {}
    for (a, b), c in compute_C(g).terms.items():
        # c * q^m * q^a * q^-b * (q^-s)^b
        acc[b] = acc.get(b, Fraction(0)) + c * Fraction(q) ** (g.m + a - b)
    terms = []
    for b, val in sorted(acc.items()):
        if val.denominator != 1:
            raise ArithmeticError(f"non-integral zeta coefficient {val} at size q^{b}")
        if val:
            terms.append((q ** b, int(val)))
    return DirichletPoly(tuple(terms))


def zeta_identity_check(g: Graph, q: int) -> bool:
    lhs = class_zeta(lie_class_histogram(g, q))
    return lhs == zeta_from_C(g, q) and lhs == class_zeta(histogram_from_poly(g, q))


def dirichlet_convolution(h1: dict[int, int], h2: dict[int, int]) -> dict[int, int]:
    """Class histogram of a direct product from the histograms of its factors."""
    out: dict[int, int] = {}
    for d, c1 in h1.items():
        for e, c2 in h2.items():
            out[d * e] = out.get(d * e, 0) + c1 * c2
    return dict(sorted(out.items()))


def crt_multiplicativity_check(g: Graph, N1: int, N2: int, budget: int = DEFAULT_ELEMENT_BUDGET) -> bool:
    if N1 < 2 or N2 < 2:
        raise ValueError(f"moduli must be >= 2, got {(N1, N2)}")
    if gcd(N1, N2) != 1:
        raise ValueError(f"moduli must be coprime, got {(N1, N2)}")
    h = brute_force_class_histogram(g, zmod_ring(N1 * N2), budget)
    h1 = brute_force_class_histogram(g, zmod_ring(N1), budget)
    h2 = brute_force_class_histogram(g, zmod_ring(N2), budget)
    return h == dirichlet_convolution(h1, h2)


# structure checks at small orders -----------------------------------------


def center_indices(G: GraphicalGroup) -> set[int]:
    """Encoded elements commuting with every generator (hence with everything)."""
    X, Z = G.all_elements()
    central = np.ones(G.order, dtype=bool)
    for h in G.generators():
        hx = np.broadcast_to(np.array(h.x, dtype=np.int64), X.shape)
        hz = np.broadcast_to(np.array(h.z, dtype=np.int64), Z.shape)
        left = G.encode(*G.mul_batch(hx, hz, X, Z))
        right = G.encode(*G.mul_batch(X, Z, hx, hz))
        central &= left == right
    return set(np.flatnonzero(central).tolist())


def expected_center_indices(G: GraphicalGroup) -> set[int]:
    """Edge coordinates plus isolated-vertex coordinates, anything else zero."""
    X, Z = G.all_elements()
    other = [v for v in range(G.n) if G.graph.adj[v] != 0]
    mask = np.all(X[:, other] == 0, axis=1) if other else np.ones(G.order, dtype=bool)
    return set(np.flatnonzero(mask).tolist())


def derived_subgroup_indices(G: GraphicalGroup) -> set[int]:
    """Subgroup generated by all commutators (exhaustive; small orders only)."""
    X, Z = G.all_elements()
    iX, iZ = G.inv_batch(X, Z)
    comms: set[int] = set()
    for a in range(G.order):
        ax = np.broadcast_to(X[a], X.shape)
        az = np.broadcast_to(Z[a], Z.shape)
        aix = np.broadcast_to(iX[a], X.shape)
        aiz = np.broadcast_to(iZ[a], Z.shape)
        left = G.mul_batch(aix, aiz, iX, iZ)
        right = G.mul_batch(ax, az, X, Z)
        comms.update(G.encode(*G.mul_batch(*left, *right)).tolist())
    # close under products
    group = set(comms) | {0}
    frontier = set(group)
    while frontier:
        new = set()
        for a in frontier:
            ax, az = G.decode(a)
            for b in comms:
                bx, bz = G.decode(b)
                c = int(G.encode(*G.mul_batch(ax, az, bx, bz)))
                if c not in group:
                    new.add(c)
        group |= new
        frontier = new
    return group


def edge_subgroup_indices(G: GraphicalGroup) -> set[int]:
    X, Z = G.all_elements()
    return set(np.flatnonzero(np.all(X == 0, axis=1)).tolist())


# axiom checks ----------------------------------------------------------------


def check_group_axioms(g: Graph, R: GroupRing, samples: int = 10_000,
                       rng: np.random.Generator | None = None) -> dict[str, int]:
    """Failure counts for identity, the defining rules of the product, centrality
    of edge coordinates, associativity and inverses on random samples."""
    rng = np.random.default_rng(0) if rng is None else rng
    G = GraphicalGroup(g, R)
    A, M, Ng = R.add_table, R.mul_table, R.neg_table
    n, m, r = G.n, G.m, R.order
    fails: dict[str, int] = {}

    aX, aZ = G.random_elements(samples, rng)
    bX, bZ = G.random_elements(samples, rng)
    cX, cZ = G.random_elements(samples, rng)
    zeroX, zeroZ = np.zeros_like(aX), np.zeros_like(aZ)

    def differ(P, Q) -> int:
        return int(np.count_nonzero(np.any(np.concatenate([P[0] != Q[0], P[1] != Q[1]], axis=1), axis=1)))

    # identity
    fails["identity"] = differ(G.mul_batch(aX, aZ, zeroX, zeroZ), (aX, aZ)) + \
        differ(G.mul_batch(zeroX, zeroZ, aX, aZ), (aX, aZ))

    # r_1 e_1 * ... * r_n e_n = r_1 e_1 + ... + r_n e_n
    scal = rng.integers(0, r, size=(samples, n))
    accX, accZ = zeroX.copy(), zeroZ.copy()
    for i in range(n):
        eX = zeroX.copy()
        eX[:, i] = scal[:, i]
        accX, accZ = G.mul_batch(accX, accZ, eX, zeroZ)
    fails["ordered_product"] = differ((accX, accZ), (scal, zeroZ))

    # s e_j * r e_i for i <= j
    bad = 0
    if n:
        i_idx = rng.integers(0, n, size=samples)
        j_idx = rng.integers(0, n, size=samples)
        i_idx, j_idx = np.minimum(i_idx, j_idx), np.maximum(i_idx, j_idx)
        rs = rng.integers(0, r, size=samples)
        ss = rng.integers(0, r, size=samples)
        rows = np.arange(samples)
        sX = zeroX.copy()
        sX[rows, j_idx] = ss
        rX = zeroX.copy()
        rX[rows, i_idx] = rs
        lhs = G.mul_batch(sX, zeroZ, rX, zeroZ)
        expX = A[sX, rX]
        edge_of = np.full((n, n), -1, dtype=np.int64)
        for (j, k), idx in g.edge_index.items():
            edge_of[j, k] = idx
        hit = edge_of[i_idx, j_idx]
        adjacent = hit >= 0
        expZ = zeroZ.copy()
        expZ[rows[adjacent], hit[adjacent]] = Ng[M[rs, ss]][adjacent]
        bad = differ(lhs, (expX, expZ))
    fails["adjacent_rule"] = bad

    # edge coordinates are central: x * z = z * x = x + z
    left = G.mul_batch(aX, aZ, zeroX, bZ)
    right = G.mul_batch(zeroX, bZ, aX, aZ)
    plain = (aX, A[aZ, bZ])
    fails["central_edges"] = differ(left, plain) + differ(right, plain)

    # associativity
    ab_c = G.mul_batch(*G.mul_batch(aX, aZ, bX, bZ), cX, cZ)
    a_bc = G.mul_batch(aX, aZ, *G.mul_batch(bX, bZ, cX, cZ))
    fails["associativity"] = differ(ab_c, a_bc)

    # inverses
    iX, iZ = G.inv_batch(aX, aZ)
    fails["inverse"] = differ(G.mul_batch(aX, aZ, iX, iZ), (zeroX, zeroZ)) + \
        differ(G.mul_batch(iX, iZ, aX, aZ), (zeroX, zeroZ))
    fails["double_inverse"] = differ(G.inv_batch(iX, iZ), (aX, aZ))

    # commuting in the group iff the Lie bracket vanishes
    ab = G.encode(*G.mul_batch(aX, aZ, bX, bZ))
    ba = G.encode(*G.mul_batch(bX, bZ, aX, aZ))
    bracket = A[M[aX[:, G.js], bX[:, G.ks]], Ng[M[aX[:, G.ks], bX[:, G.js]]]] if m else np.zeros((samples, 0), int)
    lie_zero = np.all(bracket == 0, axis=1)
    fails["commute_iff_bracket"] = int(np.count_nonzero((ab == ba) != lie_zero))
    return fails


def element_list(G: GraphicalGroup, idx: Iterable[int]) -> list[GroupElement]:
    return [G.decode_element(i) for i in idx]
