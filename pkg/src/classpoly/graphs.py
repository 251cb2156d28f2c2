"""Simple graphs on vertices 0..n-1 stored as neighbour bitsets.

Vertex sets are plain ints used as bitmasks (bit ``v`` set means vertex ``v``
is a member).  Edges are pairs ``(j, k)`` with ``j < k`` kept in
lexicographic order, which fixes the edge coordinates used elsewhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 62
MAX_ENUM_VERTICES = 6

FAMILIES = ("complete", "edgeless", "path", "star", "complete_bipartite", "cycle")


class GraphError(ValueError):
    """Invalid graph data (bad vertex, loop, duplicate edge, bad parameter)."""


class Graph6Error(GraphError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


@dataclass(frozen=True, eq=False)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[int, ...]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> int:
        """The full vertex set as a bitmask."""
        return (1 << self.n) - 1

    @cached_property
    def closed(self) -> tuple[int, ...]:
        return tuple(a | (1 << v) for v, a in enumerate(self.adj))

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, j: int, k: int) -> bool:
        return bool(self.adj[j] >> k & 1)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError(f"not a permutation of 0..{self.n - 1}: {list(perm)}")
        return build(self.n, [tuple(sorted((perm[j], perm[k]))) for j, k in self.edges])

    def induced(self, U: int) -> Graph:
        """Induced subgraph on ``U``, relabelled in increasing vertex order."""
        verts = members(U)
        pos = {v: i for i, v in enumerate(verts)}
        return build(len(verts), [(pos[j], pos[k]) for j, k in self.edges if j in pos and k in pos])

    def to_graph6(self) -> str:
        return encode_graph6(self)


def members(U: int) -> list[int]:
    out = []
    while U:
        low = U & -U
        out.append(low.bit_length() - 1)
        U ^= low
    return out


def vertex_set(vertices: Iterable[int]) -> int:
    U = 0
    for v in vertices:
        U |= 1 << v
    return U


def build(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Validate ``edges`` and return the canonical graph on ``n`` vertices."""
    if not isinstance(n, int) or n < 1:
        raise GraphError(f"vertex count must be >= 1, got {n!r}")
    if n > MAX_VERTICES:
        raise GraphError(f"at most {MAX_VERTICES} vertices supported, got {n}")
    adj = [0] * n
    seen = set()
    for pair in edges:
        j, k = pair
        if j == k:
            raise GraphError(f"loop at vertex {j}: {(j, k)}")
        if not (0 <= j < n and 0 <= k < n):
            raise GraphError(f"vertex out of range 0..{n - 1}: {(j, k)}")
        if j > k:
            raise GraphError(f"edge must be given as (j, k) with j < k: {(j, k)}")
        if (j, k) in seen:
            raise GraphError(f"duplicate edge: {(j, k)}")
        seen.add((j, k))
        adj[j] |= 1 << k
        adj[k] |= 1 << j
    return Graph(n, tuple(sorted(seen)), tuple(adj))


def from_adjacency(adj: Sequence[int]) -> Graph:
    n = len(adj)
    return build(n, [(j, k) for j in range(n) for k in range(j + 1, n) if adj[j] >> k & 1])


# families ---------------------------------------------------------------


def complete(n: int) -> Graph:
    return build(n, combinations(range(n), 2))


def edgeless(n: int) -> Graph:
    return build(n, [])


def path(n: int) -> Graph:
    return build(n, [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> Graph:
    """Centre 0 joined to leaves 1..n (so n + 1 vertices)."""
    if n < 1:
        raise GraphError(f"star needs at least one leaf, got {n}")
    return build(n + 1, [(0, i) for i in range(1, n + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise GraphError(f"complete_bipartite needs a, b >= 1, got {(a, b)}")
    return build(a + b, [(i, j) for i in range(a) for j in range(a, a + b)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return build(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def family(kind: str, *params: int) -> Graph:
    makers = {
        "complete": (complete, 1),
        "edgeless": (edgeless, 1),
        "path": (path, 1),
        "star": (star, 1),
        "complete_bipartite": (complete_bipartite, 2),
        "cycle": (cycle, 1),
    }
    if kind not in makers:
        raise GraphError(f"unknown family {kind!r}; expected one of {', '.join(FAMILIES)}")
    make, arity = makers[kind]
    if len(params) != arity:
        raise GraphError(f"family {kind!r} takes {arity} parameter(s), got {len(params)}")
    if any(not isinstance(p, int) or p < 1 for p in params):
        raise GraphError(f"family parameters must be positive integers, got {params}")
    return make(*params)


# operations --------------------------------------------------------------


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    s = g1.n
    return build(g1.n + g2.n, list(g1.edges) + [(j + s, k + s) for j, k in g2.edges])


def join(g1: Graph, g2: Graph) -> Graph:
    s = g1.n
    cross = [(i, s + j) for i in range(g1.n) for j in range(g2.n)]
    return build(g1.n + g2.n, list(g1.edges) + [(j + s, k + s) for j, k in g2.edges] + cross)


def complement(g: Graph) -> Graph:
    return build(g.n, [e for e in combinations(range(g.n), 2) if not g.has_edge(*e)])


# graph6 ------------------------------------------------------------------


def encode_graph6(g: Graph) -> str:
    n = g.n
    out = [chr(n + 63)]
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    for pos in range(0, len(bits), 6):
        val = 0
        for b in bits[pos:pos + 6]:
            val = val << 1 | b
        out.append(chr(val + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Parse a single-byte-length graph6 string (optionally with the ``>>graph6<<`` header)."""
    s = text.strip()
    start = 0
    if s.startswith(">>graph6<<"):
        start = len(">>graph6<<")
    data = s[start:]
    if not data:
        raise Graph6Error("empty graph6 string", start)
    for i, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ord(ch)} outside 63..126", start + i)
    n = ord(data[0]) - 63
    if n > MAX_VERTICES:
        raise Graph6Error(f"only n <= {MAX_VERTICES} supported, got {n}", start)
    if n == 0:
        raise Graph6Error("graphs must have at least one vertex", start)
    nbits = n * (n - 1) // 2
    nbytes = -(-nbits // 6)
    body = data[1:]
    if len(body) < nbytes:
        raise Graph6Error(f"truncated: need {nbytes} data bytes, got {len(body)}", start + len(data))
    if len(body) > nbytes:
        raise Graph6Error("trailing bytes after graph data", start + 1 + nbytes)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return build(n, sorted(edges))


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"j k"`` (blank lines and ``#`` comments ignored)."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GraphError("empty edge list")
    try:
        n, m = (int(t) for t in lines[0].split())
    except ValueError:
        raise GraphError(f"bad header line {lines[0]!r}; expected 'n m'") from None
    if len(lines) - 1 != m:
        raise GraphError(f"header declares {m} edges but {len(lines) - 1} edge lines follow")
    edges = []
    for ln in lines[1:]:
        try:
            j, k = (int(t) for t in ln.split())
        except ValueError:
            raise GraphError(f"bad edge line {ln!r}") from None
        edges.append((min(j, k), max(j, k)) if j != k else (j, k))
    return build(n, edges)


def encode_edge_list(g: Graph) -> str:
    return "\n".join([f"{g.n} {g.m}"] + [f"{j} {k}" for j, k in g.edges]) + "\n"


# neighbourhoods and components -------------------------------------------


def closed_neighborhood(g: Graph, U: int) -> int:
    out = 0
    closed = g.closed
    while U:
        low = U & -U
        out |= closed[low.bit_length() - 1]
        U ^= low
    return out


def _component_of(adj: Sequence[int], U: int, seed: int) -> int:
    comp = frontier = seed
    while frontier:
        grown = 0
        while frontier:
            low = frontier & -frontier
            grown |= adj[low.bit_length() - 1]
            frontier ^= low
        frontier = grown & U & ~comp
        comp |= frontier
    return comp


def components(g: Graph, U: int | None = None) -> list[int]:
    """Vertex sets of the connected components of the induced subgraph on ``U``."""
    rest = g.vertices if U is None else U
    out = []
    while rest:
        comp = _component_of(g.adj, rest, rest & -rest)
        out.append(comp)
        rest &= ~comp
    return out


def component_count_induced(g: Graph, U: int) -> int:
    return len(components(g, U))


def is_connected(g: Graph) -> bool:
    return component_count_induced(g, g.vertices) == 1


def matroid_rank(g: Graph) -> int:
    return g.n - component_count_induced(g, g.vertices)


def isolated_count(g: Graph) -> int:
    return sum(1 for a in g.adj if a == 0)


# invariants --------------------------------------------------------------


def independence_number(g: Graph) -> int:
    best = 0

    def grow(size: int, candidates: int) -> None:
        nonlocal best
        if size + candidates.bit_count() <= best:
            return
        if not candidates:
            best = size
            return
        low = candidates & -candidates
        v = low.bit_length() - 1
        grow(size + 1, candidates & ~g.closed[v])
        grow(size, candidates ^ low)

    grow(0, g.vertices)
    return best


def hansen_bound(n: int, m: int) -> int:
    """floor(1/2 + sqrt(1/4 + n^2 - n - 2m)), an upper bound for the independence number."""
    from math import isqrt

    return (1 + isqrt(1 + 4 * (n * n - n - 2 * m))) // 2


def is_claw_free(g: Graph) -> bool:
    for c in range(g.n):
        leaves = members(g.adj[c])
        for a, b, d in combinations(leaves, 3):
            if not (g.has_edge(a, b) or g.has_edge(a, d) or g.has_edge(b, d)):
                return False
    return True


def is_cograph(g: Graph) -> bool:
    """Recursive union/join decomposition: every induced piece on >= 2 vertices
    must be disconnected or have a disconnected complement."""
    full = (1 << g.n) - 1
    co_adj = tuple((~a & full) & ~(1 << v) for v, a in enumerate(g.adj))

    def ok(U: int) -> bool:
        if U.bit_count() <= 1:
            return True
        for adj in (g.adj, co_adj):
            first = _component_of(adj, U, U & -U)
            if first != U:
                parts = [first]
                rest = U & ~first
                while rest:
                    comp = _component_of(adj, rest, rest & -rest)
                    parts.append(comp)
                    rest &= ~comp
                return all(ok(p) for p in parts)
        return False

    return ok(full)


def is_tree(g: Graph) -> bool:
    return g.m == g.n - 1 and is_connected(g)


def is_path(g: Graph) -> bool:
    return is_tree(g) and all(g.degree(v) <= 2 for v in range(g.n))


def is_path_forest(g: Graph) -> bool:
    """True iff every connected component is a path (isolated vertices count)."""
    for comp in components(g):
        degrees = [g.adj[v].bit_count() for v in members(comp)]
        if sum(degrees) // 2 != len(degrees) - 1 or max(degrees) > 2:
            return False
    return True


def leaves(g: Graph) -> int:
    return sum(1 for v in range(g.n) if g.degree(v) == 1)


def max_degree(g: Graph) -> int:
    return max(g.degree(v) for v in range(g.n))


@dataclass(frozen=True)
class Invariants:
    alpha: int
    delta_max: int
    is_tree: bool
    is_path: bool
    leaves: int
    is_claw_free: bool
    is_cograph: bool
    isolated_count: int


def graph_invariants(g: Graph) -> Invariants:
    return Invariants(
        alpha=independence_number(g),
        delta_max=max_degree(g),
        is_tree=is_tree(g),
        is_path=is_path(g),
        leaves=leaves(g),
        is_claw_free=is_claw_free(g),
        is_cograph=is_cograph(g),
        isolated_count=isolated_count(g),
    )


def is_dominating(g: Graph, D: int) -> bool:
    return closed_neighborhood(g, D) == g.vertices


def connected_dominating_sets(g: Graph) -> list[int]:
    """All D with N[D] = V and G[D] connected, in increasing bitmask order."""
    full = g.vertices
    return [
        D for D in range(1, full + 1)
        if closed_neighborhood(g, D) == full and component_count_induced(g, D) == 1
    ]


# enumeration -------------------------------------------------------------


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """Every graph on vertices 0..n-1; the i-th graph has edge set given by the bits of i
    over the lexicographically ordered pairs."""
    if not 1 <= n <= MAX_ENUM_VERTICES:
        raise GraphError(f"labelled enumeration supports 1 <= n <= {MAX_ENUM_VERTICES}, got {n}")
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield build(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


def all_trees(n: int) -> Iterator[Graph]:
    """Labelled trees on n vertices (via Pruefer sequences)."""
    from itertools import product

    if n == 1:
        yield edgeless(1)
        return
    if n == 2:
        yield complete(2)
        return
    for seq in product(range(n), repeat=n - 2):
        degree = [1] * n
        for v in seq:
            degree[v] += 1
        edges = []
        for v in seq:
            leaf = min(u for u in range(n) if degree[u] == 1)
            edges.append((min(leaf, v), max(leaf, v)))
            degree[leaf] -= 1
            degree[v] -= 1
        u, w = [x for x in range(n) if degree[x] == 1]
        edges.append((u, w))
        yield build(n, edges)
