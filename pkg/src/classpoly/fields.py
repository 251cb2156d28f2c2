"""Small finite fields, dense Gaussian elimination, and adjacency-module ranks.

Elements of GF(q) are the integers 0..q-1.  For q = p^e with e > 1 the
integer's base-p digits are the coefficients of a polynomial in t (least
significant digit = constant term), reduced by a fixed modulus.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Sequence

from .graphs import Graph, closed_neighborhood, component_count_induced

# modulus coefficients, constant term first: t^2+t+1, t^3+t+1, t^2+1
EXTENSION_MODULI = {4: (2, (1, 1, 1)), 8: (2, (1, 1, 0, 1)), 9: (3, (1, 0, 1))}
PRIMES = tuple(p for p in range(2, 64) if all(p % d for d in range(2, int(p ** 0.5) + 1)))
SUPPORTED_ORDERS = tuple(sorted(set(PRIMES) | set(EXTENSION_MODULI)))

DEFAULT_VECTOR_BUDGET = 2_000_000


class FieldError(ValueError):
    pass


class BudgetError(RuntimeError):
    """An enumeration would exceed its configured budget."""

    def __init__(self, what: str, required: int, budget: int):
        super().__init__(f"{what} needs {required} items, budget is {budget}")
        self.required = required
        self.budget = budget


@dataclass(frozen=True, eq=False)
class FiniteField:
    q: int
    p: int
    e: int
    modulus: tuple[int, ...] = ()
    add_table: tuple[tuple[int, ...], ...] = field(default=(), repr=False)
    mul_table: tuple[tuple[int, ...], ...] = field(default=(), repr=False)

    def add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.q
        return self.add_table[a][b]

    def mul(self, a: int, b: int) -> int:
        if self.e == 1:
            return a * b % self.q
        return self.mul_table[a][b]

    def neg(self, a: int) -> int:
        if self.e == 1:
            return -a % self.q
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        if self.e == 1:
            return pow(a, -1, self.q)
        return self._inv[a]

    @cached_property
    def _neg(self) -> tuple[int, ...]:
        return tuple(self.add_table[a].index(0) for a in range(self.q))

    @cached_property
    def _inv(self) -> tuple[int, ...]:
        return (0,) + tuple(self.mul_table[a].index(1) for a in range(1, self.q))

    def elements(self) -> range:
        return range(self.q)

    def descriptor(self) -> dict:
        return {"q": self.q, "p": self.p, "e": self.e, "modulus": list(self.modulus)}


def _poly_digits(a: int, p: int, e: int) -> list[int]:
    return [(a // p ** i) % p for i in range(e)]


def _from_digits(digits: Sequence[int], p: int) -> int:
    return sum(d * p ** i for i, d in enumerate(digits))


def _ext_mul(a: int, b: int, p: int, modulus: Sequence[int]) -> int:
    e = len(modulus) - 1
    da, db = _poly_digits(a, p, e), _poly_digits(b, p, e)
    prod = [0] * (2 * e - 1)
    for i, x in enumerate(da):
        for j, y in enumerate(db):
            prod[i + j] = (prod[i + j] + x * y) % p
    # reduce from the top using the monic modulus
    for deg in range(len(prod) - 1, e - 1, -1):
        c = prod[deg]
        if c:
            for i, mc in enumerate(modulus):
                prod[deg - e + i] = (prod[deg - e + i] - c * mc) % p
    return _from_digits(prod[:e], p)


def check_field_axioms(F: FiniteField) -> None:
    """Exhaustive check of the field axioms on the element table."""
    els = list(F.elements())
    for a in els:
        if F.add(a, 0) != a or F.mul(a, 1) != a:
            raise FieldError(f"GF({F.q}): identity fails at {a}")
        if F.add(a, F.neg(a)) != 0:
            raise FieldError(f"GF({F.q}): additive inverse fails at {a}")
        if a and F.mul(a, F.inv(a)) != 1:
            raise FieldError(f"GF({F.q}): multiplicative inverse fails at {a}")
        for b in els:
            if F.add(a, b) != F.add(b, a) or F.mul(a, b) != F.mul(b, a):
                raise FieldError(f"GF({F.q}): commutativity fails at {(a, b)}")
            for c in els:
                if F.add(F.add(a, b), c) != F.add(a, F.add(b, c)):
                    raise FieldError(f"GF({F.q}): additive associativity fails")
                if F.mul(F.mul(a, b), c) != F.mul(a, F.mul(b, c)):
                    raise FieldError(f"GF({F.q}): multiplicative associativity fails")
                if F.mul(a, F.add(b, c)) != F.add(F.mul(a, b), F.mul(a, c)):
                    raise FieldError(f"GF({F.q}): distributivity fails")


_FIELDS: dict[int, FiniteField] = {}


def field_make(q: int) -> FiniteField:
    """GF(q) for q a prime below 64 or q in {4, 8, 9}."""
    if q in _FIELDS:
        return _FIELDS[q]
    if q in PRIMES:
        F = FiniteField(q, q, 1)
    elif q in EXTENSION_MODULI:
        p, modulus = EXTENSION_MODULI[q]
        e = len(modulus) - 1
        add = tuple(
            tuple(_from_digits([(x + y) % p for x, y in zip(_poly_digits(a, p, e), _poly_digits(b, p, e))], p)
                  for b in range(q))
            for a in range(q))
        mul = tuple(tuple(_ext_mul(a, b, p, modulus) for b in range(q)) for a in range(q))
        F = FiniteField(q, p, e, modulus, add, mul)
    else:
        raise FieldError(f"unsupported field order {q}; supported: primes < 64 and 4, 8, 9")
    if q <= 9:
        check_field_axioms(F)
    _FIELDS[q] = F
    return F


# linear algebra ----------------------------------------------------------


@dataclass(frozen=True)
class FFMatrix:
    field: FiniteField
    rows: tuple[tuple[int, ...], ...]
    ncols: int

    @classmethod
    def make(cls, F: FiniteField, rows: Sequence[Sequence[int]], ncols: int | None = None) -> FFMatrix:
        rows = tuple(tuple(r) for r in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != ncols:
                raise ValueError(f"ragged matrix: row of length {len(r)}, expected {ncols}")
            for x in r:
                if not 0 <= x < F.q:
                    raise ValueError(f"entry {x} outside GF({F.q})")
        return cls(F, rows, ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)


def rank(M: FFMatrix) -> int:
    F = M.field
    work = [list(r) for r in M.rows]
    r = 0
    for col in range(M.ncols):
        pivot = next((i for i in range(r, len(work)) if work[i][col]), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = F.inv(work[r][col])
        work[r] = [F.mul(inv, x) for x in work[r]]
        for i in range(r + 1, len(work)):
            factor = work[i][col]
            if factor:
                work[i] = [F.sub(x, F.mul(factor, y)) for x, y in zip(work[i], work[r])]
        r += 1
        if r == len(work):
            break
    return r


def coker_dim(M: FFMatrix) -> int:
    """Dimension of K^ncols modulo the row space."""
    return M.ncols - rank(M)


# adjacency modules -------------------------------------------------------


def support(x: Sequence[int]) -> int:
    U = 0
    for v, xv in enumerate(x):
        if xv:
            U |= 1 << v
    return U


def adjacency_relation_matrix(g: Graph, F: FiniteField, x: Sequence[int]) -> FFMatrix:
    """m x n matrix, row (j, k) holding x_k in column j and -x_j in column k."""
    if len(x) != g.n:
        raise ValueError(f"vector has length {len(x)}, graph has {g.n} vertices")
    rows = []
    for j, k in g.edges:
        row = [0] * g.n
        row[j] = x[k]
        row[k] = F.neg(x[j])
        rows.append(row)
    return FFMatrix.make(F, rows, g.n)


def adj_dim(g: Graph, F: FiniteField, x: Sequence[int]) -> int:
    return coker_dim(adjacency_relation_matrix(g, F, x))


def adj_dim_formula(g: Graph, U: int) -> int:
    """c(U) + n - |N[U]|."""
    return component_count_induced(g, U) + g.n - closed_neighborhood(g, U).bit_count()


def all_vectors(F: FiniteField, n: int):
    return product(range(F.q), repeat=n)


@dataclass(frozen=True)
class AdjSpecialization:
    graph: Graph
    x: tuple[int, ...]
    matrix: FFMatrix
    dim: int

    @classmethod
    def make(cls, g: Graph, F: FiniteField, x: Sequence[int]) -> AdjSpecialization:
        M = adjacency_relation_matrix(g, F, x)
        return cls(g, tuple(x), M, coker_dim(M))

    @property
    def support(self) -> int:
        return support(self.x)


def _check_budget(q: int, n: int, budget: int) -> None:
    if q ** n > budget:
        raise BudgetError(f"enumerating GF({q})^{n}", q ** n, budget)


def rank_histogram(g: Graph, q: int, budget: int = DEFAULT_VECTOR_BUDGET) -> dict[int, int]:
    """rank i of the relation matrix -> number of x in GF(q)^n with that rank."""
    F = field_make(q)
    _check_budget(q, g.n, budget)
    out: dict[int, int] = {}
    for x in all_vectors(F, g.n):
        i = rank(adjacency_relation_matrix(g, F, x))
        out[i] = out.get(i, 0) + 1
    return out


def rank_class_histogram(g: Graph, q: int, budget: int = DEFAULT_VECTOR_BUDGET) -> dict[int, int]:
    """Class size q^i -> count, where count = #{x : rank = i} * q^(m - i)."""
    hist = {}
    for i, count in rank_histogram(g, q, budget).items():
        hist[q ** i] = count * q ** (g.m - i)
    return dict(sorted(hist.items()))


def histogram_json(hist: dict[int, int]) -> list[dict]:
    return [{"size": e, "count": c} for e, c in sorted(hist.items())]
