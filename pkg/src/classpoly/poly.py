"""Sparse exact-integer polynomials in X and Y.

X exponents may be negative (Laurent in X); Y exponents are always >= 0.
Coefficients are Python ints, so there is no overflow to guard against.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Mapping, Union


class _MinusInfinity:
    """Degree of the zero polynomial.  Compares below every int; refuses arithmetic."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "-inf"

    def __eq__(self, other) -> bool:
        return other is self

    def __hash__(self) -> int:
        return hash("-inf-degree")

    def __lt__(self, other) -> bool:
        return other is not self

    def __le__(self, other) -> bool:
        return True

    def __gt__(self, other) -> bool:
        return False

    def __ge__(self, other) -> bool:
        return other is self

    def _no_arith(self, *_):
        raise TypeError("degree of the zero polynomial is -inf; no arithmetic on it")

    __add__ = __radd__ = __sub__ = __rsub__ = __mul__ = __rmul__ = __neg__ = _no_arith
    __int__ = __index__ = _no_arith


MINUS_INFINITY = _MinusInfinity()


def _clean(terms: Mapping) -> dict:
    return {k: c for k, c in terms.items() if c}


class XPoly:
    """Univariate Laurent polynomial ``sum c_a * var^a`` with integer coefficients."""

    __slots__ = ("terms", "var")

    def __init__(self, terms: Mapping[int, int] | None = None, var: str = "X"):
        self.terms = _clean(terms or {})
        self.var = var

    @classmethod
    def const(cls, c: int, var: str = "X") -> XPoly:
        return cls({0: c}, var)

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1, var: str = "X") -> XPoly:
        return cls({exp: coeff}, var)

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], var: str = "X") -> XPoly:
        """Dense constructor: ``coeffs[i]`` multiplies ``var**i``."""
        return cls(dict(enumerate(coeffs)), var)

    def _wrap(self, other) -> XPoly:
        if isinstance(other, XPoly):
            return other
        if isinstance(other, int):
            return XPoly.const(other, self.var)
        return NotImplemented

    def __add__(self, other) -> XPoly:
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for a, c in other.terms.items():
            out[a] = out.get(a, 0) + c
        return XPoly(out, self.var)

    __radd__ = __add__

    def __neg__(self) -> XPoly:
        return XPoly({a: -c for a, c in self.terms.items()}, self.var)

    def __sub__(self, other) -> XPoly:
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> XPoly:
        return (-self) + other

    def __mul__(self, other) -> XPoly:
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for a, c in self.terms.items():
            for b, d in other.terms.items():
                out[a + b] = out.get(a + b, 0) + c * d
        return XPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> XPoly:
        if e < 0:
            raise ValueError("negative powers are not supported")
        result = XPoly.const(1, self.var)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = XPoly.const(other)
        if not isinstance(other, XPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"XPoly({self})"

    def __str__(self) -> str:
        return _render([((a, 0), c) for a, c in sorted(self.terms.items(), reverse=True)], self.var, "Y")

    def coeff(self, a: int) -> int:
        return self.terms.get(a, 0)

    def is_polynomial(self) -> bool:
        return all(a >= 0 for a in self.terms)

    def degree(self):
        return max(self.terms) if self.terms else MINUS_INFINITY

    def low_degree(self):
        return min(self.terms) if self.terms else MINUS_INFINITY

    def shift_exponent(self, k: int) -> XPoly:
        """Multiply by ``var**k``."""
        return XPoly({a + k: c for a, c in self.terms.items()}, self.var)

    def shift(self, c: int) -> XPoly:
        """Substitute ``var -> var + c``."""
        if not self.is_polynomial():
            raise ValueError("cannot shift a Laurent polynomial with negative exponents")
        out: dict[int, int] = {}
        for a, coeff in self.terms.items():
            for i in range(a + 1):
                out[i] = out.get(i, 0) + coeff * comb(a, i) * c ** (a - i)
        return XPoly(out, self.var)

    def eval(self, x0: int) -> int:
        total = Fraction(0)
        for a, c in self.terms.items():
            total += c * Fraction(x0) ** a
        if total.denominator != 1:
            raise ValueError(f"{self} does not evaluate to an integer at {x0}")
        return int(total)

    def to_json(self) -> list:
        return [[a, 0, str(c)] for a, c in sorted(self.terms.items(), reverse=True)]

    @classmethod
    def from_json(cls, data: list, var: str = "X") -> XPoly:
        out: dict[int, int] = {}
        for a, b, c in data:
            if b != 0:
                raise ValueError(f"univariate polynomial has a Y exponent: {[a, b, c]}")
            out[int(a)] = out.get(int(a), 0) + int(c)
        return cls(out, var)

    def to_latex(self) -> str:
        return _latex([((a, 0), c) for a, c in sorted(self.terms.items(), reverse=True)], self.var, "Y")


Term = tuple[int, int]


class XYPoly:
    """Bivariate polynomial ``sum c_{a,b} X^a Y^b`` (a may be negative, b >= 0)."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Term, int] | None = None):
        terms = _clean(terms or {})
        for (_, b) in terms:
            if b < 0:
                raise ValueError("Y exponents must be non-negative")
        self.terms = terms

    @classmethod
    def const(cls, c: int) -> XYPoly:
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, a: int, b: int, coeff: int = 1) -> XYPoly:
        return cls({(a, b): coeff})

    @classmethod
    def from_x(cls, p: XPoly, b: int = 0) -> XYPoly:
        """``p(X) * Y**b``."""
        return cls({(a, b): c for a, c in p.terms.items()})

    @classmethod
    def from_y_coeffs(cls, coeffs: Mapping[int, XPoly]) -> XYPoly:
        """Assemble ``sum_b coeffs[b](X) * Y**b``."""
        out = {}
        for b, p in coeffs.items():
            for a, c in p.terms.items():
                out[(a, b)] = c
        return cls(out)

    def _wrap(self, other):
        if isinstance(other, XYPoly):
            return other
        if isinstance(other, int):
            return XYPoly.const(other)
        if isinstance(other, XPoly):
            return XYPoly.from_x(other)
        return NotImplemented

    def __add__(self, other) -> XYPoly:
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return XYPoly(out)

    __radd__ = __add__

    def __neg__(self) -> XYPoly:
        return XYPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other) -> XYPoly:
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> XYPoly:
        return (-self) + other

    def __mul__(self, other) -> XYPoly:
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        out: dict[Term, int] = {}
        for (a, b), c in self.terms.items():
            for (a2, b2), d in other.terms.items():
                k = (a + a2, b + b2)
                out[k] = out.get(k, 0) + c * d
        return XYPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> XYPoly:
        if e < 0:
            raise ValueError("negative powers are not supported")
        result = XYPoly.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, XPoly)):
            other = self._wrap(other)
        if not isinstance(other, XYPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"XYPoly({self})"

    def _ordered(self) -> list:
        # descending Y, then descending X
        return sorted(self.terms.items(), key=lambda kv: (-kv[0][1], -kv[0][0]))

    def __str__(self) -> str:
        return _render(self._ordered(), "X", "Y")

    def to_latex(self) -> str:
        return _latex(self._ordered(), "X", "Y")

    def to_json(self) -> list:
        return [[a, b, str(c)] for (a, b), c in self._ordered()]

    @classmethod
    def from_json(cls, data: list) -> XYPoly:
        out: dict[Term, int] = {}
        for a, b, c in data:
            k = (int(a), int(b))
            out[k] = out.get(k, 0) + int(c)
        return cls(out)

    # structure -------------------------------------------------------

    def is_polynomial(self) -> bool:
        return all(a >= 0 for a, _ in self.terms)

    def deg_x(self):
        return max(a for a, _ in self.terms) if self.terms else MINUS_INFINITY

    def deg_y(self):
        return max(b for _, b in self.terms) if self.terms else MINUS_INFINITY

    def coeff_y(self, j: int) -> XPoly:
        return XPoly({a: c for (a, b), c in self.terms.items() if b == j})

    def y_coeffs(self) -> dict[int, XPoly]:
        out: dict[int, dict[int, int]] = {}
        for (a, b), c in self.terms.items():
            out.setdefault(b, {})[a] = c
        return {b: XPoly(t) for b, t in sorted(out.items())}

    def coeff_x(self, i: int) -> XPoly:
        """Coefficient of ``X**i`` as a polynomial in Y."""
        return XPoly({b: c for (a, b), c in self.terms.items() if a == i}, var="Y")

    # substitutions ---------------------------------------------------

    def substitute_y_scaled(self, k: int) -> XYPoly:
        """``Y -> X**k * Y``: each ``X^a Y^b`` becomes ``X^(a + k*b) Y^b``."""
        return XYPoly({(a + k * b, b): c for (a, b), c in self.terms.items()})

    def mul_monomial(self, dx: int, dy: int = 0, coeff: int = 1) -> XYPoly:
        return XYPoly({(a + dx, b + dy): c * coeff for (a, b), c in self.terms.items()})

    def shift_x(self, c: int) -> XYPoly:
        """``X -> X + c`` (binomial re-expansion)."""
        return XYPoly.from_y_coeffs({b: p.shift(c) for b, p in self.y_coeffs().items()})

    def eval_x(self, x0: int) -> XPoly:
        """Set ``X = x0``; the result is a polynomial in Y."""
        return XPoly({b: p.eval(x0) for b, p in self.y_coeffs().items()}, var="Y")

    def eval_y(self, y0: int) -> XPoly:
        """Set ``Y = y0``; the result is a polynomial in X."""
        out: dict[int, int] = {}
        for (a, b), c in self.terms.items():
            out[a] = out.get(a, 0) + c * y0 ** b
        return XPoly(out)


Poly = Union[XPoly, XYPoly]


def shift_x(P: Poly, c: int) -> Poly:
    return P.shift(c) if isinstance(P, XPoly) else P.shift_x(c)


def expand_in_x_minus_1(P: Poly) -> dict:
    """Coefficients of ``P`` in the basis ``(X-1)^a`` (times ``Y^b`` for bivariate input).

    Keys are ``a`` for univariate input and ``(a, b)`` for bivariate input.
    """
    if not P.is_polynomial():
        raise ValueError("expansion in X-1 needs non-negative X exponents")
    shifted = shift_x(P, 1)
    return dict(sorted(shifted.terms.items()))


def from_x_minus_1_basis(table: Mapping, bivariate: bool) -> Poly:
    if bivariate:
        return XYPoly(dict(table)).shift_x(-1)
    return XPoly(dict(table)).shift(-1)


class YSeries2:
    """Truncated series ``c0 + c1*Y  (mod Y^2)`` with Laurent coefficients in X."""

    __slots__ = ("c0", "c1")

    def __init__(self, c0: XPoly | int, c1: XPoly | int = 0):
        self.c0 = c0 if isinstance(c0, XPoly) else XPoly.const(c0)
        self.c1 = c1 if isinstance(c1, XPoly) else XPoly.const(c1)

    @classmethod
    def linear(cls, coeff_exp: int, sign: int = 1) -> YSeries2:
        """``1 + sign * X^coeff_exp * Y``."""
        return cls(1, XPoly.monomial(coeff_exp, sign))

    def _wrap(self, other):
        if isinstance(other, YSeries2):
            return other
        if isinstance(other, (int, XPoly)):
            return YSeries2(other)
        return NotImplemented

    def __add__(self, other) -> YSeries2:
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        return YSeries2(self.c0 + other.c0, self.c1 + other.c1)

    __radd__ = __add__

    def __neg__(self) -> YSeries2:
        return YSeries2(-self.c0, -self.c1)

    def __sub__(self, other) -> YSeries2:
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> YSeries2:
        return (-self) + other

    def __mul__(self, other) -> YSeries2:
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        return YSeries2(self.c0 * other.c0, self.c0 * other.c1 + self.c1 * other.c0)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        return self.c0 == other.c0 and self.c1 == other.c1

    def __hash__(self) -> int:
        return hash((self.c0, self.c1))

    def __repr__(self) -> str:
        return f"YSeries2({self.c0}, {self.c1})"

    def inverse(self) -> YSeries2:
        """Inverse mod Y^2; the constant term must be a unit ``±X^k``."""
        if len(self.c0.terms) != 1:
            raise ZeroDivisionError(f"constant term {self.c0} is not a unit")
        ((k, c),) = self.c0.terms.items()
        if c not in (1, -1):
            raise ZeroDivisionError(f"constant term {self.c0} is not a unit")
        inv0 = XPoly.monomial(-k, c)
        return YSeries2(inv0, -(self.c1 * inv0 * inv0))

    def scale_y(self, k: int) -> YSeries2:
        """``Y -> X^k * Y``."""
        return YSeries2(self.c0, self.c1.shift_exponent(k))


# rendering -------------------------------------------------------------


def _monomial_text(a: int, b: int, xv: str, yv: str) -> str:
    parts = []
    if a:
        parts.append(xv if a == 1 else f"{xv}^{a}")
    if b:
        parts.append(yv if b == 1 else f"{yv}^{b}")
    return "*".join(parts)


def _render(items, xv: str, yv: str) -> str:
    if not items:
        return "0"
    out = []
    for (a, b), c in items:
        mono = _monomial_text(a, b, xv, yv)
        mag = abs(c)
        body = mono if mono and mag == 1 else (f"{mag}*{mono}" if mono else str(mag))
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


def _latex(items, xv: str, yv: str) -> str:
    if not items:
        return "0"
    out = []
    for (a, b), c in items:
        mono = ""
        if a:
            mono += xv if a == 1 else f"{xv}^{{{a}}}"
        if b:
            mono += yv if b == 1 else f"{yv}^{{{b}}}"
        mag = abs(c)
        body = mono if mono and mag == 1 else f"{mag}{mono}"
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


X = XPoly.monomial(1)
XX = XYPoly.monomial(1, 0)
YY = XYPoly.monomial(0, 1)
