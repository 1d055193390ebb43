"""Exact sparse homogeneous polynomials over the rationals.

A polynomial in variables x0..xn is stored as a map from exponent tuples
(length n+1, entries summing to the declared degree d) to nonzero Fraction
coefficients.  Terms are kept in descending graded-lexicographic order, so
iteration and formatting are deterministic.

Text grammar (whitespace insignificant)::

    poly   := ['-'] term (('+'|'-') term)*
    term   := [coeff] ['*'] factor ('*' factor)*
    factor := 'x' index ['^' exponent]
    coeff  := integer | integer '/' integer

Example: ``3*x0^2*x1 - 5/2*x2^3``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import (
    DegreeError,
    DimensionMismatchError,
    PolySyntaxError,
    SingularMatrixError,
    VariableIndexError,
    ZeroPolynomialError,
)

Exponent = tuple[int, ...]
RatLike = int | Fraction


def degree_of(u: Sequence[int]) -> int:
    return sum(u)


def iter_exponents(n: int, d: int) -> Iterator[Exponent]:
    """All exponents of degree d in n+1 variables, descending graded-lex."""
    if n == 0:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in iter_exponents(n - 1, d - first):
            yield (first,) + rest


class HomogPoly:
    """Homogeneous polynomial of fixed degree with exact coefficients.

    Immutable by convention: no method mutates an instance.  The zero
    polynomial (empty term map) is representable so that derivatives may
    vanish, but operations that are undefined on it raise
    ZeroPolynomialError.
    """

    __slots__ = ("n", "d", "_terms")

    def __init__(self, n: int, d: int, terms: Mapping[Exponent, RatLike]):
        if n < 0 or d < 0:
            raise DimensionMismatchError(f"invalid shape n={n}, d={d}")
        clean: dict[Exponent, Fraction] = {}
        for u, c in terms.items():
            u = tuple(u)
            if len(u) != n + 1:
                raise DimensionMismatchError(
                    f"exponent {u} has length {len(u)}, expected {n + 1}")
            if any(e < 0 for e in u):
                raise DegreeError(f"negative exponent in {u}")
            if sum(u) != d:
                raise DegreeError(f"term {u} has degree {sum(u)}, expected {d}")
            c = Fraction(c)
            if c:
                clean[u] = c
        self.n = n
        self.d = d
        # descending graded-lex; dicts preserve insertion order
        self._terms = {u: clean[u] for u in sorted(clean, reverse=True)}

    @classmethod
    def zero(cls, n: int, d: int) -> "HomogPoly":
        return cls(n, d, {})

    @classmethod
    def monomial(cls, u: Sequence[int], coeff: RatLike = 1) -> "HomogPoly":
        u = tuple(u)
        return cls(len(u) - 1, sum(u), {u: coeff})

    def terms(self) -> Iterator[tuple[Exponent, Fraction]]:
        return iter(self._terms.items())

    def support(self) -> tuple[Exponent, ...]:
        return tuple(self._terms)

    def coeff(self, u: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(u), Fraction(0))

    def num_terms(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HomogPoly):
            return NotImplemented
        return (self.n, self.d, self._terms) == (other.n, other.d, other._terms)

    def __hash__(self) -> int:
        return hash((self.n, self.d, tuple(self._terms.items())))

    def __add__(self, other: "HomogPoly") -> "HomogPoly":
        self._check_same_shape(other)
        out = dict(self._terms)
        for u, c in other._terms.items():
            out[u] = out.get(u, Fraction(0)) + c
        return HomogPoly(self.n, self.d, out)

    def __sub__(self, other: "HomogPoly") -> "HomogPoly":
        self._check_same_shape(other)
        out = dict(self._terms)
        for u, c in other._terms.items():
            out[u] = out.get(u, Fraction(0)) - c
        return HomogPoly(self.n, self.d, out)

    def __neg__(self) -> "HomogPoly":
        return HomogPoly(self.n, self.d, {u: -c for u, c in self._terms.items()})

    def scale(self, c: RatLike) -> "HomogPoly":
        c = Fraction(c)
        return HomogPoly(self.n, self.d, {u: c * v for u, v in self._terms.items()})

    def _check_same_shape(self, other: "HomogPoly") -> None:
        if self.n != other.n or self.d != other.d:
            raise DimensionMismatchError(
                f"shape ({self.n},{self.d}) vs ({other.n},{other.d})")

    def __repr__(self) -> str:
        return f"HomogPoly({self.n}, {self.d}, {format_poly(self)!r})"


# ---------------------------------------------------------------------------
# parsing / formatting

_TOKEN = re.compile(r"\s*(\d+|[x^*/+-])")


def _tokenize(text: str) -> list[str]:
    tokens: list[str] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            if text[pos:].strip():
                raise PolySyntaxError(
                    f"unexpected character {text[pos:].strip()[0]!r} at position {pos}")
            break
        tokens.append(m.group(1))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens: list[str], n: int, d: int):
        self.tokens = tokens
        self.i = 0
        self.n = n
        self.d = d

    def peek(self) -> str | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def advance(self) -> str:
        tok = self.peek()
        if tok is None:
            raise PolySyntaxError("unexpected end of input")
        self.i += 1
        return tok

    def expect_int(self, what: str) -> int:
        tok = self.advance()
        if not tok.isdigit():
            raise PolySyntaxError(f"expected {what}, found {tok!r}")
        return int(tok)

    def parse_term(self) -> tuple[Exponent, Fraction]:
        coeff = Fraction(1)
        tok = self.peek()
        if tok is not None and tok.isdigit():
            num = int(self.advance())
            if self.peek() == "/":
                self.advance()
                den = self.expect_int("denominator")
                if den == 0:
                    raise PolySyntaxError("zero denominator")
                coeff = Fraction(num, den)
            else:
                coeff = Fraction(num)
            if self.peek() == "*":
                self.advance()
        exps = [0] * (self.n + 1)
        saw_factor = False
        while True:
            if self.peek() == "x":
                self.advance()
                idx = self.expect_int("variable index")
                if idx > self.n:
                    raise VariableIndexError(
                        f"variable x{idx} exceeds ambient index {self.n}")
                e = 1
                if self.peek() == "^":
                    self.advance()
                    e = self.expect_int("exponent")
                exps[idx] += e
                saw_factor = True
                if self.peek() == "*":
                    self.advance()
                    continue
            break
        if not saw_factor:
            raise PolySyntaxError(
                f"expected a variable factor, found {self.peek()!r}")
        if sum(exps) != self.d:
            raise DegreeError(
                f"term of degree {sum(exps)} in a degree-{self.d} polynomial")
        return tuple(exps), coeff


def parse_poly(text: str, n: int, d: int) -> HomogPoly:
    """Parse the text grammar into a degree-d polynomial in x0..xn.

    Coefficients of repeated monomials are collected exactly; if everything
    cancels, the result would be zero and ZeroPolynomialError is raised.
    """
    tokens = _tokenize(text)
    if not tokens:
        raise PolySyntaxError("empty polynomial text")
    parser = _Parser(tokens, n, d)
    sign = 1
    if parser.peek() in ("+", "-"):
        sign = -1 if parser.advance() == "-" else 1
    acc: dict[Exponent, Fraction] = {}
    while True:
        u, c = parser.parse_term()
        acc[u] = acc.get(u, Fraction(0)) + sign * c
        tok = parser.peek()
        if tok is None:
            break
        if tok not in ("+", "-"):
            raise PolySyntaxError(f"expected '+' or '-', found {tok!r}")
        parser.advance()
        sign = -1 if tok == "-" else 1
    poly = HomogPoly(n, d, acc)
    if poly.is_zero():
        raise ZeroPolynomialError("all terms cancelled; zero polynomial rejected")
    return poly


def _format_monomial(u: Exponent) -> str:
    parts = [f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in enumerate(u) if e]
    return "*".join(parts)


def format_poly(f: HomogPoly) -> str:
    """Canonical text form: descending graded-lex, exact coefficients."""
    if f.is_zero():
        return "0"
    pieces: list[str] = []
    for k, (u, c) in enumerate(f.terms()):
        mono = _format_monomial(u)
        mag = abs(c)
        if mono:
            body = mono if mag == 1 else f"{mag}*{mono}"
        else:
            body = str(mag)
        if k == 0:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(pieces)


# ---------------------------------------------------------------------------
# weights and initial forms

WeightVector = tuple[Fraction, ...]


def weight_vector(entries: Iterable[RatLike]) -> WeightVector:
    return tuple(Fraction(e) for e in entries)


def weight_of(u: Sequence[int], w: Sequence[RatLike]) -> Fraction:
    """Scalar product of an exponent with a weight vector."""
    if len(u) != len(w):
        raise DimensionMismatchError(f"lengths {len(u)} vs {len(w)}")
    return sum((Fraction(wi) * ui for ui, wi in zip(u, w)), Fraction(0))


def initial_form(f: HomogPoly, w: Sequence[RatLike]) -> HomogPoly:
    """Sum of the terms of f whose weight attains the maximum over f."""
    if f.is_zero():
        raise ZeroPolynomialError("initial form of the zero polynomial is undefined")
    if len(w) != f.n + 1:
        raise DimensionMismatchError(f"weight length {len(w)}, expected {f.n + 1}")
    weights = {u: weight_of(u, w) for u in f.support()}
    top = max(weights.values())
    return HomogPoly(f.n, f.d,
                     {u: c for u, c in f.terms() if weights[u] == top})


def partial_derivative(f: HomogPoly, i: int) -> HomogPoly:
    """Partial derivative with respect to x_i; may be the zero polynomial."""
    if i < 0 or i > f.n:
        raise VariableIndexError(f"index {i} outside 0..{f.n}")
    out: dict[Exponent, Fraction] = {}
    for u, c in f.terms():
        if u[i] == 0:
            continue
        v = u[:i] + (u[i] - 1,) + u[i + 1:]
        out[v] = out.get(v, Fraction(0)) + c * u[i]
    return HomogPoly(f.n, max(f.d - 1, 0), out)


def multiply(f: HomogPoly, g: HomogPoly) -> HomogPoly:
    """Exact product; degrees add."""
    if f.n != g.n:
        raise DimensionMismatchError(f"ambient {f.n} vs {g.n}")
    out: dict[Exponent, Fraction] = {}
    for u, cu in f.terms():
        for v, cv in g.terms():
            uv = tuple(a + b for a, b in zip(u, v))
            out[uv] = out.get(uv, Fraction(0)) + cu * cv
    return HomogPoly(f.n, f.d + g.d, out)


# ---------------------------------------------------------------------------
# linear change of coordinates

def _det(rows: list[list[Fraction]]) -> Fraction:
    """Determinant by exact Gaussian elimination (small matrices only)."""
    m = [row[:] for row in rows]
    size = len(m)
    det = Fraction(1)
    for col in range(size):
        piv = next((r for r in range(col, size) if m[r][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, size):
            if m[r][col]:
                factor = m[r][col] * inv
                m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
    return det


def apply_linear_change(f: HomogPoly, matrix: Sequence[Sequence[RatLike]]) -> HomogPoly:
    """Substitute x_i <- sum_j matrix[i][j] * x_j and expand exactly.

    The matrix must be invertible.  Applying A then B equals applying the
    product A*B in one step.
    """
    size = f.n + 1
    rows = [[Fraction(e) for e in row] for row in matrix]
    if len(rows) != size or any(len(row) != size for row in rows):
        raise DimensionMismatchError(
            f"matrix must be {size}x{size} for n={f.n}")
    if _det(rows) == 0:
        raise SingularMatrixError("change-of-coordinates matrix is singular")
    images = [
        HomogPoly(f.n, 1, {tuple(1 if j == k else 0 for k in range(size)): rows[i][j]
                           for j in range(size) if rows[i][j]})
        for i in range(size)
    ]
    # cache powers of each variable image; exponents repeat across terms
    powers: list[dict[int, HomogPoly]] = [dict() for _ in range(size)]

    def power(i: int, e: int) -> HomogPoly:
        cached = powers[i].get(e)
        if cached is None:
            cached = images[i] if e == 1 else multiply(power(i, e - 1), images[i])
            powers[i][e] = cached
        return cached

    total = HomogPoly.zero(f.n, f.d)
    for u, c in f.terms():
        piece: HomogPoly | None = None
        for i, e in enumerate(u):
            if e == 0:
                continue
            piece = power(i, e) if piece is None else multiply(piece, power(i, e))
        assert piece is not None
        total = total + piece.scale(c)
    return total
