"""The restricted coefficient family and the orbit-map differential.

A degree-d form in x0..xn lies in the restricted family when every monomial
involving only x0 and x1 has zero coefficient, except x1^d which is free.
The d excluded exponents are x0^d, x0^(d-1)*x1, ..., x0*x1^(d-1).

For a point c of the family, the tangent space to the orbit of f_c under
linear changes of coordinates, taken together with the family directions, is
spanned by two groups of generators: the non-excluded monomials themselves,
and the (n+1)^2 products (df_c/dx_i) * x_j.  Their span inside the full
degree-d coefficient space is what differential_rank measures.  Restricted to
the excluded coordinates, all products collapse onto a single spike at
x0*x1^(d-1) plus a banded (2n-2) x (d-1) block of shifted coefficient rows
(key_matrix); this yields the structural rank bound used to confirm modular
rank computations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from random import Random
from typing import Iterator, Mapping, NamedTuple

from .errors import DomainError
from .linalg import (
    QMatrix,
    RankReport,
    _BadPrime,
    basis,
    random_prime,
    rank_sparse_exact,
    rank_sparse_mod_p,
)
from .poly import Exponent, HomogPoly, multiply, partial_derivative


@dataclass(frozen=True)
class ExclusionSet:
    """The d excluded exponents, descending graded-lex (x0^d first)."""

    n: int
    d: int
    members: tuple[Exponent, ...]

    def __post_init__(self):
        object.__setattr__(self, "_member_set", frozenset(self.members))

    def __contains__(self, u: Exponent) -> bool:
        return tuple(u) in self._member_set

    def __len__(self) -> int:
        return len(self.members)


def _check_domain(n: int, d: int) -> None:
    if n < 2 or d < 2:
        raise DomainError(f"need n >= 2 and d >= 2, got n={n}, d={d}")


@lru_cache(maxsize=None)
def excluded_exponents(n: int, d: int) -> ExclusionSet:
    _check_domain(n, d)
    members = []
    for u1 in range(d):
        u = [0] * (n + 1)
        u[0] = d - u1
        u[1] = u1
        members.append(tuple(u))
    return ExclusionSet(n, d, tuple(members))


class FamilyPoint:
    """Full coefficient vector of a family member (zeros on the excluded set)."""

    __slots__ = ("n", "d", "coeffs")

    def __init__(self, n: int, d: int, coeffs: Mapping[Exponent, Fraction],
                 validate: bool = True):
        self.n = n
        self.d = d
        self.coeffs = {tuple(u): Fraction(c) for u, c in coeffs.items()}
        if validate:
            excluded = excluded_exponents(n, d)
            B = basis(n, d)
            if set(self.coeffs) != set(B.exponents):
                raise DomainError("coefficient map must cover every degree-d exponent")
            bad = [u for u in excluded.members if self.coeffs[u]]
            if bad:
                raise DomainError(f"nonzero coefficients on excluded exponents {bad}")

    def coeff(self, u: Exponent) -> Fraction:
        return self.coeffs.get(tuple(u), Fraction(0))

    def to_poly(self) -> HomogPoly:
        return HomogPoly(self.n, self.d,
                         {u: c for u, c in self.coeffs.items() if c})


def sample_family(n: int, d: int, rng: Random, bound: int = 1000) -> FamilyPoint:
    """Random family member with nonzero integer coefficients off the excluded set.

    Coefficients are uniform on the nonzero integers in [-bound, bound].
    """
    _check_domain(n, d)
    if bound < 2:
        raise DomainError(f"bound must be at least 2, got {bound}")
    excluded = excluded_exponents(n, d)
    coeffs: dict[Exponent, Fraction] = {}
    for u in basis(n, d).exponents:
        if u in excluded:
            coeffs[u] = Fraction(0)
        else:
            k = rng.randrange(2 * bound)
            coeffs[u] = Fraction(k - bound if k < bound else k - bound + 1)
    return FamilyPoint(n, d, coeffs, validate=False)


class Generator(NamedTuple):
    """A spanning element of the differential image, tagged with its origin."""

    kind: str                      # "monomial" or "product"
    origin: Exponent | tuple[int, int]
    poly: HomogPoly


def differential_generators(point: FamilyPoint) -> list[Generator]:
    """Monomial generators for every non-excluded exponent, then the
    (n+1)^2 products (df/dx_i) * x_j in row-major (i, j) order."""
    n, d = point.n, point.d
    excluded = excluded_exponents(n, d)
    gens: list[Generator] = []
    for u in basis(n, d).exponents:
        if u not in excluded:
            gens.append(Generator("monomial", u, HomogPoly.monomial(u)))
    f = point.to_poly()
    partials = [partial_derivative(f, i) for i in range(n + 1)]
    for i in range(n + 1):
        for j in range(n + 1):
            xj = HomogPoly.monomial(tuple(1 if t == j else 0 for t in range(n + 1)))
            gens.append(Generator("product", (i, j), multiply(partials[i], xj)))
    return gens


def _shift_exponent(n: int, d: int, i: int, m: int) -> Exponent:
    """Exponent with entry 1 at i, m at 0, and d-m-1 at 1."""
    u = [0] * (n + 1)
    u[0] = m
    u[1] = d - m - 1
    u[i] += 1
    return tuple(u)


def key_matrix(point: FamilyPoint) -> QMatrix:
    """The (2n-2) x (d-1) block of product-generator coefficients on the
    excluded exponents other than x0*x1^(d-1).

    For each i in 2..n there are two rows: the coefficient run for the
    product with x0, then the same run shifted right once for the product
    with x1.  Columns follow x0^d, x0^(d-1)*x1, ..., x0^2*x1^(d-2).
    """
    n, d = point.n, point.d
    rows = []
    for i in range(2, n + 1):
        run = [point.coeff(_shift_exponent(n, d, i, m))
               for m in range(d - 1, 0, -1)]
        rows.append(run)
        rows.append([Fraction(0)] + run[:-1])
    return QMatrix(rows)


def structural_rank_bound(n: int, d: int) -> int:
    """Upper bound for the differential rank, exact at generic points."""
    ambient = len(basis(n, d))
    return ambient - d + 1 + min(d - 1, 2 * n - 2)


def _sparse_rows(point: FamilyPoint) -> Iterator[dict[int, Fraction]]:
    B = basis(point.n, point.d)
    for gen in differential_generators(point):
        yield {B.index_of(u): c for u, c in gen.poly.terms()}


def differential_rank(point: FamilyPoint, mode: str = "probabilistic",
                      rng: Random | None = None) -> RankReport:
    """Rank of the differential-image span inside the full monomial basis.

    Probabilistic mode computes the rank modulo a random large prime, which
    can only undershoot; if it meets the structural bound the answer is
    certified and reported as modular+exact-confirmed, otherwise the exact
    sparse elimination runs instead.
    """
    ambient = len(basis(point.n, point.d))
    if mode == "exact":
        r = rank_sparse_exact(_sparse_rows(point))
        return RankReport.of(r, ambient, "exact")
    if mode != "probabilistic":
        raise ValueError(f"unknown rank mode {mode!r}")
    if rng is None:
        raise ValueError("probabilistic mode needs an explicit random source")
    while True:
        p = random_prime(rng)
        try:
            r = rank_sparse_mod_p(_sparse_rows(point), p)
            break
        except _BadPrime:
            continue
    if r == structural_rank_bound(point.n, point.d):
        return RankReport.of(r, ambient, "modular+exact-confirmed")
    r = rank_sparse_exact(_sparse_rows(point))
    return RankReport.of(r, ambient, "exact")


@dataclass(frozen=True)
class RedundancyReport:
    ok: bool
    failures: tuple[tuple[int, int], ...]

    def __bool__(self) -> bool:
        return self.ok


def redundancy_check(point: FamilyPoint) -> RedundancyReport:
    """Confirm that products with i = 0, (i, j) = (1, 1), or j > 1 add nothing
    beyond the monomial generators and x0*x1^(d-1).

    Such a product lies in that span exactly when its coefficients vanish on
    the excluded exponents other than x0*x1^(d-1); offenders are reported
    per (i, j) pair.
    """
    n, d = point.n, point.d
    blocked = excluded_exponents(n, d).members[:-1]
    f = point.to_poly()
    partials = [partial_derivative(f, i) for i in range(n + 1)]
    failures = []
    for i in range(n + 1):
        for j in range(n + 1):
            if not (i == 0 or (i == 1 and j == 1) or j > 1):
                continue
            xj = HomogPoly.monomial(tuple(1 if t == j else 0 for t in range(n + 1)))
            prod = multiply(partials[i], xj)
            if any(prod.coeff(u) for u in blocked):
                failures.append((i, j))
    return RedundancyReport(ok=not failures, failures=tuple(failures))
