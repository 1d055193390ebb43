"""Prime binomials: classification and support-pattern enumeration.

A two-term homogeneous polynomial a*x^u + b*x^v (a, b nonzero) generates a
prime ideal over an algebraically closed field of characteristic zero exactly
when the supports of u and v are disjoint and the entries of u and v are
jointly coprime.  A shared variable factors out as a monomial; a joint gcd
k >= 2 makes the binomial a difference/sum of k-th powers, which splits.
Coefficient values never matter beyond being nonzero, so enumeration works
on support patterns with fixed coefficients 1 and -1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .errors import DegreeError, DimensionMismatchError
from .poly import Exponent, HomogPoly, iter_exponents

PRIME = "Prime"
NOT_TWO_TERMS = "NotTwoTerms"
SHARED_VARIABLE = "SharedVariable"
PROPER_POWER = "ProperPower"


@dataclass(frozen=True)
class PrimeVerdict:
    tag: str
    power: int | None = None

    @property
    def is_prime(self) -> bool:
        return self.tag == PRIME


@dataclass(frozen=True)
class BinomialPattern:
    """Unordered two-monomial support pattern with nonzero coefficients."""

    u: Exponent
    v: Exponent
    a: Fraction = field(default=Fraction(1))
    b: Fraction = field(default=Fraction(1))

    def __post_init__(self):
        object.__setattr__(self, "u", tuple(self.u))
        object.__setattr__(self, "v", tuple(self.v))
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if len(self.u) != len(self.v):
            raise DimensionMismatchError(
                f"exponent lengths {len(self.u)} vs {len(self.v)}")
        if self.u == self.v:
            raise DegreeError("the two monomials must be distinct")
        if sum(self.u) != sum(self.v):
            raise DegreeError(
                f"degrees {sum(self.u)} vs {sum(self.v)} differ")
        if self.a == 0 or self.b == 0:
            raise DegreeError("binomial coefficients must be nonzero")

    @property
    def n(self) -> int:
        return len(self.u) - 1

    @property
    def d(self) -> int:
        return sum(self.u)

    def to_poly(self) -> HomogPoly:
        return HomogPoly(self.n, self.d, {self.u: self.a, self.v: self.b})


def classify(g: BinomialPattern) -> PrimeVerdict:
    """Primality verdict for a binomial pattern.

    SharedVariable when some x_i divides both monomials; ProperPower(k) when
    the joint gcd k of all exponent entries is at least 2; Prime otherwise.
    """
    if any(x > 0 and y > 0 for x, y in zip(g.u, g.v)):
        return PrimeVerdict(SHARED_VARIABLE)
    k = 0
    for e in (*g.u, *g.v):
        k = gcd(k, e)
    if k >= 2:
        return PrimeVerdict(PROPER_POWER, power=k)
    return PrimeVerdict(PRIME)


def pattern_from_poly(f: HomogPoly) -> BinomialPattern | None:
    """The pattern of a two-term polynomial, or None if not two terms."""
    if f.num_terms() != 2:
        return None
    (u, a), (v, b) = f.terms()
    return BinomialPattern(u, v, a, b)


def classify_poly(f: HomogPoly) -> PrimeVerdict:
    g = pattern_from_poly(f)
    if g is None:
        return PrimeVerdict(NOT_TWO_TERMS)
    return classify(g)


def enumerate_patterns(n: int, d: int) -> list[BinomialPattern]:
    """All prime support patterns of degree d in n+1 variables.

    Each unordered pair appears once, with the graded-lex earlier exponent
    first and symbolic coefficients 1 and -1.
    """
    exps = tuple(iter_exponents(n, d))
    out: list[BinomialPattern] = []
    for i, u in enumerate(exps):
        for v in exps[i + 1:]:
            g = BinomialPattern(u, v, Fraction(1), Fraction(-1))
            if classify(g).is_prime:
                out.append(g)
    return out
