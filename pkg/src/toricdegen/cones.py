"""Weight-vector cones and exact feasibility with strict inequalities.

Systems are homogeneous: every constraint compares a linear functional
<a, w> against zero (equality, weak >=, or strict >).  Feasibility is
decided exactly: equalities are eliminated by substitution, then
Fourier-Motzkin elimination removes one variable at a time, a combined
inequality being strict when either parent is strict.  A feasible system
yields a rational witness by back-substitution (interval midpoints, or
bound+1 on an unbounded side, denominators cleared at the end); an
infeasible one yields a certificate: a signed rational combination of the
original constraints summing to the zero functional while using at least
one strict inequality positively, i.e. deriving 0 > 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Sequence

from .binomials import BinomialPattern
from .errors import DimensionMismatchError, DomainError, SupportMismatchError
from .poly import HomogPoly, RatLike

Functional = tuple[Fraction, ...]
CertEntry = tuple[str, int, Fraction]  # (kind, index, multiplier)


def functional(entries: Iterable[RatLike]) -> Functional:
    return tuple(Fraction(e) for e in entries)


def difference_functional(u: Sequence[int], v: Sequence[int]) -> Functional:
    """Functional whose value at w is weight(u) - weight(v)."""
    if len(u) != len(v):
        raise DimensionMismatchError(f"lengths {len(u)} vs {len(v)}")
    return tuple(Fraction(a - b) for a, b in zip(u, v))


@dataclass(frozen=True)
class LinearSystem:
    dim: int
    equalities: tuple[Functional, ...] = ()
    weak_ineqs: tuple[Functional, ...] = ()
    strict_ineqs: tuple[Functional, ...] = ()

    def __post_init__(self):
        for group in (self.equalities, self.weak_ineqs, self.strict_ineqs):
            for f in group:
                if len(f) != self.dim:
                    raise DimensionMismatchError(
                        f"functional {f} has length {len(f)}, expected {self.dim}")

    def constraints(self) -> Iterable[tuple[str, int, Functional]]:
        for i, f in enumerate(self.equalities):
            yield "eq", i, f
        for i, f in enumerate(self.weak_ineqs):
            yield "weak", i, f
        for i, f in enumerate(self.strict_ineqs):
            yield "strict", i, f


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    witness: tuple[Fraction, ...] | None = None
    certificate: tuple[CertEntry, ...] | None = None


def satisfies(system: LinearSystem, w: Sequence[RatLike]) -> bool:
    """Direct substitution check: equalities exact, strict ones strict."""
    if len(w) != system.dim:
        raise DimensionMismatchError(
            f"witness length {len(w)} vs dim {system.dim}")
    vals = [Fraction(e) for e in w]

    def value(f: Functional) -> Fraction:
        return sum((a * b for a, b in zip(f, vals)), Fraction(0))

    return (all(value(f) == 0 for f in system.equalities)
            and all(value(f) >= 0 for f in system.weak_ineqs)
            and all(value(f) > 0 for f in system.strict_ineqs))


def verify_certificate(system: LinearSystem, cert: Sequence[CertEntry]) -> bool:
    """Expand a certificate and confirm it derives 0 > 0."""
    total = [Fraction(0)] * system.dim
    used_strict = False
    groups = {"eq": system.equalities, "weak": system.weak_ineqs,
              "strict": system.strict_ineqs}
    for kind, idx, mult in cert:
        mult = Fraction(mult)
        if kind not in groups or not 0 <= idx < len(groups[kind]):
            return False
        if kind != "eq" and mult < 0:
            return False
        if kind == "strict" and mult > 0:
            used_strict = True
        for j, a in enumerate(groups[kind][idx]):
            total[j] += mult * a
    return used_strict and all(t == 0 for t in total)


# ---------------------------------------------------------------------------
# solver

_Lineage = dict[tuple[str, int], Fraction]


class _Constraint:
    """Working constraint: functional, strictness, provenance multipliers."""

    __slots__ = ("func", "strict", "lineage")

    def __init__(self, func: list[Fraction], strict: bool, lineage: _Lineage):
        self.func = func
        self.strict = strict
        self.lineage = lineage

    def combined_with(self, other: "_Constraint", c_self: Fraction,
                      c_other: Fraction) -> "_Constraint":
        func = [c_self * a + c_other * b
                for a, b in zip(self.func, other.func)]
        lineage: _Lineage = {}
        for lin, c in ((self.lineage, c_self), (other.lineage, c_other)):
            for key, mult in lin.items():
                val = lineage.get(key, Fraction(0)) + c * mult
                if val:
                    lineage[key] = val
                else:
                    lineage.pop(key, None)
        return _Constraint(func, self.strict or other.strict, lineage)

    def is_zero(self) -> bool:
        return not any(self.func)


def _primitive(func: Sequence[Fraction]) -> tuple[int, ...]:
    scale = reduce(lambda a, b: a * b // gcd(a, b),
                   (e.denominator for e in func), 1)
    ints = [int(e * scale) for e in func]
    g = reduce(gcd, (abs(e) for e in ints), 0)
    if g > 1:
        ints = [e // g for e in ints]
    return tuple(ints)


def _certificate(con: _Constraint) -> tuple[CertEntry, ...]:
    entries = [(kind, idx, mult) for (kind, idx), mult in con.lineage.items()]
    entries.sort(key=lambda e: ({"eq": 0, "weak": 1, "strict": 2}[e[0]], e[1]))
    return tuple(entries)


def solve(system: LinearSystem) -> FeasibilityResult:
    """Decide feasibility; produce a witness or an infeasibility certificate."""
    dim = system.dim
    eqs = [_Constraint(list(f), False, {("eq", i): Fraction(1)})
           for i, f in enumerate(system.equalities)]
    active = ([_Constraint(list(f), False, {("weak", i): Fraction(1)})
               for i, f in enumerate(system.weak_ineqs)]
              + [_Constraint(list(f), True, {("strict", i): Fraction(1)})
                 for i, f in enumerate(system.strict_ineqs)])

    subst_stack: list[tuple[int, list[Fraction], _Lineage]] = []
    eliminated: set[int] = set()

    # eliminate equalities by substitution
    while eqs:
        eq = eqs.pop(0)
        k = next((j for j, a in enumerate(eq.func) if a), None)
        if k is None:
            continue  # 0 = 0
        pivot = eq.func[k]
        for con in eqs + active:
            if con.func[k]:
                factor = con.func[k] / pivot
                merged = con.combined_with(eq, Fraction(1), -factor)
                con.func = merged.func
                con.func[k] = Fraction(0)
                con.lineage = merged.lineage
        subst_stack.append((k, eq.func[:], eq.lineage))
        eliminated.add(k)

    def split_trivial(cons: list[_Constraint]):
        """Drop 0 >= 0; return a 0 > 0 contradiction if present."""
        kept = []
        for con in cons:
            if con.is_zero():
                if con.strict:
                    return None, con
            else:
                kept.append(con)
        return kept, None

    active, contradiction = split_trivial(active)
    if contradiction is not None:
        return FeasibilityResult(False, certificate=_certificate(contradiction))

    # Fourier-Motzkin elimination, ascending variable index
    fm_stack: list[tuple[int, list[tuple[list[Fraction], bool]],
                         list[tuple[list[Fraction], bool]]]] = []
    for k in range(dim):
        if k in eliminated:
            continue
        lowers = [c for c in active if c.func[k] > 0]
        uppers = [c for c in active if c.func[k] < 0]
        passed = [c for c in active if not c.func[k]]
        fm_stack.append((k,
                         [(c.func[:], c.strict) for c in lowers],
                         [(c.func[:], c.strict) for c in uppers]))
        fresh: list[_Constraint] = []
        seen: set[tuple[tuple[int, ...], bool]] = set()
        for lo in lowers:
            for up in uppers:
                combo = lo.combined_with(up, -up.func[k], lo.func[k])
                if combo.is_zero():
                    if combo.strict:
                        return FeasibilityResult(
                            False, certificate=_certificate(combo))
                    continue
                key = (_primitive(combo.func), combo.strict)
                if key in seen:
                    continue
                seen.add(key)
                fresh.append(combo)
        active = passed + fresh

    # feasible: back-substitute
    values: dict[int, Fraction] = {}
    for k, lower_data, upper_data in reversed(fm_stack):
        def bound(func: list[Fraction]) -> Fraction:
            rest = sum((a * values[j] for j, a in enumerate(func)
                        if j != k and a), Fraction(0))
            return -rest / func[k]

        lows = [bound(f) for f, _ in lower_data]
        highs = [bound(f) for f, _ in upper_data]
        if lows and highs:
            lo, hi = max(lows), min(highs)
            values[k] = (lo + hi) / 2
        elif lows:
            values[k] = max(lows) + 1
        elif highs:
            values[k] = min(highs) - 1
        else:
            values[k] = Fraction(0)
    for k, func, _lineage in reversed(subst_stack):
        rest = sum((a * values[j] for j, a in enumerate(func)
                    if j != k and a), Fraction(0))
        values[k] = -rest / func[k]

    witness = [values[j] for j in range(dim)]
    scale = reduce(lambda a, b: a * b // gcd(a, b),
                   (v.denominator for v in witness), 1)
    witness = tuple(v * scale for v in witness)
    assert satisfies(system, witness), "feasible witness failed self-check"
    return FeasibilityResult(True, witness=witness)


# ---------------------------------------------------------------------------
# cone builders

def implies(cone: LinearSystem, func: Sequence[RatLike]) -> bool:
    """True iff <func, w> >= 0 holds on every point of the cone.

    Decided as infeasibility of the cone together with <func, w> < 0.
    The cone must not contain strict inequalities.
    """
    if cone.strict_ineqs:
        raise DomainError("implication cone must not contain strict inequalities")
    test = functional(-Fraction(e) for e in func)
    augmented = LinearSystem(cone.dim, cone.equalities, cone.weak_ineqs, (test,))
    return not solve(augmented).feasible


def compatible_cone(g: BinomialPattern, ordering: Sequence[int]) -> LinearSystem:
    """Weight vectors weakly decreasing along the ordering that balance g.

    The ordering lists variable indices from most to least dominant; adjacent
    pairs contribute w_i >= w_j, and the two monomials of g are forced to
    share a weight.
    """
    dim = g.n + 1
    if sorted(ordering) != list(range(dim)):
        raise DomainError(f"ordering must be a permutation of 0..{g.n}")
    weak = []
    for i, j in zip(ordering, ordering[1:]):
        f = [Fraction(0)] * dim
        f[i] = Fraction(1)
        f[j] = Fraction(-1)
        weak.append(tuple(f))
    return LinearSystem(dim, (difference_functional(g.u, g.v),), tuple(weak), ())


def stratum_system(f: HomogPoly, g: BinomialPattern) -> LinearSystem:
    """Weights making g the initial form of f.

    Requires both monomials of g to appear in f with exactly the pattern's
    coefficients; every other monomial of f must fall strictly below them.
    """
    if f.n != g.n:
        raise DimensionMismatchError(f"ambient {f.n} vs {g.n}")
    if f.coeff(g.u) != g.a or f.coeff(g.v) != g.b:
        raise SupportMismatchError(
            "binomial monomials absent from f or coefficients differ")
    strict = tuple(difference_functional(g.u, w)
                   for w in f.support() if w not in (g.u, g.v))
    return LinearSystem(g.n + 1, (difference_functional(g.u, g.v),), (), strict)
