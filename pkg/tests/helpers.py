"""Shared generators and property suites for the tests.

The property runners take a case count so the unit tests can run quick
passes while the acceptance suite runs the full counts.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd
from random import Random

from toricdegen import (
    HomogPoly,
    LinearSystem,
    format_poly,
    initial_form,
    multiply,
    parse_poly,
    satisfies,
    solve,
    verify_certificate,
)
from toricdegen.poly import iter_exponents


def random_poly(rng: Random, n: int, d: int, max_terms: int = 6) -> HomogPoly:
    exps = list(iter_exponents(n, d))
    count = rng.randint(1, min(max_terms, len(exps)))
    chosen = rng.sample(exps, count)
    terms = {}
    for u in chosen:
        c = 0
        while c == 0:
            c = rng.randint(-9, 9)
        terms[u] = Fraction(c, rng.randint(1, 4))
    return HomogPoly(n, d, terms)


def random_weight(rng: Random, n: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(rng.randint(-6, 6), rng.randint(1, 3))
                 for _ in range(n + 1))


def random_shape(rng: Random) -> tuple[int, int]:
    return rng.randint(1, 3), rng.randint(1, 3)


def permute_poly(f: HomogPoly, perm: tuple[int, ...]) -> HomogPoly:
    terms = {}
    for u, c in f.terms():
        v = [0] * len(u)
        for i, e in enumerate(u):
            v[perm[i]] = e
        terms[tuple(v)] = c
    return HomogPoly(f.n, f.d, terms)


def permute_weight(w, perm: tuple[int, ...]):
    out = [Fraction(0)] * len(w)
    for i, e in enumerate(w):
        out[perm[i]] = Fraction(e)
    return tuple(out)


# ---------------------------------------------------------------------------
# property suites (criterion: initial-form laws)

def run_idempotence(rng: Random, cases: int) -> None:
    for _ in range(cases):
        n, d = random_shape(rng)
        f = random_poly(rng, n, d)
        w = random_weight(rng, n)
        once = initial_form(f, w)
        assert initial_form(once, w) == once


def run_multiplicativity(rng: Random, cases: int) -> None:
    for _ in range(cases):
        n, _ = random_shape(rng)
        f = random_poly(rng, n, rng.randint(1, 3))
        g = random_poly(rng, n, rng.randint(1, 3))
        w = random_weight(rng, n)
        assert initial_form(multiply(f, g), w) == \
            multiply(initial_form(f, w), initial_form(g, w))


def run_translation_scaling(rng: Random, cases: int) -> None:
    for _ in range(cases):
        n, d = random_shape(rng)
        f = random_poly(rng, n, d)
        w = random_weight(rng, n)
        base = initial_form(f, w)
        c = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
        shifted = tuple(e + c for e in w)
        assert initial_form(f, shifted) == base
        s = Fraction(rng.randint(1, 7), rng.randint(1, 5))
        scaled = tuple(s * e for e in w)
        assert initial_form(f, scaled) == base


def run_permutation_equivariance(rng: Random, cases: int) -> None:
    for _ in range(cases):
        n, d = random_shape(rng)
        f = random_poly(rng, n, d)
        w = random_weight(rng, n)
        perm = list(range(n + 1))
        rng.shuffle(perm)
        perm = tuple(perm)
        assert initial_form(permute_poly(f, perm), permute_weight(w, perm)) \
            == permute_poly(initial_form(f, w), perm)


# ---------------------------------------------------------------------------
# brute-force oracle for prime pattern enumeration

def brute_prime_pairs(n: int, d: int) -> set[frozenset]:
    """Independent filter over all monomial pairs (no library calls)."""
    exps: list[tuple[int, ...]] = []

    def build(prefix, remaining, slots):
        if slots == 1:
            exps.append(tuple(prefix + [remaining]))
            return
        for e in range(remaining + 1):
            build(prefix + [e], remaining - e, slots - 1)

    build([], d, n + 1)
    out = set()
    for u, v in combinations(exps, 2):
        if any(a > 0 and b > 0 for a, b in zip(u, v)):
            continue
        joint = 0
        for e in (*u, *v):
            joint = gcd(joint, e)
        if joint == 1:
            out.add(frozenset((u, v)))
    return out


# ---------------------------------------------------------------------------
# random linear systems for the solver suite

def random_system(rng: Random) -> LinearSystem:
    dim = rng.randint(2, 6)

    def func():
        return tuple(Fraction(rng.randint(-4, 4)) for _ in range(dim))

    return LinearSystem(
        dim,
        equalities=tuple(func() for _ in range(rng.randint(0, 2))),
        weak_ineqs=tuple(func() for _ in range(rng.randint(0, 4))),
        strict_ineqs=tuple(func() for _ in range(rng.randint(0, 3))),
    )


def run_solver_suite(rng: Random, cases: int) -> tuple[int, int]:
    """Solve random systems; witnesses substituted, certificates expanded.

    Returns (feasible_count, infeasible_count)."""
    feasible = infeasible = 0
    for _ in range(cases):
        system = random_system(rng)
        result = solve(system)
        if result.feasible:
            feasible += 1
            assert satisfies(system, result.witness)
        else:
            infeasible += 1
            assert verify_certificate(system, result.certificate)
    return feasible, infeasible


def roundtrip_text(f: HomogPoly) -> None:
    text = format_poly(f)
    again = parse_poly(text, f.n, f.d)
    assert again == f
    assert format_poly(again) == text
