from fractions import Fraction
from math import gcd
from random import Random

import pytest

from toricdegen import (
    BinomialPattern,
    DegreeError,
    HomogPoly,
    classify,
    classify_poly,
    enumerate_patterns,
    multiply,
    parse_poly,
    pattern_from_poly,
)
from helpers import brute_prime_pairs, permute_poly


def pat(u, v, a=1, b=1):
    return BinomialPattern(tuple(u), tuple(v), a, b)


class TestClassify:
    def test_prime_example(self):
        assert classify(pat((0, 3, 0), (2, 0, 1))).tag == "Prime"

    def test_proper_power(self):
        verdict = classify(pat((2, 0, 0), (0, 2, 0)))
        assert verdict.tag == "ProperPower" and verdict.power == 2

    def test_shared_variable(self):
        assert classify(pat((1, 1, 0), (1, 0, 1))).tag == "SharedVariable"

    def test_two_variables_always_power(self):
        verdict = classify(pat((3, 0), (0, 3)))
        assert verdict.tag == "ProperPower" and verdict.power == 3

    def test_swap_and_scale_invariance(self):
        rng = Random(1)
        for g in enumerate_patterns(2, 3) + [pat((2, 0, 0), (0, 2, 0)),
                                             pat((1, 1, 0), (1, 0, 1))]:
            base = classify(g)
            swapped = BinomialPattern(g.v, g.u, g.b, g.a)
            assert classify(swapped) == base
            scaled = BinomialPattern(g.u, g.v,
                                     g.a * Fraction(rng.randint(1, 9)),
                                     g.b * Fraction(-3, 7))
            assert classify(scaled) == base

    def test_permutation_invariance(self):
        rng = Random(2)
        for g in enumerate_patterns(2, 4)[:10]:
            perm = list(range(3))
            rng.shuffle(perm)
            permuted = pattern_from_poly(permute_poly(g.to_poly(), tuple(perm)))
            assert classify(permuted).tag == classify(g).tag

    def test_invalid_patterns_rejected(self):
        with pytest.raises(DegreeError):
            pat((1, 0), (1, 0))
        with pytest.raises(DegreeError):
            pat((2, 0), (1, 0))
        with pytest.raises(DegreeError):
            pat((1, 0), (0, 1), a=0)


class TestClassifyPoly:
    def test_not_two_terms(self):
        f = parse_poly("x0^2 + x0*x1 + x1^2", 1, 2)
        assert classify_poly(f).tag == "NotTwoTerms"
        assert classify_poly(HomogPoly.monomial((2, 0))).tag == "NotTwoTerms"

    def test_prime_poly(self):
        assert classify_poly(parse_poly("x1^3 + x0^2*x2", 2, 3)).tag == "Prime"


class TestFactorizationWitnesses:
    """Non-prime verdicts come with explicit factorizations, checked exactly."""

    def test_shared_variable_has_monomial_factor(self):
        for g in [pat((1, 1, 0), (1, 0, 1)), pat((2, 1, 0), (1, 0, 2), 3, -5)]:
            verdict = classify(g)
            assert verdict.tag == "SharedVariable"
            shared = next(i for i, (x, y) in enumerate(zip(g.u, g.v))
                          if x > 0 and y > 0)
            e = tuple(1 if i == shared else 0 for i in range(g.n + 1))
            reduced = HomogPoly(g.n, g.d - 1, {
                tuple(a - b for a, b in zip(g.u, e)): g.a,
                tuple(a - b for a, b in zip(g.v, e)): g.b,
            })
            assert multiply(HomogPoly.monomial(e), reduced) == g.to_poly()

    def test_proper_power_difference_factors(self):
        # with coefficients 1, -1 a joint gcd k factors as A^k - B^k
        for g in [pat((2, 0, 0), (0, 2, 0), 1, -1),
                  pat((3, 0), (0, 3), 1, -1),
                  pat((4, 0, 0), (0, 2, 2), 1, -1)]:
            verdict = classify(g)
            assert verdict.tag == "ProperPower"
            k = verdict.power
            a_exp = tuple(e // k for e in g.u)
            b_exp = tuple(e // k for e in g.v)
            a = HomogPoly.monomial(a_exp)
            b = HomogPoly.monomial(b_exp)
            linear = a - b
            cofactor = HomogPoly.zero(g.n, (k - 1) * sum(a_exp))
            for i in range(k):
                piece = HomogPoly.monomial(tuple(0 for _ in a_exp), 1)
                for _ in range(i):
                    piece = multiply(piece, a)
                for _ in range(k - 1 - i):
                    piece = multiply(piece, b)
                cofactor = cofactor + piece
            assert multiply(linear, cofactor) == g.to_poly()


class TestEnumerate:
    def test_n2_d2_exact_patterns(self):
        pats = enumerate_patterns(2, 2)
        as_sets = {frozenset((g.u, g.v)) for g in pats}
        assert as_sets == {
            frozenset(((2, 0, 0), (0, 1, 1))),
            frozenset(((0, 2, 0), (1, 0, 1))),
            frozenset(((0, 0, 2), (1, 1, 0))),
        }
        assert len(pats) == 3

    def test_one_variable_pair_empty(self):
        for d in (2, 3, 4, 5):
            assert enumerate_patterns(1, d) == []

    def test_matches_brute_force_small(self):
        for n in (1, 2, 3):
            for d in (2, 3, 4):
                got = {frozenset((g.u, g.v)) for g in enumerate_patterns(n, d)}
                assert got == brute_prime_pairs(n, d)

    def test_ordering_and_coefficients(self):
        for g in enumerate_patterns(2, 3):
            assert g.u > g.v  # graded-lex earlier exponent first
            assert (g.a, g.b) == (1, -1)

    def test_structural_facts(self):
        for n, d in [(2, 3), (3, 3), (2, 4)]:
            for g in enumerate_patterns(n, d):
                support = [i for i in range(n + 1) if g.u[i] or g.v[i]]
                assert len(support) >= 3
                assert not any(x > 0 and y > 0 for x, y in zip(g.u, g.v))
                joint = 0
                for e in (*g.u, *g.v):
                    joint = gcd(joint, e)
                assert joint == 1
