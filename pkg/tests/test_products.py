import itertools
import math

from hypothesis import given, settings

from app.models.multivector import Multivector
from app.models.signature import G3, G6, Signature
from app.services.algebra.products import (
    commutator_half,
    geometric_product,
    grade_involute,
    inner_product,
    outer_product,
    reverse,
    scalar_product,
)
from app.services.helper.sampling import random_multivector, random_vector
from tests.strategies import multivectors

SPACETIME = Signature(1, 3)


def vec(sig, k):
    return Multivector.vector(sig, k)


@settings(max_examples=60, deadline=None)
@given(multivectors(), multivectors(), multivectors())
def test_associativity_g3(a, b, c):
    left = geometric_product(geometric_product(a, b), c)
    right = geometric_product(a, geometric_product(b, c))
    assert left.max_abs_diff(right) < 1e-9


@settings(max_examples=40, deadline=None)
@given(multivectors(SPACETIME), multivectors(SPACETIME), multivectors(SPACETIME))
def test_associativity_spacetime(a, b, c):
    left = geometric_product(geometric_product(a, b), c)
    right = geometric_product(a, geometric_product(b, c))
    assert left.max_abs_diff(right) < 1e-8


@settings(max_examples=60, deadline=None)
@given(multivectors(), multivectors(), multivectors())
def test_distributivity(a, b, c):
    assert geometric_product(a, b + c).max_abs_diff(geometric_product(a, b) + geometric_product(a, c)) < 1e-10


@settings(max_examples=60, deadline=None)
@given(multivectors(), multivectors())
def test_reverse_is_an_anti_automorphism(a, b):
    assert reverse(geometric_product(a, b)).max_abs_diff(geometric_product(reverse(b), reverse(a))) < 1e-10


@settings(max_examples=60, deadline=None)
@given(multivectors(grades={1}), multivectors(grades={1}))
def test_vector_product_splits_into_inner_and_outer(a, b):
    ab = geometric_product(a, b)
    assert ab.max_abs_diff(inner_product(a, b) + outer_product(a, b)) < 1e-12
    assert ab.scalar_part == scalar_product(a, b)


@settings(max_examples=60, deadline=None)
@given(multivectors(grades={1}))
def test_vector_square_is_the_quadratic_form(a):
    square = geometric_product(a, a)
    expected = sum(a[1 << k] ** 2 for k in range(3))
    assert square.max_abs_diff(Multivector.scalar(G3, expected)) < 1e-12


@settings(max_examples=60, deadline=None)
@given(multivectors(grades={1}), multivectors())
def test_contraction_is_nilpotent(a, b):
    assert inner_product(a, inner_product(a, b)).max_abs() < 1e-10


def test_contraction_is_nilpotent_in_g6(rng):
    for _ in range(20):
        a = random_vector(G6, rng)
        b = random_multivector(G6, rng, terms=20)
        assert inner_product(a, inner_product(a, b)).max_abs() < 1e-12


@settings(max_examples=60, deadline=None)
@given(multivectors(), multivectors())
def test_grade_involution_is_an_automorphism(a, b):
    left = grade_involute(geometric_product(a, b))
    right = geometric_product(grade_involute(a), grade_involute(b))
    assert left.max_abs_diff(right) < 1e-10
    assert grade_involute(grade_involute(a)) == a


def test_grade_subspaces_have_binomial_dimension(rng):
    for sig in (G3, G6, SPACETIME):
        for r in range(sig.dim + 1):
            x = random_multivector(sig, rng, grades={r})
            assert len(dict(x.terms)) == math.comb(sig.dim, r)
            assert x.grades() == [r]


def test_bivector_commutators_close_in_g6():
    planes = [Multivector.blade(G6, list(pair)) for pair in itertools.combinations(range(1, 7), 2)]
    pairs = list(itertools.combinations(planes, 2))
    assert len(pairs) == 105
    for a, b in pairs:
        bracket = commutator_half(a, b)
        assert bracket.max_abs_diff(bracket.grade(2)) == 0.0


def test_spacetime_metric():
    assert geometric_product(vec(SPACETIME, 1), vec(SPACETIME, 1)) == Multivector.scalar(SPACETIME, 1.0)
    for k in (2, 3, 4):
        assert geometric_product(vec(SPACETIME, k), vec(SPACETIME, k)) == Multivector.scalar(SPACETIME, -1.0)


def test_bivector_squares_to_minus_one():
    e12 = Multivector.blade(G3, [1, 2])
    assert geometric_product(e12, e12) == Multivector.scalar(G3, -1.0)


def test_inner_product_examples():
    e1, e2 = vec(G3, 1), vec(G3, 2)
    e12 = Multivector.blade(G3, [1, 2])
    assert inner_product(e1, e12) == e2
    assert inner_product(e12, e1) == -e2
    assert inner_product(Multivector.scalar(G3, 3.0), e12) == Multivector.zero(G3)


def test_outer_product_examples():
    e1, e2, e3 = vec(G3, 1), vec(G3, 2), vec(G3, 3)
    assert outer_product(e1, e2) == Multivector.blade(G3, [1, 2])
    assert outer_product(e2, e1) == Multivector.blade(G3, [2, 1])
    assert outer_product(e1, e1) == Multivector.zero(G3)
    assert outer_product(outer_product(e1, e2), e3) == Multivector.pseudoscalar(G3)
    assert outer_product(Multivector.scalar(G3, 2.0), e3) == e3.scale(2.0)


def test_reverse_and_involution_signs():
    x = Multivector(G3, {0: 1.0, 1: 1.0, 3: 1.0, 7: 1.0})
    assert dict(reverse(x).terms) == {0: 1.0, 1: 1.0, 3: -1.0, 7: -1.0}
    assert dict(grade_involute(x).terms) == {0: 1.0, 1: -1.0, 3: 1.0, 7: -1.0}


def test_commutator_half_of_bivectors():
    e23 = Multivector.blade(G3, [2, 3])
    e31 = Multivector.blade(G3, [3, 1])
    e12 = Multivector.blade(G3, [1, 2])
    assert commutator_half(e23, e31) == -e12
    assert commutator_half(e23, e23) == Multivector.zero(G3)


def test_operators_delegate():
    e1, e2 = vec(G3, 1), vec(G3, 2)
    assert e1 * e2 == geometric_product(e1, e2)
    assert (e1 ^ e2) == outer_product(e1, e2)
    assert (e1 | e1) == Multivector.scalar(G3, 1.0)
    assert ~(e1 * e2) == e2 * e1
