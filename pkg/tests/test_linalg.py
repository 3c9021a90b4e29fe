import random
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from quasitrees.chords import chord_diagram_from_bouquet, intersection_matrix
from quasitrees.families import fib, make_family
from quasitrees.linalg import (
    IneligibleBouquetError,
    IntPolynomial,
    char_poly,
    char_poly_by_minors,
    det_exact,
    determinant_eligible,
    identity_plus,
    kappa_by_determinant,
    principal_minor,
    sum_principal_minors,
)
from quasitrees.ribbon import RibbonGraph, parse_signed_rotation

COUNTEREXAMPLE = "-1,-2,3,1,2,4,3,4"
t = IntPolynomial.t()


def leibniz(M):
    """Permutation expansion; the independent determinant oracle."""
    n = len(M)
    total = 0
    for p in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])
        prod = 1
        for i in range(n):
            prod *= M[i][p[i]]
        total += -prod if inv % 2 else prod
    return total


def matrices(max_n=6, lo=-4, hi=4):
    return st.integers(0, max_n).flatmap(
        lambda n: st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=n, max_size=n))


polys = st.lists(st.integers(-6, 6), max_size=6).map(lambda c: IntPolynomial(tuple(c)))


@given(matrices())
def test_bareiss_matches_leibniz(M):
    assert det_exact(M) == leibniz(M)


@settings(max_examples=50)
@given(matrices(max_n=5), st.data())
def test_determinant_permutation_invariant(M, data):
    n = len(M)
    p = data.draw(st.permutations(range(n)))
    P = [[M[p[i]][p[j]] for j in range(n)] for i in range(n)]
    assert det_exact(P) == det_exact(M)


@given(matrices(max_n=5))
def test_identity_plus_is_sum_of_minors(M):
    n = len(M)
    assert det_exact(identity_plus(M)) == sum(sum_principal_minors(M, k) for k in range(n + 1))


@given(matrices(max_n=5))
def test_char_poly_two_ways(M):
    assert char_poly(M) == char_poly_by_minors(M)


@given(matrices(max_n=4))
def test_char_poly_at_integers(M):
    n = len(M)
    for x in (-2, 0, 3):
        assert char_poly(M)(x) == leibniz([[x * (i == j) - M[i][j] for j in range(n)] for i in range(n)])


def test_zero_pivot_needs_swap():
    assert det_exact([[0, 1], [1, 0]]) == -1
    assert det_exact([[0, 0, 1], [0, 1, 0], [1, 0, 0]]) == -1
    assert det_exact([[1, 2], [2, 4]]) == 0


def test_det_trivial():
    assert det_exact([]) == 1
    assert det_exact([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 1


def test_det_rejects_non_square():
    with pytest.raises(ValueError):
        det_exact([[1, 2]])


def test_counterexample_det_is_14():
    A = intersection_matrix(chord_diagram_from_bouquet(parse_signed_rotation(COUNTEREXAMPLE)))
    assert det_exact(identity_plus(A)) == 14


def test_det_f5():
    B = make_family("F", 5)
    assert kappa_by_determinant(B) == 8 == fib(6)


def test_empty_minor():
    assert principal_minor([[5, 1], [2, 3]], []) == 1
    assert sum_principal_minors([[5, 1], [2, 3]], 0) == 1


def test_e1_of_f_is_zero():
    for n in range(1, 8):
        A = intersection_matrix(chord_diagram_from_bouquet(make_family("F", n)))
        assert sum_principal_minors(A, 1) == 0


def test_char_poly_small():
    assert char_poly([[0]]) == t
    A = intersection_matrix(chord_diagram_from_bouquet(make_family("Fp", 3)))
    assert char_poly(A) == t * t * t + 2 * t
    assert str(char_poly(A)) == "t^3 + 2*t"


def test_eligibility():
    assert determinant_eligible(make_family("F1", 4))
    assert not determinant_eligible(parse_signed_rotation(COUNTEREXAMPLE))
    assert not determinant_eligible(RibbonGraph(((0,), (1,)), {1: (0, 1, 1)}))
    with pytest.raises(IneligibleBouquetError):
        kappa_by_determinant(parse_signed_rotation(COUNTEREXAMPLE))
    with pytest.raises(IneligibleBouquetError):
        kappa_by_determinant(RibbonGraph(((0,), (1,)), {1: (0, 1, 1)}))


def test_small_family_values():
    assert kappa_by_determinant(make_family("Fp1", 2)) == 2
    assert kappa_by_determinant(make_family("Fpn", 3)) == 4


# -- polynomial arithmetic ---------------------------------------------------

@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) * r == p * r + q * r
    assert (p - q) + q == p


@given(polys, polys)
def test_exact_division(p, q):
    if q:
        assert (p * q) // q == p


def test_inexact_division_raises():
    with pytest.raises(ArithmeticError):
        (t * t + 1) // (t + 1)
    with pytest.raises(ZeroDivisionError):
        t // IntPolynomial()


@given(polys, st.integers(-5, 5))
def test_evaluation_is_a_homomorphism(p, x):
    assert (p * p)(x) == p(x) ** 2
    assert (p + 3)(x) == p(x) + 3


@pytest.mark.parametrize("coeffs, text", [
    ((), "0"),
    ((0, 1), "t"),
    ((0, 2, 0, 1), "t^3 + 2*t"),
    ((1, -1, 1), "t^2 - t + 1"),
    ((-3,), "-3"),
    ((0, 0, -1), "-t^2"),
])
def test_str(coeffs, text):
    assert str(IntPolynomial(coeffs)) == text
