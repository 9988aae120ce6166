import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hankeldet import GF, Poly, PreconditionError
from hankeldet.oracles import (
    DenseMatrix,
    bareiss_det,
    charpoly,
    eigen_sign_count,
    hankel_matrix,
    naive_hankel_dets,
    newton_power_sums,
)
from hankeldet.quadforms import power_sum_series
from hankeldet.coeffring import series_expand


def leibniz_det(rows):
    n = len(rows)
    total = Fraction(0)
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = Fraction(-1 if inversions % 2 else 1)
        for i, j in enumerate(perm):
            term *= rows[i][j]
        total += term
    return total


matrices = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n),
                       min_size=n, max_size=n))


@settings(max_examples=150)
@given(matrices)
def test_bareiss_matches_permutation_expansion(rows):
    assert bareiss_det(DenseMatrix.from_rows(rows)) == leibniz_det(rows)


def test_bareiss_needs_pivoting():
    m = DenseMatrix.from_rows([[0, 1, 2], [1, 0, 3], [4, -3, 8]])
    assert bareiss_det(m) == leibniz_det(m.entries)
    assert bareiss_det(DenseMatrix.from_rows([[0, 0], [0, 5]])) == 0


def test_bareiss_over_gfp():
    F = GF(7)
    m = DenseMatrix.from_rows([[3, 1], [5, 6]])
    assert bareiss_det(m, F) == (18 - 5) % 7


def test_hankel_matrix_shape():
    m = hankel_matrix([1, 2, 3, 4, 5], 3)
    assert m.entries == ((1, 2, 3), (2, 3, 4), (3, 4, 5))
    assert m.is_symmetric()
    with pytest.raises(PreconditionError):
        hankel_matrix([1, 2], 2)
    with pytest.raises(PreconditionError):
        naive_hankel_dets([1, 2, 3], 3)


def test_charpoly_small():
    # [[2, 1], [1, 2]]: t^2 - 4t + 3
    assert charpoly(DenseMatrix.from_rows([[2, 1], [1, 2]])) == [3, -4, 1]


def test_eigen_sign_examples():
    # rank 2 with nonzero eigenvalues of product -6
    assert eigen_sign_count(hankel_matrix([1, 2, 3, 4, 5], 3)) == (1, 1)
    assert eigen_sign_count(DenseMatrix.from_rows([[0, 1], [1, 0]])) == (1, 1)
    assert eigen_sign_count(DenseMatrix.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, -2]])) == (2, 1)
    with pytest.raises(PreconditionError):
        eigen_sign_count(DenseMatrix.from_rows([[1, 2], [3, 4]]))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9), st.integers(1, 6))
def test_inertia_sums_to_rank(seed, n):
    rng = random.Random(seed)
    coeffs = [rng.randint(-4, 4) for _ in range(2 * n - 1)]
    m = hankel_matrix(coeffs, n)
    pos, neg = eigen_sign_count(m)
    nonsingular = bareiss_det(m) != 0
    assert (pos + neg == n) == nonsingular
    # determinant sign is (-1)^neg when nonsingular
    if nonsingular:
        assert (bareiss_det(m) > 0) == (neg % 2 == 0)


def test_newton_power_sums_example():
    assert newton_power_sums(Poly.parse("x^2-3*x+2"), 5) == [2, 3, 5, 9, 17]


@settings(max_examples=60)
@given(st.lists(st.integers(-5, 5), min_size=1, max_size=7), st.integers(1, 5))
def test_newton_matches_power_sum_series(low, lead):
    f = Poly(low + [lead])
    assert newton_power_sums(f, 15) == series_expand(power_sum_series(f), 15)


def test_newton_needs_positive_degree():
    with pytest.raises(PreconditionError):
        newton_power_sums([3], 4)
