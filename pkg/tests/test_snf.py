import pytest
from hypothesis import given, settings, strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors as sympy_invariant_factors

from fermatcycles.snf import determinant, is_smith_diagonal, matmul, smith_normal_form


def check_decomposition(A):
    sf = smith_normal_form(A)
    assert matmul(matmul(sf.U, A), sf.V) == sf.diagonal_matrix()
    assert abs(determinant(sf.U)) == 1
    assert abs(determinant(sf.V)) == 1
    assert is_smith_diagonal(sf.diagonal)
    return sf


def sympy_diagonal(A):
    # sympy returns the full list of invariant factors, zeros included
    return tuple(int(x) for x in sympy_invariant_factors(Matrix(A), domain=ZZ) if x != 0)


def test_known_example():
    A = [[12, 6, 4, 8], [3, 9, 6, 12], [2, 16, 14, 28], [20, 10, 10, 20]]
    sf = check_decomposition(A)
    assert sf.diagonal == (1, 10, 30)
    assert sf.invariant_factors() == (10, 30)


@pytest.mark.parametrize("A", [
    [[0, 0], [0, 0]],
    [[1]],
    [[2, 4, 4], [-6, 6, 12], [10, -4, -16]],
    [[0, 2], [3, 0]],
    [[6], [10], [15]],
    [[4, 6, 10]],
])
def test_small_cases_against_sympy(A):
    sf = check_decomposition(A)
    assert sf.diagonal == sympy_diagonal(A)


def test_empty_shapes():
    assert smith_normal_form([]).rank == 0
    assert smith_normal_form([[]]).rank == 0


matrices = st.integers(1, 6).flatmap(
    lambda m: st.integers(1, 6).flatmap(
        lambda n: st.lists(
            st.lists(st.integers(-30, 30), min_size=n, max_size=n),
            min_size=m, max_size=m,
        )
    )
)


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_random_matrices_against_sympy(A):
    sf = check_decomposition(A)
    assert sf.diagonal == sympy_diagonal(A)


def test_determinant():
    assert determinant([[2, 0], [0, 3]]) == 6
    assert determinant([[0, 1], [1, 0]]) == -1
    assert determinant([[1, 2, 3], [4, 5, 6], [7, 8, 10]]) == -3
    assert determinant([[1, 2], [2, 4]]) == 0
