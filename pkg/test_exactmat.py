#!/usr/bin/env python3
"""
Exact linear algebra tests

Unit checks for the Matrix type plus hypothesis properties:
rref idempotence, kernels, congruence P^T S P = D and signature invariance.
sympy serves as an independent oracle for rref and rank.
"""

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from exactmat import (
    DimensionError, Matrix, NotSymmetricError, Signature, block_diagonal, combine,
    congruent_diagonalize, format_rational, inverse, kernel_basis, rank, rref,
    signature, solve_homogeneous, solve_linear,
)

rationals = st.fractions(min_value=-4, max_value=4, max_denominator=3)
sparse_rationals = st.one_of(st.just(Fraction(0)), rationals)


@st.composite
def matrices(draw, max_rows=6, max_cols=6):
    rows = draw(st.integers(1, max_rows))
    cols = draw(st.integers(1, max_cols))
    entries = draw(st.lists(sparse_rationals, min_size=rows * cols, max_size=rows * cols))
    return Matrix(rows, cols, tuple(entries))


@st.composite
def symmetric_matrices(draw, max_size=10):
    size = draw(st.integers(1, max_size))
    upper = draw(st.lists(sparse_rationals, min_size=size * (size + 1) // 2,
                          max_size=size * (size + 1) // 2))
    data = [[Fraction(0)] * size for _ in range(size)]
    values = iter(upper)
    for i in range(size):
        for j in range(i, size):
            data[i][j] = data[j][i] = next(values)
    return Matrix.from_rows(data)


@st.composite
def unitriangular(draw, size):
    data = [[Fraction(int(i == j)) for j in range(size)] for i in range(size)]
    for i in range(size):
        for j in range(i + 1, size):
            data[i][j] = draw(rationals)
    return Matrix.from_rows(data)


def to_sympy(M: Matrix) -> sympy.Matrix:
    return sympy.Matrix(M.rows, M.cols, [sympy.Rational(x.numerator, x.denominator) for x in M.entries])


def from_sympy(S: sympy.Matrix) -> Matrix:
    return Matrix(S.rows, S.cols, tuple(Fraction(int(x.p), int(x.q)) for x in S))


# Matrix basics

def test_shape_mismatch_rejected():
    with pytest.raises(DimensionError):
        Matrix(2, 2, (Fraction(1),) * 3)
    with pytest.raises(DimensionError):
        Matrix.identity(2) @ Matrix.identity(3)
    with pytest.raises(DimensionError):
        Matrix.identity(2) + Matrix.zeros(2, 3)


def test_sparse_product_matches_dense():
    A = Matrix.from_rows([[1, 2, 0], [0, 0, 3]])
    B = Matrix.from_rows([[1, 0], [Fraction(1, 2), 1], [0, -1]])
    assert A @ B == Matrix.from_rows([[2, 2], [0, -3]])


def test_block_helpers():
    A = Matrix.from_rows([[1, 2], [3, 4]])
    D = block_diagonal([A, Matrix.identity(1)])
    assert D.shape == (3, 3)
    assert D[2, 2] == 1 and D[0, 1] == 2 and D[0, 2] == 0
    assert combine([2, -1], [A, Matrix.identity(2)]) == Matrix.from_rows([[1, 4], [6, 7]])


def test_format_rational_always_has_denominator():
    assert format_rational(Fraction(3)) == "3/1"
    assert format_rational(Fraction(-1, 2)) == "-1/2"
    assert format_rational(Fraction(6, 4)) == "3/2"


# Elimination

def test_rref_known_case():
    M = Matrix.from_rows([[2, 4, 2], [1, 2, 3]])
    R, pivots, r = rref(M)
    assert r == 2
    assert pivots == (0, 2)
    assert R == Matrix.from_rows([[1, 2, 0], [0, 0, 1]])


def test_solve_linear_consistent_and_inconsistent():
    A = Matrix.from_rows([[1, 1], [1, -1]])
    assert solve_linear(A, [3, 1]) == (Fraction(2), Fraction(1))
    singular = Matrix.from_rows([[1, 1], [2, 2]])
    assert solve_linear(singular, [1, 3]) is None
    with pytest.raises(DimensionError):
        solve_linear(A, [1, 2, 3])


def test_inverse_and_singular():
    M = Matrix.from_rows([[2, 1], [1, 1]])
    assert M @ inverse(M) == Matrix.identity(2)
    with pytest.raises(ValueError):
        inverse(Matrix.from_rows([[1, 2], [2, 4]]))


@pytest.mark.parametrize("rows", [
    [[1, 0], [-1, 1]],
    [[0, 1], [1, 0]],
    [[2, 0, 1], [1, 3, 0], [0, -1, 1]],
    [[1, 2, 3], [0, 1, 4], [5, 6, 0]],
])
def test_inverse_needs_elimination(rows):
    M = Matrix.from_rows(rows)
    inv = inverse(M)
    assert M @ inv == Matrix.identity(M.rows)
    assert inv @ M == Matrix.identity(M.rows)


def test_solve_homogeneous_commuting_with_diagonal():
    d = Matrix.diagonal([1, 2])
    candidates = [Matrix.elementary(2, i, j) for i in range(2) for j in range(2)]
    solutions = solve_homogeneous(candidates, [lambda X: X @ d - d @ X])
    assert len(solutions) == 2
    assert all(X.is_diagonal() for X in solutions)


@settings(max_examples=200, deadline=None)
@given(matrices())
def test_rref_idempotent_and_matches_sympy(M):
    R, pivots, r = rref(M)
    assert rref(R).R == R
    expected_R, expected_pivots = to_sympy(M).rref()
    assert R == from_sympy(expected_R)
    assert pivots == tuple(expected_pivots)
    assert r == rank(M) == to_sympy(M).rank()


@settings(max_examples=100, deadline=None)
@given(matrices())
def test_kernel_basis_is_a_kernel(M):
    kernel = kernel_basis(M)
    assert len(kernel) == M.cols - rank(M)
    for v in kernel:
        assert all(x == 0 for x in M.apply(v))


# Symmetric forms

def test_zero_diagonal_pivot_is_repaired():
    S = Matrix.from_rows([[0, 1], [1, 0]])
    D, P = congruent_diagonalize(S)
    assert P.T @ S @ P == D
    assert signature(S) == Signature(1, 1, 0)


def test_congruence_rejects_asymmetric():
    with pytest.raises(NotSymmetricError):
        congruent_diagonalize(Matrix.from_rows([[0, 1], [0, 0]]))


def test_signature_of_split_form():
    J = Matrix.from_rows([[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]])
    assert signature(J).as_tuple() == (2, 2, 0)
    assert str(signature(Matrix.diagonal([1, 0, -3]))) == "(1,1,1)"


@settings(max_examples=200, deadline=None)
@given(symmetric_matrices())
def test_congruence_diagonalizes(S):
    D, P = congruent_diagonalize(S)
    assert D.is_diagonal()
    assert P.T @ S @ P == D
    assert rank(P) == S.rows


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_signature_is_congruence_invariant(data):
    S = data.draw(symmetric_matrices(max_size=8))
    Q = data.draw(unitriangular(S.rows))
    sig = signature(S)
    assert signature(Q.T @ S @ Q) == sig
    assert sig.dimension == S.rows
    assert sig.positive + sig.negative == rank(S)
