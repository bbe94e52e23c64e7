#!/usr/bin/env python3
"""Tests for the classical algebra constructors and C_n root data"""

import pytest

import classical
from exactmat import Matrix


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_dimensions(n):
    assert classical.sp_algebra(n).dim == n * (2 * n + 1)
    assert classical.so_split_algebra(n).dim == n * (2 * n - 1)
    assert classical.sl_algebra(n + 1).dim == (n + 1) ** 2 - 1
    assert classical.gl_algebra(n).dim == n * n


def test_structural_dimensions_at_small_ranks():
    assert [classical.sp_algebra(n).dim for n in (3, 4, 5)] == [21, 36, 55]
    assert [classical.so_split_algebra(2 * n).dim for n in (3, 4, 5)] == [66, 120, 190]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_basis_satisfies_defining_relation(n):
    sp_form = classical.sp_form(n)
    so_form = classical.so_split_form(n)
    assert all(classical.satisfies_defining_relation(M, sp_form) for M in classical.sp_algebra(n).basis)
    assert all(classical.satisfies_defining_relation(M, so_form) for M in classical.so_split_algebra(n).basis)


@pytest.mark.parametrize("m", [3, 4, 6])
def test_traceless_diagonal_is_in_sl(m):
    sl = classical.sl_algebra(m)
    X = Matrix.diagonal([1, -1] + [0] * (m - 2))
    assert sl.coordinates(X) is not None
    assert sl.coordinates(Matrix.diagonal([1] + [0] * (m - 1))) is None


def test_forms():
    J = classical.so_split_form(2)
    Jt = classical.sp_form(2)
    assert J.symmetric and J.matrix.is_symmetric()
    assert not Jt.symmetric and Jt.matrix.T == -Jt.matrix
    assert J.size == Jt.size == 4


def test_identity_is_not_symplectic():
    assert not classical.satisfies_defining_relation(Matrix.identity(2), classical.sp_form(1))


def test_rank_must_be_positive():
    with pytest.raises(ValueError):
        classical.sp_algebra(0)
    with pytest.raises(ValueError):
        classical.so_split_form(0)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_root_datum_counts(n):
    rd = classical.sp_root_datum(n)
    assert rd.rank == n
    assert len(rd.positive_root_vectors) == n * n
    assert len(rd.simple_roots) == n
    assert rd.rho == tuple(range(n, 0, -1))
    sp = classical.sp_algebra(n)
    assert all(sp.coordinates(E) is not None for E, _ in rd.positive_root_vectors)


def test_simple_roots_of_c3():
    rd = classical.sp_root_datum(3)
    roots = [rd.positive_root_vectors[i][1] for i in rd.simple_roots]
    assert roots == [(1, -1, 0), (0, 1, -1), (0, 0, 2)]


def test_wrong_root_is_rejected():
    rd = classical.sp_root_datum(1)
    E, _ = rd.positive_root_vectors[0]
    with pytest.raises(ValueError):
        classical.RootDatum(rd.cartan_basis, [(E, (1,))], [0], (1,), (1,))


def test_direct_sum_root_datum():
    rd = classical.direct_sum_root_datum(classical.sp_root_datum(2), classical.sp_root_datum(1))
    assert rd.ranks == (2, 1)
    assert rd.rank == 3
    assert rd.rho == (2, 1, 1)
    assert len(rd.simple_root_vectors()) == 3
    assert rd.positive_root_vectors[-1][1] == (0, 0, 2)
    assert all(h.shape == (6, 6) for h in rd.cartan_basis)
