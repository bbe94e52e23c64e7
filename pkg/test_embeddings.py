#!/usr/bin/env python3
"""
Embedding and symmetric split tests

Certificates for every block embedding, the centralizer of sp(n) in
so(2n,2n), the splitting sp(n+1) = sp(n) + sp(1) + m and the Killing
rescaling constants.
"""

from fractions import Fraction

import pytest

import classical
import embeddings
from exactmat import Matrix
from liealg import LinearAlgebraMap, MatLieAlgebra, centralizer_in, symmetric_pair_check


@pytest.mark.parametrize("n", [1, 2, 3])
def test_sp_in_so_certified(n):
    emb = embeddings.embed_sp_in_so(n)
    assert emb.certificate.passed
    assert emb.certificate.evidence["defining_relation"]
    assert emb.source.dim == n * (2 * n + 1)
    assert emb.target.dim == 2 * n * (4 * n - 1)


def test_sp_in_so_dims_for_n1():
    emb = embeddings.embed_sp_in_so(1)
    assert len(emb.images) == 3
    assert emb.target.dim == 6


def test_sp_sp1_in_so(sp_in_so_2, sp_sp1_in_so_2):
    emb = sp_sp1_in_so_2
    assert emb.certificate.passed
    assert emb.factor_images(0) == sp_in_so_2.images
    assert len(emb.images) == 10 + 3
    assert embeddings.factors_commute(emb).passed
    centralizer = centralizer_in(emb.target, emb.factor_images(0))
    span = MatLieAlgebra("centralizer", centralizer)
    assert all(span.coordinates(X) is not None for X in emb.factor_images(1))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_sp_sp1_in_sp_succ(n):
    emb = embeddings.embed_sp_sp1_in_sp_succ(n)
    assert emb.certificate.passed
    assert emb.target.dim == (n + 1) * (2 * n + 3)
    commute = embeddings.factors_commute(emb)
    assert commute.passed
    assert commute.evidence["cross_brackets"] == 3 * n * (2 * n + 1)


@pytest.mark.parametrize("n", [2, 3])
def test_centralizer_in_sp_succ_is_zero(n):
    emb = embeddings.embed_sp_sp1_in_sp_succ(n)
    assert centralizer_in(emb.target, emb.images) == []


@pytest.mark.parametrize("n", [2, 3])
def test_centralizer_is_w0_pattern(n):
    emb = embeddings.embed_sp_in_so(n)
    centralizer = centralizer_in(emb.target, emb.images)
    assert len(centralizer) == 3
    assert embeddings.centralizer_matches_w0(n, centralizer).passed


def test_w0_pattern_rejects_foreign_element():
    cert = embeddings.centralizer_matches_w0(1, [Matrix.elementary(4, 0, 1)])
    assert not cert.passed
    assert cert.counterexample.kind == "outside_pattern"


def test_nullcone_halves():
    cert = embeddings.nullcone_check(2)
    assert cert.passed
    assert cert.evidence["summand_dim"] == 4


def test_symmetric_pairs_through_sl_and_gl():
    sl = embeddings.embed_sp_in_sl(2)
    assert sl.certificate.passed
    assert symmetric_pair_check(sl.target, sl.images).passed
    gl = embeddings.embed_gl_in_so(1)
    assert gl.certificate.passed
    assert symmetric_pair_check(gl.target, gl.images).passed
    assert embeddings.embed_sp_in_gl(2).certificate.passed


def test_sp3_lands_in_sl6():
    emb = embeddings.embed_sp_in_sl(3)
    assert emb.certificate.passed
    assert all(emb.target.coordinates(X) is not None for X in emb.images)
    assert symmetric_pair_check(emb.target, emb.images).passed


def test_defining_relation_violation_reported(sp1):
    # sp(1) basis is also a basis of a fake target carrying the so(1,1) form
    fake = MatLieAlgebra("fake", sp1.basis, 2, classical.so_split_form(1).matrix)
    emb = embeddings.certify_embedding(LinearAlgebraMap(sp1, fake, list(sp1.basis)))
    assert not emb.certificate.passed
    assert emb.certificate.counterexample.kind == "defining_relation"
    assert emb.certificate.counterexample.indices == (1,)


def test_sub_basis_is_index_list(split_2):
    indices = embeddings.as_sub_basis(split_2.parent, split_2.subalgebra)
    assert all(isinstance(i, int) for i in indices)
    assert len(indices) == 13


def test_symmetric_split_n2(split_2):
    assert len(split_2.complement) == 8
    assert split_2.n == 2
    assert split_2.certificate.passed
    assert split_2.certificate.evidence["mm_spans_subalgebra"]
    assert split_2.complement_signature.as_tuple() == (4, 4, 0)
    assert split_2.basis_rank == split_2.parent.dim == 21


def test_symmetric_split_n3():
    split = embeddings.symmetric_split(3)
    assert len(split.complement) == 12
    assert len(split.subalgebra) + len(split.complement) == 36
    assert split.complement_signature.as_tuple() == (6, 6, 0)


def test_normalize_first_entry():
    B = Matrix.from_rows([[0, 3], [3, 6]])
    assert embeddings.normalize_first_entry(B) == Matrix.from_rows([[0, 1], [1, 2]])


@pytest.mark.parametrize("n", [2, 3])
def test_schur_constants(n):
    constants = embeddings.schur_constants(n)
    assert constants.passed
    assert constants.a_n == Fraction(2 * n + 4, 2 * n + 2)
    assert constants.a_1 == Fraction(2 * n + 4, 4)
    assert constants.a_0 is not None and constants.a_0 != 0
    assert constants.cross_terms_zero.passed


def test_schur_reuses_split(split_2):
    constants = embeddings.schur_constants(2, split_2)
    assert constants.reference_form.shape == (8, 8)
    assert constants.a_n > 0 and constants.a_1 > 0
