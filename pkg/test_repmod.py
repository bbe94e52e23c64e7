#!/usr/bin/env python3
"""
Representation tests

Invariant forms, weights, highest-weight decomposition, dimension formulas,
bivectors and the minimal orthogonal representation audit.
"""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

import classical
import embeddings
import repmod
from exactmat import DimensionError, Matrix, combine, rank, signature
from liealg import DegenerateFormError


def _summands(summands):
    return sorted((s.highest_weight, s.multiplicity, s.dim_each) for s in summands)


# Construction and forms

def test_standard_module_forms(sp2):
    rho = repmod.standard_representation(sp2)
    assert rho.degree == 4
    assert repmod.invariant_bilinear_forms(rho, "symmetric") == []
    skew = repmod.invariant_bilinear_forms(rho, "skew")
    assert len(skew) == 1
    J = classical.sp_form(2).matrix
    c = next(v for v in J.entries if v) / next(v for v in skew[0].entries if v)
    assert skew[0].scale(c) == J


def test_trivial_module_has_one_symmetric_form(sp1):
    forms = repmod.invariant_bilinear_forms(repmod.trivial_representation(sp1), "symmetric")
    assert forms == [Matrix.identity(1)]


def test_unknown_symmetry_rejected(sp1):
    with pytest.raises(ValueError):
        repmod.invariant_bilinear_forms(repmod.trivial_representation(sp1), "hermitian")


def test_forms_are_invariant(sp_in_so_2):
    rho = repmod.restriction_representation(sp_in_so_2.target, sp_in_so_2, "standard")
    forms = repmod.invariant_bilinear_forms(rho, "symmetric")
    assert len(forms) == 1
    for B in forms:
        assert all((A.T @ B + B @ A).is_zero() for A in rho.action)
    assert signature(forms[0]).as_tuple() == (4, 4, 0)


def test_representation_shape_checked(sp1):
    with pytest.raises(DimensionError):
        repmod.Representation(sp1, 2, [Matrix.identity(2)])
    with pytest.raises(DimensionError):
        repmod.Representation(sp1, 2, [Matrix.identity(3)] * 3)


def test_restriction_kind_checked(sp_in_so_2):
    with pytest.raises(ValueError):
        repmod.restriction_representation(sp_in_so_2.target, sp_in_so_2, "coadjoint")


def test_adjoint_restriction_degree(sp_in_so_2):
    rho = repmod.restriction_representation(sp_in_so_2.target, sp_in_so_2, "adjoint")
    assert rho.degree == 28
    assert rho.homomorphism_violation() is None


def test_broken_action_is_not_a_homomorphism(sp1):
    rho = repmod.Representation(sp1, 2, [X.scale(2) for X in sp1.basis])
    assert rho.homomorphism_violation() == (0, 1)
    with pytest.raises(ValueError):
        rho.verify()


def test_subrepresentation_requires_invariance(sp_in_so_2):
    rho = repmod.restriction_representation(sp_in_so_2.target, sp_in_so_2, "standard")
    first_half = [tuple(Fraction(int(i == j)) for i in range(8)) for j in range(4)]
    sub = repmod.subrepresentation(rho, first_half)
    assert sub.degree == 4
    assert sub.action == list(sp_in_so_2.source.basis)
    mixed = [tuple(Fraction(int(i in (0, 4))) for i in range(8))]
    with pytest.raises(ValueError):
        repmod.subrepresentation(rho, mixed)


# Weights and decomposition

def test_standard_weights(sp2):
    weights = repmod.weight_decomposition(repmod.standard_representation(sp2), classical.sp_root_datum(2))
    assert weights.total == 4
    assert sorted(weights.weights) == [((-1, 0), 1), ((0, -1), 1), ((0, 1), 1), ((1, 0), 1)]


def test_adjoint_sl2_weights(sp1):
    weights = repmod.weight_decomposition(repmod.adjoint_representation(sp1), classical.sp_root_datum(1))
    assert weights.weights == [((2,), 1), ((0,), 1), ((-2,), 1)]


def test_nilpotent_cartan_action_raises(sp1):
    N = Matrix.from_rows([[0, 1], [0, 0]])
    rho = repmod.Representation(sp1, 2, [N, Matrix.zeros(2), Matrix.zeros(2)])
    with pytest.raises(repmod.WeightError):
        repmod.weight_decomposition(rho, classical.sp_root_datum(1))


def test_accounting_failure_raises(sp1):
    rho = repmod.Representation(sp1, 2, [Matrix.identity(2), Matrix.zeros(2), Matrix.zeros(2)])
    with pytest.raises(repmod.DecompositionError):
        repmod.decompose(rho, classical.sp_root_datum(1))


def test_adjoint_so_decomposition_n2(sp_in_so_2):
    rho = repmod.restriction_representation(sp_in_so_2.target, sp_in_so_2, "adjoint")
    rd = classical.sp_root_datum(2)
    summands = repmod.decompose(rho, rd)
    assert _summands(summands) == [((0, 0), 3, 1), ((1, 1), 3, 5), ((2, 0), 1, 10)]
    assert repmod.weight_decomposition(rho, rd).multiplicity((0, 0)) == 8


def test_adjoint_so_decomposition_n3():
    emb = embeddings.embed_sp_in_so(3)
    rho = repmod.restriction_representation(emb.target, emb, "adjoint")
    assert rho.degree == 66
    summands = repmod.decompose(rho, classical.sp_root_datum(3))
    assert _summands(summands) == [((0, 0, 0), 3, 1), ((1, 1, 0), 3, 14), ((2, 0, 0), 1, 21)]
    assert sum(s.multiplicity * s.dim_each for s in summands) == 66


def test_doubled_standard_is_reducible(sp_in_so_2):
    rho = repmod.restriction_representation(sp_in_so_2.target, sp_in_so_2, "standard")
    cert = repmod.irreducibility_certificate(rho, classical.sp_root_datum(2))
    assert not cert
    assert _summands(cert.summands) == [((1, 0), 2, 4)]
    assert cert.commutant_dim == 4


def test_standard_is_irreducible(sp2):
    cert = repmod.irreducibility_certificate(repmod.standard_representation(sp2), classical.sp_root_datum(2))
    assert cert.irreducible
    assert cert.commutant_dim == 1


def test_complement_is_irreducible(split_2):
    rho = repmod.restriction_representation(split_2.parent, split_2.embedding, "adjoint")
    m = repmod.subrepresentation(rho, split_2.parent.coordinate_rows(split_2.complement))
    rd = classical.direct_sum_root_datum(classical.sp_root_datum(2), classical.sp_root_datum(1))
    cert = repmod.irreducibility_certificate(m, rd)
    assert cert.irreducible
    assert _summands(cert.summands) == [((1, 0, 1), 1, 8)]
    assert cert.commutant_dim == 1


def test_adjoint_sl_decomposition():
    emb = embeddings.embed_sp_in_sl(2)
    rho = repmod.restriction_representation(emb.target, emb, "adjoint")
    assert _summands(repmod.decompose(rho, classical.sp_root_datum(2))) == [((1, 1), 1, 5), ((2, 0), 1, 10)]


def test_adjoint_gl_adds_a_trivial():
    emb = embeddings.embed_sp_in_gl(2)
    rho = repmod.restriction_representation(emb.target, emb, "adjoint")
    assert _summands(repmod.decompose(rho, classical.sp_root_datum(2))) == [
        ((0, 0), 1, 1), ((1, 1), 1, 5), ((2, 0), 1, 10)]


# Dimension formulas

def test_weyl_dim_examples():
    assert repmod.weyl_dim(3, (0, 0, 0)) == 1
    assert repmod.weyl_dim(3, (1, 0, 0)) == 6
    assert repmod.weyl_dim(3, (1, 1, 0)) == 14
    assert repmod.weyl_dim(3, (1, 1, 1)) == 14
    assert repmod.weyl_dim(1, (4,)) == 5


def test_weyl_dim_rejects_non_dominant():
    with pytest.raises(repmod.NotDominantError):
        repmod.weyl_dim(2, (0, 1))
    with pytest.raises(repmod.NotDominantError):
        repmod.weyl_dim(2, (1, -1))
    with pytest.raises(repmod.NotDominantError):
        repmod.weyl_dim(2, (1,))


def test_weyl_dim_for_product_datum():
    rd = classical.direct_sum_root_datum(classical.sp_root_datum(3), classical.sp_root_datum(1))
    assert repmod.weyl_dim_for(rd, (1, 0, 0, 1)) == 12


def test_binomial_examples():
    assert repmod.fundamental_dim_binomial(3, 1) == 6
    assert repmod.fundamental_dim_binomial(4, 2) == 27
    assert repmod.fundamental_dim_binomial(4, 4) == 42
    with pytest.raises(ValueError):
        repmod.fundamental_dim_binomial(3, 4)
    with pytest.raises(ValueError):
        repmod.fundamental_dim_binomial(3, 0)


@pytest.mark.parametrize("n", range(1, 9))
def test_weyl_matches_binomial(n):
    for j in range(1, n + 1):
        assert repmod.weyl_dim(n, repmod.fundamental_weight(n, j)) == repmod.fundamental_dim_binomial(n, j)


def test_lemma_4n_audit():
    assert [v.dimension for v in repmod.lemma_4n_audit(3)] == [14, 14]
    assert [v.dimension for v in repmod.lemma_4n_audit(4)] == [27, 48, 42]
    assert all(v.passed for n in (3, 4, 5) for v in repmod.lemma_4n_audit(n))
    with pytest.raises(ValueError):
        repmod.lemma_4n_audit(2)


@pytest.mark.parametrize("n", range(3, 9))
def test_closed_forms(n):
    assert all(repmod.closed_form_checks(n).values())


# Bivectors

def test_wedge2_rotation_generator():
    images = repmod.wedge2_to_so(2, Matrix.identity(2))
    assert images == {(0, 1): Matrix.from_rows([[0, -1], [1, 0]])}


def test_wedge2_rejects_degenerate_form():
    with pytest.raises(DegenerateFormError):
        repmod.wedge2_to_so(2, Matrix.diagonal([1, 0]))


@pytest.mark.parametrize("d", [3, 4, 6])
def test_wedge2_images_span_skew_space(d):
    B = Matrix.diagonal([1 if i % 2 else -1 for i in range(d)])
    images = repmod.wedge2_to_so(d, B)
    assert len(images) == d * (d - 1) // 2
    assert all((X.T @ B + B @ X).is_zero() for X in images.values())
    assert rank(Matrix.from_rows([X.entries for X in images.values()])) == d * (d - 1) // 2


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2 ** 32 - 1))
def test_wedge2_is_equivariant(seed):
    rng = random.Random(seed)
    d = 4
    B = classical.so_split_form(2).matrix
    skew = list(repmod.wedge2_to_so(d, B).values())
    X = combine([rng.randint(-3, 3) for _ in skew], skew)
    u = [Fraction(rng.randint(-3, 3)) for _ in range(d)]
    v = [Fraction(rng.randint(-3, 3)) for _ in range(d)]
    left = repmod.bivector_image(B, X.apply(u), v) + repmod.bivector_image(B, u, X.apply(v))
    phi = repmod.bivector_image(B, u, v)
    assert left == X @ phi - phi @ X


# Minimal orthogonal representation

def test_minimal_orthogonal_audit_n3():
    report = repmod.minimal_orthogonal_audit(3)
    assert report.passed
    assert report.minimal_dimension == 12
    assert report.standard_symmetric_forms == 0
    assert report.standard_skew_forms == 1
    assert report.doubled_form_signature.as_tuple() == (6, 6, 0)
    assert set(report.padded_radicals) == set(range(1, 6))
    assert all(r == 6 for r in report.padded_radicals.values())


def test_minimal_orthogonal_audit_needs_rank_3():
    with pytest.raises(ValueError):
        repmod.minimal_orthogonal_audit(2)
