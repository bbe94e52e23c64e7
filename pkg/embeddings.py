#!/usr/bin/env python3
"""
Explicit Embeddings

Block embeddings between the classical algebras, each certified as an
injective bracket-preserving map whose images satisfy the target's defining
relation:
1. sp(n) -> so(2n,2n), M -> diag(M, -M^T)
2. sp(n) + sp(1) -> so(2n,2n), the sp(1) factor acting through W0(a, b, c)
3. sp(n) + sp(1) -> sp(n+1) on complementary symplectic coordinate pairs
4. sp(n) -> sl(2n), sp(n) -> gl(2n) and gl(2n) -> so(2n,2n)

Also the symmetric splitting sp(n+1) = sp(n) + sp(1) + m and the Killing
rescaling constants on the three summands.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import classical
import repmod
from exactmat import Matrix, Signature, block_diagonal, from_blocks, rank, signature
from liealg import (
    Certificate, Counterexample, LinearAlgebraMap, MatLieAlgebra, MatrixSpan,
    SubBasis, certify_homomorphism, centralizer_in, direct_sum, proportionality,
    symmetric_pair_check,
)

logger = logging.getLogger(__name__)


@dataclass
class Embedding:
    """Certified injective homomorphism; factor_dims splits the source basis"""
    map: LinearAlgebraMap
    certificate: Certificate
    factor_dims: Tuple[int, ...] = ()

    @property
    def source(self) -> MatLieAlgebra:
        return self.map.source

    @property
    def target(self) -> MatLieAlgebra:
        return self.map.target

    @property
    def images(self) -> List[Matrix]:
        return self.map.images

    def factor_images(self, index: int) -> List[Matrix]:
        dims = self.factor_dims or (self.source.dim,)
        start = sum(dims[:index])
        return self.map.images[start:start + dims[index]]


def certify_embedding(phi: LinearAlgebraMap, factor_dims: Tuple[int, ...] = ()) -> Embedding:
    """Homomorphism + injectivity certificate plus the target's defining relation"""
    certificate = certify_homomorphism(phi)
    if certificate.passed:
        for index, image in enumerate(phi.images):
            if not phi.target.satisfies_defining_relation(image):
                certificate = Certificate(certificate.name, False, certificate.evidence,
                                          Counterexample("defining_relation", (index,),
                                                         detail=f"image {index} violates M^T J + J M = 0"))
                break
        else:
            certificate.evidence["defining_relation"] = True
    if certificate.passed:
        logger.debug(f"✓ {certificate.name}")
    else:
        logger.warning(f"✗ {certificate.name}: {certificate.counterexample}")
    return Embedding(phi, certificate, factor_dims)


def _sp_image_in_so(M: Matrix) -> Matrix:
    # [[A, B, 0, 0], [C, -A^T, 0, 0], [0, 0, -A^T, -C], [0, 0, -B, A]]
    return block_diagonal([M, -M.T])


def w0_pattern(n: int, a=0, b=0, c=0) -> Matrix:
    """Element of so(2n,2n) commuting with the embedded sp(n)"""
    I = Matrix.identity(n)
    Z = Matrix.zeros(n)
    return from_blocks([
        [I.scale(a), Z, Z, I.scale(b)],
        [Z, I.scale(a), I.scale(-b), Z],
        [Z, I.scale(-c), I.scale(-a), Z],
        [I.scale(c), Z, Z, I.scale(-a)],
    ])


def embed_sp_in_so(n: int) -> Embedding:
    source = classical.sp_algebra(n)
    target = classical.so_split_algebra(2 * n)
    images = [_sp_image_in_so(M) for M in source.basis]
    return certify_embedding(LinearAlgebraMap(source, target, images))


def embed_sp_sp1_in_so(n: int) -> Embedding:
    """sp(n) as above; the sp(1) basis (h, e, f) goes to W0(1,0,0), W0(0,1,0), W0(0,0,1)"""
    sp_n = classical.sp_algebra(n)
    sp_1 = classical.sp_algebra(1)
    source = direct_sum(sp_n, sp_1)
    target = classical.so_split_algebra(2 * n)
    images = [_sp_image_in_so(M) for M in sp_n.basis]
    images += [w0_pattern(n, 1, 0, 0), w0_pattern(n, 0, 1, 0), w0_pattern(n, 0, 0, 1)]
    return certify_embedding(LinearAlgebraMap(source, target, images), (sp_n.dim, sp_1.dim))


def _relabel(M: Matrix, size: int, index_map: Sequence[int]) -> Matrix:
    return Matrix.from_sparse(size, size, [(index_map[i], index_map[j], v) for i, j, v in M.nonzeros])


def embed_sp_sp1_in_sp_succ(n: int) -> Embedding:
    """
    sp(n) acts on coordinates 0..n-1 and n+1..2n, sp(1) on the pair (n, 2n+1)
    of the 2n+2 coordinates of sp(n+1).
    """
    sp_n = classical.sp_algebra(n)
    sp_1 = classical.sp_algebra(1)
    source = direct_sum(sp_n, sp_1)
    target = classical.sp_algebra(n + 1)
    size = 2 * n + 2
    outer = [i if i < n else i + 1 for i in range(2 * n)]
    inner = [n, 2 * n + 1]
    images = [_relabel(M, size, outer) for M in sp_n.basis]
    images += [_relabel(M, size, inner) for M in sp_1.basis]
    return certify_embedding(LinearAlgebraMap(source, target, images), (sp_n.dim, sp_1.dim))


def embed_sp_in_sl(n: int) -> Embedding:
    source = classical.sp_algebra(n)
    target = classical.sl_algebra(2 * n)
    return certify_embedding(LinearAlgebraMap(source, target, list(source.basis)))


def embed_sp_in_gl(n: int) -> Embedding:
    source = classical.sp_algebra(n)
    target = classical.gl_algebra(2 * n)
    return certify_embedding(LinearAlgebraMap(source, target, list(source.basis)))


def embed_gl_in_so(n: int) -> Embedding:
    """gl(2n) -> so(2n,2n), X -> diag(X, -X^T)"""
    source = classical.gl_algebra(2 * n)
    target = classical.so_split_algebra(2 * n)
    images = [block_diagonal([X, -X.T]) for X in source.basis]
    return certify_embedding(LinearAlgebraMap(source, target, images))


def as_sub_basis(parent: MatLieAlgebra, elements: Sequence[Matrix]) -> SubBasis:
    """Index list into parent.basis when every element is a basis element"""
    lookup: Dict[Matrix, int] = {b: i for i, b in enumerate(parent.basis)}
    indices = [lookup.get(X) for X in elements]
    if all(i is not None for i in indices):
        return indices
    return list(elements)


def factors_commute(emb: Embedding) -> Certificate:
    """All cross brackets between the two factor images vanish"""
    first, second = emb.factor_images(0), emb.factor_images(1)
    for i, X in enumerate(first):
        for j, Y in enumerate(second):
            product = X @ Y - Y @ X
            if not product.is_zero():
                return Certificate("factors commute", False,
                                   counterexample=Counterexample("cross_bracket", (i, j),
                                                                 product.first_difference(Matrix.zeros(*product.shape))))
    return Certificate("factors commute", True, {"cross_brackets": len(first) * len(second)})


def centralizer_matches_w0(n: int, centralizer: Sequence[Matrix]) -> Certificate:
    """span(centralizer) = {W0(a, b, c)}"""
    patterns = [w0_pattern(n, 1, 0, 0), w0_pattern(n, 0, 1, 0), w0_pattern(n, 0, 0, 1)]
    size = 4 * n
    found = MatrixSpan(centralizer, (size, size))
    expected = MatrixSpan(patterns)
    for index, X in enumerate(centralizer):
        if not expected.contains(X):
            return Certificate("centralizer = W0 pattern", False,
                               counterexample=Counterexample("outside_pattern", (index,)))
    for index, W in enumerate(patterns):
        if not found.contains(W):
            return Certificate("centralizer = W0 pattern", False,
                               counterexample=Counterexample("pattern_missing", (index,)))
    return Certificate("centralizer = W0 pattern", True, {"dim": len(centralizer)})


def nullcone_check(n: int) -> Certificate:
    """
    The two R^2n summands of R^4n under the embedded sp(n) are invariant and
    totally isotropic for J.
    """
    emb = embed_sp_in_so(n)
    J = classical.so_split_form(2 * n).matrix
    halves = (list(range(2 * n)), list(range(2 * n, 4 * n)))
    for label, coords in zip(("first", "second"), halves):
        outside = [i for i in range(4 * n) if i not in coords]
        for index, image in enumerate(emb.images):
            if not image.submatrix(outside, coords).is_zero():
                return Certificate("nullcone", False,
                                   counterexample=Counterexample("not_invariant", (index,), detail=label))
        if not J.submatrix(coords, coords).is_zero():
            return Certificate("nullcone", False, counterexample=Counterexample("not_isotropic", detail=label))
    return Certificate("nullcone", True, {"summand_dim": 2 * n})


@dataclass
class SymmetricSplit:
    """sp(n+1) = (sp(n) + sp(1)) + m with the Killing form restricted to m"""
    parent: MatLieAlgebra
    embedding: Embedding
    subalgebra: List[Matrix]
    complement: List[Matrix]
    killing_on_complement: Matrix
    certificate: Certificate
    complement_signature: Signature
    basis_rank: int

    @property
    def n(self) -> int:
        return self.parent.ambient_size // 2 - 1


def symmetric_split(n: int) -> SymmetricSplit:
    emb = embed_sp_sp1_in_sp_succ(n)
    parent = emb.target
    sub = as_sub_basis(parent, emb.images)
    certificate = symmetric_pair_check(parent, sub)
    complement = certificate.evidence["complement"]
    m_rows = parent.coordinate_rows(complement)
    gram = parent.killing.restrict(m_rows)
    combined = parent.coordinate_rows(emb.images) + m_rows
    split = SymmetricSplit(
        parent=parent,
        embedding=emb,
        subalgebra=list(emb.images),
        complement=complement,
        killing_on_complement=gram,
        certificate=certificate,
        complement_signature=signature(gram),
        basis_rank=rank(Matrix.from_rows(combined)),
    )
    logger.info(f"Split of {parent.name}: subalgebra {len(split.subalgebra)}, "
                f"complement {len(complement)}, signature {split.complement_signature}")
    return split


@dataclass
class SchurConstants:
    """Killing form of sp(n+1) on each summand as a multiple of a reference form"""
    a_n: Optional[Fraction]
    a_1: Optional[Fraction]
    a_0: Optional[Fraction]
    cross_terms_zero: Certificate
    failures: Dict[str, Counterexample] = field(default_factory=dict)
    reference_form: Optional[Matrix] = None

    @property
    def passed(self) -> bool:
        return (not self.failures and self.cross_terms_zero.passed
                and None not in (self.a_n, self.a_1, self.a_0))


def normalize_first_entry(B: Matrix) -> Matrix:
    """Scale so the first nonzero gram entry (row-major) equals 1"""
    first = next(v for v in B.entries if v)
    return B.scale(1 / first)


def reference_complement_form(split: SymmetricSplit) -> Tuple[Matrix, int]:
    """Normalized invariant symmetric form on m and the dimension of that form space"""
    rho = repmod.restriction_representation(split.parent, split.embedding, "adjoint")
    coords = split.parent.coordinate_rows(split.complement)
    rho_m = repmod.subrepresentation(rho, coords)
    forms = repmod.invariant_bilinear_forms(rho_m, "symmetric")
    if not forms:
        raise RuntimeError("No invariant symmetric form on the complement")
    return normalize_first_entry(forms[0]), len(forms)


def schur_constants(n: int, split: Optional[SymmetricSplit] = None) -> SchurConstants:
    split = split or symmetric_split(n)
    parent = split.parent
    K = parent.killing
    emb = split.embedding
    rows_n = parent.coordinate_rows(emb.factor_images(0))
    rows_1 = parent.coordinate_rows(emb.factor_images(1))
    rows_0 = parent.coordinate_rows(split.complement)
    failures: Dict[str, Counterexample] = {}

    def scalar(label: str, restricted: Matrix, reference: Matrix) -> Optional[Fraction]:
        c, diff = proportionality(restricted, reference)
        if c is None:
            failures[label] = Counterexample("proportionality", entry=diff, detail=label)
        return c

    a_n = scalar("a_n", K.restrict(rows_n), classical.sp_algebra(n).killing.gram)
    a_1 = scalar("a_1", K.restrict(rows_1), classical.sp_algebra(1).killing.gram)
    reference, form_count = reference_complement_form(split)
    if form_count != 1:
        logger.warning(f"Complement carries {form_count} invariant symmetric forms")
    a_0 = scalar("a_0", K.restrict(rows_0), reference)

    cross = Certificate("cross terms zero", True, {"blocks": 3})
    for label, left, right in (("sp(n) x sp(1)", rows_n, rows_1),
                               ("sp(n) x m", rows_n, rows_0),
                               ("sp(1) x m", rows_1, rows_0)):
        block = K.restrict(left, right)
        if not block.is_zero():
            cross = Certificate("cross terms zero", False, counterexample=Counterexample(
                "cross_term", entry=block.first_difference(Matrix.zeros(*block.shape)), detail=label))
            break
    constants = SchurConstants(a_n, a_1, a_0, cross, failures, reference)
    logger.info(f"Killing rescaling for n={n}: a_n={a_n}, a_1={a_1}, a_0={a_0}")
    return constants
