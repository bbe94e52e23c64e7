#!/usr/bin/env python3
"""
Representations and Module Decomposition

Finite-dimensional representations of matrix Lie algebras:
1. Restrictions along embeddings (standard and adjoint)
2. Invariant symmetric / skew bilinear forms and commutants
3. Weight spaces and highest-weight splitting into irreducibles
4. Weyl and binomial dimension formulas
5. The minimal orthogonal representation audit for sp(n,R)
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import TYPE_CHECKING, Dict, List, Optional, Sequence, Tuple

from classical import RootDatum, Weight
from exactmat import (
    ZERO, DimensionError, Matrix, Signature, Vector, as_rational, block_diagonal, combine,
    commutator, kernel_basis, rank, signature, solve_homogeneous, solve_linear,
)
from liealg import DegenerateFormError, MatLieAlgebra, bracket

if TYPE_CHECKING:
    from embeddings import Embedding

logger = logging.getLogger(__name__)


class WeightError(RuntimeError):
    """Cartan action is not diagonalizable with integer eigenvalues"""


class DecompositionError(RuntimeError):
    """Summand dimensions do not account for the whole module"""


class NotDominantError(ValueError):
    """A weight outside the dominant chamber was given"""


@dataclass
class Representation:
    """Action of an algebra on R^degree, one matrix per basis element"""
    algebra: MatLieAlgebra
    degree: int
    action: List[Matrix]
    name: str = ""

    def __post_init__(self):
        if len(self.action) != self.algebra.dim:
            raise DimensionError(f"{len(self.action)} action matrices for a {self.algebra.dim}-dim algebra")
        for A in self.action:
            if A.shape != (self.degree, self.degree):
                raise DimensionError(f"Action matrix of shape {A.shape} for degree {self.degree}")

    def operator(self, X: Matrix) -> Matrix:
        """Action of an arbitrary element of the algebra"""
        coords = self.algebra.coordinates(X)
        if coords is None:
            raise ValueError(f"Element is not in {self.algebra.name}")
        return combine(coords, self.action, shape=(self.degree, self.degree))

    def homomorphism_violation(self) -> Optional[Tuple[int, int]]:
        """First pair with action([b_i,b_j]) != [action(b_i), action(b_j)]"""
        sc = self.algebra.structure_constants
        dim = self.algebra.dim
        for i in range(dim):
            for j in range(i + 1, dim):
                coords = sc.bracket_coordinates(i, j)
                expected = combine([coords.get(k, ZERO) for k in range(dim)], self.action,
                                   shape=(self.degree, self.degree))
                if expected != commutator(self.action[i], self.action[j]):
                    return i, j
        return None

    def verify(self) -> "Representation":
        bad = self.homomorphism_violation()
        if bad is not None:
            raise ValueError(f"{self.name or 'representation'} is not a homomorphism at pair {bad}")
        return self


@dataclass
class WeightDecomposition:
    """Weights with multiplicities; bases holds each weight space as column vectors"""
    weights: List[Tuple[Weight, int]]
    total: int
    bases: Dict[Weight, List[Vector]] = field(default_factory=dict, repr=False)

    def multiplicity(self, weight: Weight) -> int:
        return dict(self.weights).get(tuple(weight), 0)


@dataclass(frozen=True)
class IrreducibleSummand:
    highest_weight: Weight
    multiplicity: int
    dim_each: int

    def __str__(self) -> str:
        return f"hw {self.highest_weight} x{self.multiplicity} (dim {self.dim_each})"


@dataclass
class IrreducibilityCertificate:
    irreducible: bool
    summands: List[IrreducibleSummand]
    commutant_dim: int

    def __bool__(self) -> bool:
        return self.irreducible


# Construction

def restriction_representation(target: MatLieAlgebra, emb: "Embedding", kind: str) -> Representation:
    """
    Module of emb.source obtained through emb: 'standard' acts by the image
    matrices, 'adjoint' by bracket on target's basis coordinates.
    """
    if emb.map.target is not target and emb.map.target.name != target.name:
        raise ValueError(f"Embedding lands in {emb.map.target.name}, not {target.name}")
    images = emb.map.images
    if kind == "standard":
        rep = Representation(emb.map.source, target.ambient_size, list(images),
                             f"{target.name} standard")
    elif kind == "adjoint":
        action = []
        for image in images:
            columns = []
            for b in target.basis:
                coords = target.coordinates(bracket(image, b))
                if coords is None:
                    raise ValueError(f"Bracket leaves {target.name}")
                columns.append(coords)
            action.append(Matrix.from_columns(columns))
        rep = Representation(emb.map.source, target.dim, action, f"{target.name} adjoint")
    else:
        raise ValueError(f"Unknown representation kind '{kind}'")
    logger.debug(f"Built {rep.name} restricted to {rep.algebra.name}, degree {rep.degree}")
    return rep.verify()


def standard_representation(L: MatLieAlgebra) -> Representation:
    return Representation(L, L.ambient_size, list(L.basis), f"{L.name} standard")


def adjoint_representation(L: MatLieAlgebra) -> Representation:
    sc = L.structure_constants
    return Representation(L, L.dim, [sc.ad_matrix(i) for i in range(L.dim)], f"{L.name} adjoint")


def trivial_representation(L: MatLieAlgebra, degree: int = 1) -> Representation:
    return Representation(L, degree, [Matrix.zeros(degree)] * L.dim, f"trivial^{degree}")


def direct_sum_representation(first: Representation, second: Representation) -> Representation:
    if first.algebra is not second.algebra:
        raise ValueError("Direct sum needs representations of the same algebra")
    action = [block_diagonal([a, b]) for a, b in zip(first.action, second.action)]
    return Representation(first.algebra, first.degree + second.degree, action,
                          f"{first.name} + {second.name}")


def subrepresentation(rho: Representation, vectors: Sequence[Sequence]) -> Representation:
    """Action on the invariant subspace spanned by vectors, in their coordinates"""
    V = Matrix.from_columns(vectors)
    if rank(V) < len(vectors):
        raise ValueError("Subspace vectors are dependent")
    action = []
    for index, A in enumerate(rho.action):
        AV = A @ V
        columns = []
        for j in range(AV.cols):
            x = solve_linear(V, AV.column(j))
            if x is None:
                raise ValueError(f"Subspace is not invariant under basis element {index}")
            columns.append(x)
        action.append(Matrix.from_columns(columns, len(vectors)))
    return Representation(rho.algebra, len(vectors), action, f"{rho.name} (sub {len(vectors)})")


# Forms and commutants

def _symmetric_basis(d: int, sign: int) -> List[Matrix]:
    basis = []
    for i in range(d):
        for j in range(i, d):
            if i == j:
                if sign > 0:
                    basis.append(Matrix.elementary(d, i, i))
                continue
            basis.append(Matrix.from_sparse(d, d, [(i, j, 1), (j, i, sign)]))
    return basis


def invariant_bilinear_forms(rho: Representation, symmetry: str) -> List[Matrix]:
    """Basis of {B : A^T B + B A = 0 for all action matrices, B^T = +-B}"""
    if symmetry not in ("symmetric", "skew"):
        raise ValueError(f"Unknown symmetry '{symmetry}'")
    candidates = _symmetric_basis(rho.degree, 1 if symmetry == "symmetric" else -1)
    constraints = [(lambda B, A=A: A.T @ B + B @ A) for A in rho.action]
    forms = solve_homogeneous(candidates, constraints)
    logger.debug(f"{rho.name}: {len(forms)} invariant {symmetry} forms")
    return forms


def commutant_dimension(rho: Representation) -> int:
    d = rho.degree
    candidates = [Matrix.elementary(d, i, j) for i in range(d) for j in range(d)]
    constraints = [(lambda T, A=A: T @ A - A @ T) for A in rho.action]
    return len(solve_homogeneous(candidates, constraints))


def common_radical(forms: Sequence[Matrix]) -> List[Vector]:
    """Vectors killed by every form; nonzero means every combination is degenerate"""
    if not forms:
        return []
    stacked = Matrix.from_rows([row for B in forms for row in B.to_rows()])
    return kernel_basis(stacked)


# Weights

def _gershgorin_bound(H: Matrix) -> int:
    bound = ZERO
    for support in H.row_support:
        bound = max(bound, sum((abs(v) for _, v in support), ZERO))
    return int(bound) + 1


def weight_decomposition(rho: Representation, rd: RootDatum) -> WeightDecomposition:
    """Simultaneous integer eigenspaces of the Cartan action"""
    d = rho.degree
    identity = [tuple(Fraction(int(i == j)) for i in range(d)) for j in range(d)]
    spaces: List[Tuple[Weight, List[Vector]]] = [((), identity)]
    for index, h in enumerate(rd.cartan_basis):
        H = rho.operator(h)
        bound = _gershgorin_bound(H)
        refined = []
        for prefix, basis in spaces:
            V = Matrix.from_columns(basis)
            HV = H @ V
            found = 0
            for value in range(-bound, bound + 1):
                shifted = HV - V.scale(value)
                kernel = kernel_basis(shifted)
                if kernel:
                    vectors = [V.apply(x) for x in kernel]
                    refined.append((prefix + (value,), vectors))
                    found += len(vectors)
            if found != len(basis):
                raise WeightError(
                    f"Cartan element {index} is not diagonalizable over the integers "
                    f"on a {len(basis)}-dim subspace (found {found})")
        spaces = refined
    spaces.sort(key=lambda item: item[0], reverse=True)
    weights = [(w, len(vs)) for w, vs in spaces]
    return WeightDecomposition(weights, d, dict(spaces))


# Dimension formulas

def _check_dominant(n: int, weight: Weight):
    if len(weight) != n:
        raise NotDominantError(f"Weight {weight} does not have {n} coordinates")
    if any(weight[i] < weight[i + 1] for i in range(n - 1)) or (n and weight[-1] < 0):
        raise NotDominantError(f"Weight {weight} is not dominant")


def weyl_dim(n: int, weight: Weight) -> int:
    """Weyl dimension formula for C_n in epsilon coordinates"""
    weight = tuple(weight)
    _check_dominant(n, weight)
    rho = tuple(range(n, 0, -1))
    shifted = tuple(a + b for a, b in zip(weight, rho))
    result = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            result *= Fraction(shifted[i] - shifted[j], rho[i] - rho[j])
            result *= Fraction(shifted[i] + shifted[j], rho[i] + rho[j])
        result *= Fraction(shifted[i], rho[i])
    if result.denominator != 1:
        raise ArithmeticError(f"Weyl dimension of {weight} is not an integer: {result}")
    return int(result)


def weyl_dim_for(rd: RootDatum, weight: Weight) -> int:
    """Product of the per-factor Weyl dimensions"""
    total = 1
    start = 0
    for r in rd.ranks:
        total *= weyl_dim(r, tuple(weight[start:start + r]))
        start += r
    return total


def fundamental_weight(n: int, j: int) -> Weight:
    return tuple(1 if i < j else 0 for i in range(n))


def fundamental_dim_binomial(n: int, j: int) -> int:
    """C(2n, j) - C(2n, j-2), with C(m, p) = 0 for negative p"""
    if not 1 <= j <= n:
        raise ValueError(f"j must lie in 1..{n}, got {j}")
    return comb(2 * n, j) - (comb(2 * n, j - 2) if j >= 2 else 0)


# Decomposition

def _is_dominant(rd: RootDatum, weight: Weight) -> bool:
    start = 0
    for r in rd.ranks:
        try:
            _check_dominant(r, tuple(weight[start:start + r]))
        except NotDominantError:
            return False
        start += r
    return True


def decompose(rho: Representation, rd: RootDatum,
              weights: Optional[WeightDecomposition] = None) -> List[IrreducibleSummand]:
    """
    Multiplicity of the highest weight lambda is the dimension of the vectors
    of weight lambda annihilated by every simple positive root vector.
    """
    weights = weights or weight_decomposition(rho, rd)
    raising = [rho.operator(E) for E in rd.simple_root_vectors()]
    summands = []
    for weight, _ in weights.weights:
        basis = weights.bases[weight]
        V = Matrix.from_columns(basis)
        if raising:
            stacked = Matrix.from_rows([row for E in raising for row in (E @ V).to_rows()])
            multiplicity = len(kernel_basis(stacked))
        else:
            multiplicity = len(basis)
        if not multiplicity:
            continue
        if not _is_dominant(rd, weight):
            raise DecompositionError(f"Highest weight vector of non-dominant weight {weight}")
        summands.append(IrreducibleSummand(weight, multiplicity, weyl_dim_for(rd, weight)))
    accounted = sum(s.multiplicity * s.dim_each for s in summands)
    if accounted != rho.degree:
        raise DecompositionError(f"Summands account for {accounted} of degree {rho.degree}")
    logger.debug(f"{rho.name}: " + ", ".join(str(s) for s in summands))
    return summands


def irreducibility_certificate(rho: Representation, rd: RootDatum) -> IrreducibilityCertificate:
    summands = decompose(rho, rd)
    irreducible = len(summands) == 1 and summands[0].multiplicity == 1
    return IrreducibilityCertificate(irreducible, summands, commutant_dimension(rho))


# Bivectors

def bivector_image(B: Matrix, u: Sequence, v: Sequence) -> Matrix:
    """u ^ v -> (w -> B(u,w) v - B(v,w) u)"""
    d = B.rows
    u = [as_rational(x) for x in u]
    v = [as_rational(x) for x in v]
    Bu = B.apply(u)
    Bv = B.apply(v)
    return Matrix(d, d, tuple(v[i] * Bu[j] - u[i] * Bv[j] for i in range(d) for j in range(d)))


def wedge2_to_so(dim: int, B: Matrix) -> Dict[Tuple[int, int], Matrix]:
    """Images of the basis bivectors e_i ^ e_j, i < j"""
    if B.shape != (dim, dim) or not B.is_symmetric():
        raise ValueError("wedge2_to_so needs a symmetric form of the given dimension")
    if rank(B) < dim:
        raise DegenerateFormError("Form is degenerate", kernel_basis(B))
    unit = [tuple(Fraction(int(i == j)) for i in range(dim)) for j in range(dim)]
    return {(i, j): bivector_image(B, unit[i], unit[j]) for i in range(dim) for j in range(i + 1, dim)}


# Audits

@dataclass
class DimensionVerdict:
    j: int
    dimension: int
    bound: int
    passed: bool


def lemma_4n_audit(n: int) -> List[DimensionVerdict]:
    """dim of the varpi_j module exceeds 4n for 2 <= j <= n (needs n >= 3)"""
    if n < 3:
        raise ValueError(f"The 4n bound needs n >= 3, got {n}")
    verdicts = []
    for j in range(2, n + 1):
        dimension = fundamental_dim_binomial(n, j)
        verdicts.append(DimensionVerdict(j, dimension, 4 * n, dimension > 4 * n))
    return verdicts


def closed_form_checks(n: int) -> Dict[str, bool]:
    """C(2n,2) - 1 = n(2n-1) - 1 and C(2n,3) - C(2n,1) = 2n(2n^2-3n-2)/3"""
    checks = {"j=2": fundamental_dim_binomial(n, 2) == n * (2 * n - 1) - 1 if n >= 2 else True}
    if n >= 3:
        checks["j=3"] = 3 * fundamental_dim_binomial(n, 3) == 2 * n * (2 * n * n - 3 * n - 2)
    return checks


@dataclass
class MinimalOrthogonalReport:
    n: int
    fundamental_dims: List[DimensionVerdict]
    standard_symmetric_forms: int
    standard_skew_forms: int
    padded_radicals: Dict[int, int]
    doubled_form_signature: Optional[Signature]
    doubled_symmetric_forms: int
    minimal_dimension: Optional[int]
    passed: bool


def minimal_orthogonal_audit(n: int) -> MinimalOrthogonalReport:
    """
    Three pillars for m(sp(n)) = 4n:
    (a) fundamental modules other than the trivial and standard ones exceed 4n
    (b) the standard module plus k < 2n trivial summands has no nondegenerate
        invariant symmetric form (common radical check)
    (c) R^4n = R^2n + R^2n under the embedded sp(n) carries one of signature (2n,2n)
    """
    if n < 3:
        raise ValueError(f"The minimal orthogonal audit needs n >= 3, got {n}")
    from embeddings import embed_sp_in_so

    verdicts = lemma_4n_audit(n)
    pillar_a = all(v.passed for v in verdicts)

    emb = embed_sp_in_so(n)
    L = emb.source
    standard = standard_representation(L)
    std_sym = invariant_bilinear_forms(standard, "symmetric")
    std_skew = invariant_bilinear_forms(standard, "skew")

    padded_radicals = {}
    for k in range(1, 2 * n):
        padded = direct_sum_representation(standard, trivial_representation(L, k))
        forms = invariant_bilinear_forms(padded, "symmetric")
        padded_radicals[k] = len(common_radical(forms)) if forms else padded.degree
    pillar_b = not std_sym and all(r > 0 for r in padded_radicals.values())

    doubled = restriction_representation(emb.target, emb, "standard")
    doubled_forms = invariant_bilinear_forms(doubled, "symmetric")
    sig = signature(doubled_forms[0]) if len(doubled_forms) == 1 else None
    pillar_c = sig is not None and sig.as_tuple() == (2 * n, 2 * n, 0)

    passed = pillar_a and pillar_b and pillar_c
    report = MinimalOrthogonalReport(
        n=n,
        fundamental_dims=verdicts,
        standard_symmetric_forms=len(std_sym),
        standard_skew_forms=len(std_skew),
        padded_radicals=padded_radicals,
        doubled_form_signature=sig,
        doubled_symmetric_forms=len(doubled_forms),
        minimal_dimension=4 * n if passed else None,
        passed=passed,
    )
    logger.info(f"{'✓' if passed else '✗'} minimal orthogonal dimension for sp({n}): {report.minimal_dimension}")
    return report
