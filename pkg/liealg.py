#!/usr/bin/env python3
"""
Matrix Lie Algebras

Lie algebras realized as spans of square rational matrices under the
commutator bracket:
- structure constants and the Killing form
- centralizers and Killing-orthogonal complements
- homomorphism and symmetric-pair certificates
"""

import itertools
import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from exactmat import (
    ZERO, DimensionError, Matrix, Vector, block_diagonal, combine, commutator,
    format_rational, inverse, kernel_basis, rank, rref, solve_homogeneous,
)

logger = logging.getLogger(__name__)

SubBasis = Union[Sequence[int], Sequence[Matrix]]

EXHAUSTIVE_MAX_DIM = 40
RANDOM_TRIPLES = 1000


class ClosureError(RuntimeError):
    """The span of the basis is not closed under the bracket"""

    def __init__(self, algebra: str, pair: Tuple[int, int]):
        super().__init__(f"[b{pair[0]}, b{pair[1]}] is not in the span of {algebra}")
        self.pair = pair


class DegenerateFormError(RuntimeError):
    """A bilinear form restricted to a subspace is degenerate"""

    def __init__(self, message: str, radical: Sequence):
        super().__init__(f"{message} (radical dimension {len(radical)})")
        self.radical = list(radical)


class AmbientSizeError(DimensionError):
    """A matrix does not have the ambient size of the algebra"""


@dataclass
class Counterexample:
    """First violation found by a certificate check"""
    kind: str
    indices: Tuple[int, ...] = ()
    entry: Optional[Tuple[int, int, Fraction, Fraction]] = None
    detail: str = ""

    def to_dict(self) -> Dict:
        data = {"kind": self.kind, "indices": list(self.indices), "detail": self.detail}
        if self.entry is not None:
            row, col, expected, actual = self.entry
            data["entry"] = {"row": row, "col": col, "expected": format_rational(expected),
                             "actual": format_rational(actual)}
        return data


@dataclass
class Certificate:
    """Outcome of a structural check with evidence or the first counterexample"""
    name: str
    passed: bool
    evidence: Dict = field(default_factory=dict)
    counterexample: Optional[Counterexample] = None

    def __bool__(self) -> bool:
        return self.passed


def bracket(X: Matrix, Y: Matrix) -> Matrix:
    """Commutator XY - YX"""
    if not (X.is_square and Y.is_square) or X.shape != Y.shape:
        raise DimensionError(f"Bracket of {X.shape} and {Y.shape} matrices")
    return commutator(X, Y)


class MatrixSpan:
    """
    Span of linearly independent matrices with a cached coordinate map.

    Coordinates are read from d pivot positions where the basis matrix is
    invertible, so a membership test costs one small product plus a
    reconstruction check.
    """

    def __init__(self, basis: Sequence[Matrix], shape: Optional[Tuple[int, int]] = None):
        self.basis = list(basis)
        if self.basis:
            shape = self.basis[0].shape
            if any(b.shape != shape for b in self.basis):
                raise AmbientSizeError("Basis matrices must share one shape")
        if shape is None:
            raise DimensionError("An empty span needs an explicit shape")
        self.shape = shape

    @property
    def dim(self) -> int:
        return len(self.basis)

    @cached_property
    def _coordinate_map(self) -> Tuple[Tuple[int, ...], Matrix]:
        if not self.basis:
            return (), Matrix.zeros(0, 0)
        stacked = Matrix.from_rows([b.entries for b in self.basis])
        _, positions, r = rref(stacked)
        if r < len(self.basis):
            raise ValueError(f"Basis is linearly dependent (rank {r} < {len(self.basis)})")
        square = stacked.submatrix(list(range(len(self.basis))), positions).T
        return positions, inverse(square)

    def coordinates(self, X: Matrix) -> Optional[Vector]:
        """Exact coordinates of X, or None when X is not in the span"""
        if X.shape != self.shape:
            raise AmbientSizeError(f"Expected {self.shape}, got {X.shape}")
        if not self.basis:
            return () if X.is_zero() else None
        positions, inv = self._coordinate_map
        coords = inv.apply([X.entries[p] for p in positions])
        if combine(coords, self.basis) != X:
            return None
        return coords

    def contains(self, X: Matrix) -> bool:
        return self.coordinates(X) is not None

    def element(self, coords: Sequence) -> Matrix:
        return combine(coords, self.basis, shape=self.shape)


class MatLieAlgebra:
    """Lie algebra of m x m matrices given by an independent basis"""

    def __init__(self, name: str, basis: Sequence[Matrix], ambient_size: Optional[int] = None,
                 defining_form: Optional[Matrix] = None):
        basis = list(basis)
        if basis:
            ambient_size = basis[0].rows
        if ambient_size is None:
            raise DimensionError(f"{name}: empty basis needs an ambient size")
        for b in basis:
            if b.shape != (ambient_size, ambient_size):
                raise AmbientSizeError(f"{name}: basis element of shape {b.shape}, ambient {ambient_size}")
        self.name = name
        self.ambient_size = ambient_size
        self.basis = basis
        self.defining_form = defining_form
        self.span = MatrixSpan(basis, (ambient_size, ambient_size))
        # Independence is checked when the coordinate map is built
        self.span._coordinate_map

    def __repr__(self) -> str:
        return f"MatLieAlgebra({self.name}, dim={self.dim}, ambient={self.ambient_size})"

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coordinates(self, X: Matrix) -> Optional[Vector]:
        return self.span.coordinates(X)

    def element(self, coords: Sequence) -> Matrix:
        return self.span.element(coords)

    def satisfies_defining_relation(self, X: Matrix) -> bool:
        """X^T F + F X = 0 for the defining form F, when one is attached"""
        if self.defining_form is None:
            return True
        F = self.defining_form
        return (X.T @ F + F @ X).is_zero()

    def resolve(self, sub: SubBasis) -> List[Matrix]:
        """Turn index lists or explicit matrices into matrices of this algebra"""
        sub = list(sub)
        if sub and isinstance(sub[0], int):
            return [self.basis[i] for i in sub]
        return sub

    def coordinate_rows(self, sub: SubBasis) -> List[Vector]:
        sub = list(sub)
        if sub and isinstance(sub[0], int):
            return [tuple(Fraction(int(k == i)) for k in range(self.dim)) for i in sub]
        rows = []
        for index, X in enumerate(sub):
            coords = self.coordinates(X)
            if coords is None:
                raise ValueError(f"Element {index} is not in {self.name}")
            rows.append(coords)
        return rows

    @cached_property
    def structure_constants(self) -> "StructureConstants":
        return _compute_structure_constants(self)

    @cached_property
    def killing(self) -> "AlgebraForm":
        return _compute_killing_form(self)


@dataclass
class StructureConstants:
    """Sparse tensor c with [b_i, b_j] = sum_k c[i][j][k] b_k"""
    dim: int
    table: Dict[Tuple[int, int], Dict[int, Fraction]]

    def __getitem__(self, index: Tuple[int, int, int]) -> Fraction:
        i, j, k = index
        return self.table.get((i, j), {}).get(k, ZERO)

    def bracket_coordinates(self, i: int, j: int) -> Dict[int, Fraction]:
        return self.table.get((i, j), {})

    def is_zero(self) -> bool:
        return not any(self.table.values())

    def ad_matrix(self, i: int) -> Matrix:
        """Matrix of ad(b_i) in the basis: column k holds [b_i, b_k]"""
        items = [(l, k, v) for k in range(self.dim) for l, v in self.bracket_coordinates(i, k).items()]
        return Matrix.from_sparse(self.dim, self.dim, items)

    def antisymmetry_violation(self) -> Optional[Tuple[int, int, int]]:
        for i in range(self.dim):
            for j in range(i, self.dim):
                for k in set(self.bracket_coordinates(i, j)) | set(self.bracket_coordinates(j, i)):
                    if self[i, j, k] != -self[j, i, k]:
                        return i, j, k
        return None

    def jacobi_residual(self, i: int, j: int, k: int) -> Dict[int, Fraction]:
        """Coordinates of [[b_i,b_j],b_k] + [[b_j,b_k],b_i] + [[b_k,b_i],b_j]"""
        total: Dict[int, Fraction] = {}
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            for l, coeff in self.bracket_coordinates(a, b).items():
                for m, v in self.bracket_coordinates(l, c).items():
                    total[m] = total.get(m, ZERO) + coeff * v
        return {m: v for m, v in total.items() if v}


def structure_constants(L: MatLieAlgebra) -> StructureConstants:
    return L.structure_constants


def _compute_structure_constants(L: MatLieAlgebra) -> StructureConstants:
    logger.debug(f"Computing structure constants of {L.name} (dim {L.dim})")
    table: Dict[Tuple[int, int], Dict[int, Fraction]] = {}
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            product = bracket(L.basis[i], L.basis[j])
            if product.is_zero():
                continue
            coords = L.coordinates(product)
            if coords is None:
                raise ClosureError(L.name, (i, j))
            sparse = {k: v for k, v in enumerate(coords) if v}
            table[(i, j)] = sparse
            table[(j, i)] = {k: -v for k, v in sparse.items()}
    return StructureConstants(L.dim, table)


def sample_triples(dim: int, exhaustive_max_dim: int = EXHAUSTIVE_MAX_DIM,
                   samples: int = RANDOM_TRIPLES, seed: int = 0) -> Iterable[Tuple[int, int, int]]:
    """All index triples for small algebras, a seeded random sample otherwise"""
    if dim <= exhaustive_max_dim:
        return itertools.product(range(dim), repeat=3)
    rng = random.Random(seed)
    return [(rng.randrange(dim), rng.randrange(dim), rng.randrange(dim)) for _ in range(samples)]


def jacobi_violations(sc: StructureConstants, triples: Iterable[Tuple[int, int, int]]) -> List[Tuple[int, int, int]]:
    return [t for t in triples if sc.jacobi_residual(*t)]


def check_structure_constants(L: MatLieAlgebra, exhaustive_max_dim: int = EXHAUSTIVE_MAX_DIM,
                              samples: int = RANDOM_TRIPLES, seed: int = 0) -> Certificate:
    """Antisymmetry plus Jacobi on all (or sampled) triples"""
    sc = L.structure_constants
    bad = sc.antisymmetry_violation()
    if bad is not None:
        return Certificate("structure_constants", False,
                           counterexample=Counterexample("antisymmetry", bad))
    triples = list(sample_triples(L.dim, exhaustive_max_dim, samples, seed))
    for t in triples:
        if sc.jacobi_residual(*t):
            return Certificate("structure_constants", False,
                               {"triples_checked": len(triples)},
                               Counterexample("jacobi", t))
    return Certificate("structure_constants", True, {"triples_checked": len(triples)})


@dataclass
class AlgebraForm:
    """Symmetric bilinear form on an algebra, given by its gram matrix"""
    algebra: MatLieAlgebra
    gram: Matrix

    def __post_init__(self):
        if not self.gram.is_symmetric():
            raise ValueError(f"Gram matrix on {self.algebra.name} is not symmetric")

    def restrict(self, rows: Sequence[Vector], other: Optional[Sequence[Vector]] = None) -> Matrix:
        """Gram matrix between two families given by coordinate rows"""
        other = rows if other is None else other
        left = Matrix.from_rows(rows) if rows else Matrix.zeros(0, self.algebra.dim)
        right = Matrix.from_rows(other) if other else Matrix.zeros(0, self.algebra.dim)
        return left @ self.gram @ right.T

    def is_ad_invariant(self, exhaustive_max_dim: int = EXHAUSTIVE_MAX_DIM,
                        samples: int = RANDOM_TRIPLES, seed: int = 0) -> bool:
        """K([b_i,b_j], b_k) + K(b_j, [b_i,b_k]) = 0"""
        sc = self.algebra.structure_constants
        g = self.gram
        for i, j, k in sample_triples(self.algebra.dim, exhaustive_max_dim, samples, seed):
            total = sum((v * g[l, k] for l, v in sc.bracket_coordinates(i, j).items()), ZERO)
            total += sum((v * g[j, l] for l, v in sc.bracket_coordinates(i, k).items()), ZERO)
            if total:
                return False
        return True


def killing_form(L: MatLieAlgebra) -> AlgebraForm:
    return L.killing


def _compute_killing_form(L: MatLieAlgebra) -> AlgebraForm:
    """gram[i][j] = trace(ad b_i o ad b_j) by double contraction of c"""
    sc = L.structure_constants
    d = L.dim
    # ad_i as {(row l, col k): c[i][k][l]}
    ads = []
    for i in range(d):
        entries = {}
        for k in range(d):
            for l, v in sc.bracket_coordinates(i, k).items():
                entries[(l, k)] = v
        ads.append(entries)
    gram = [[ZERO] * d for _ in range(d)]
    for i in range(d):
        ad_i = ads[i]
        for j in range(i, d):
            ad_j = ads[j]
            total = ZERO
            for (l, k), v in ad_i.items():
                w = ad_j.get((k, l))
                if w:
                    total += v * w
            gram[i][j] = gram[j][i] = total
    return AlgebraForm(L, Matrix.from_rows(gram))


def trace_form(L: MatLieAlgebra) -> Matrix:
    """Gram matrix of (X, Y) -> trace(XY)"""
    d = L.dim
    rows = [[(L.basis[i] @ L.basis[j]).trace() for j in range(d)] for i in range(d)]
    return Matrix.from_rows(rows)


def proportionality(A: Matrix, B: Matrix) -> Tuple[Optional[Fraction], Optional[Tuple[int, int, Fraction, Fraction]]]:
    """
    Scalar c with A = c * B.

    Returns (c, None) on success, (None, offending entry) otherwise. The
    scalar is read from the first nonzero entry of B.
    """
    if A.shape != B.shape:
        raise DimensionError(f"Cannot compare {A.shape} with {B.shape}")
    ref = next((index for index, v in enumerate(B.entries) if v), None)
    if ref is None:
        diff = A.first_difference(B)
        return (None, diff) if diff else (None, None)
    c = A.entries[ref] / B.entries[ref]
    diff = A.first_difference(B.scale(c))
    if diff is not None:
        return None, diff
    return c, None


def centralizer_in(L: MatLieAlgebra, S: Sequence[Matrix]) -> List[Matrix]:
    """Basis of {X in L : [X, s] = 0 for all s in S}"""
    for s in S:
        if s.shape != (L.ambient_size, L.ambient_size):
            raise AmbientSizeError(f"Element of shape {s.shape} for ambient size {L.ambient_size}")
    constraints = [(lambda X, s=s: bracket(X, s)) for s in S]
    return solve_homogeneous(L.basis, constraints)


@dataclass
class LinearAlgebraMap:
    """Linear map between algebras fixed by the images of the source basis"""
    source: MatLieAlgebra
    target: MatLieAlgebra
    images: List[Matrix]

    def __post_init__(self):
        if len(self.images) != self.source.dim:
            raise DimensionError(f"{len(self.images)} images for a {self.source.dim}-dim source")

    def __call__(self, X: Matrix) -> Matrix:
        coords = self.source.coordinates(X)
        if coords is None:
            raise ValueError(f"Element is not in {self.source.name}")
        return self.apply_coordinates(coords)

    def apply_coordinates(self, coords: Sequence) -> Matrix:
        size = self.target.ambient_size
        return combine(coords, self.images, shape=(size, size))

    def image_coordinates(self) -> List[Optional[Vector]]:
        return [self.target.coordinates(img) for img in self.images]


def certify_homomorphism(phi: LinearAlgebraMap) -> Certificate:
    """Bracket preservation on all basis pairs plus injectivity"""
    name = f"homomorphism {phi.source.name} -> {phi.target.name}"
    coords = phi.image_coordinates()
    for index, c in enumerate(coords):
        if c is None:
            return Certificate(name, False, counterexample=Counterexample(
                "image_outside_target", (index,), detail=f"image of b{index} not in {phi.target.name}"))
    sc = phi.source.structure_constants
    pairs = 0
    for i in range(phi.source.dim):
        for j in range(i + 1, phi.source.dim):
            pairs += 1
            expected = phi.apply_coordinates(
                [sc[i, j, k] for k in range(phi.source.dim)])
            actual = bracket(phi.images[i], phi.images[j])
            diff = expected.first_difference(actual)
            if diff is not None:
                return Certificate(name, False, {"pairs_checked": pairs},
                                   Counterexample("bracket", (i, j), diff,
                                                  f"phi([b{i},b{j}]) != [phi(b{i}),phi(b{j})]"))
    if phi.source.dim:
        kernel = kernel_basis(Matrix.from_rows(coords).T)
    else:
        kernel = []
    if kernel:
        return Certificate(name, False, {"pairs_checked": pairs},
                           Counterexample("injectivity", detail=f"kernel of dimension {len(kernel)}",
                                          indices=tuple(k for k, v in enumerate(kernel[0]) if v)))
    return Certificate(name, True, {"pairs_checked": pairs, "image_dim": phi.source.dim})


def killing_orthogonal_complement(L: MatLieAlgebra, H: SubBasis) -> List[Matrix]:
    """Basis of {X in L : K(X, h) = 0 for h in H}"""
    K = L.killing
    rows = L.coordinate_rows(H)
    if not rows:
        return list(L.basis)
    restricted = K.restrict(rows)
    radical = kernel_basis(restricted)
    if radical:
        vectors = [combine(v, L.resolve(H)) for v in radical]
        raise DegenerateFormError(f"Killing form of {L.name} is degenerate on the subspace", vectors)
    system = Matrix.from_rows(rows) @ K.gram
    return [L.element(v) for v in kernel_basis(system)]


def symmetric_pair_check(L: MatLieAlgebra, H: SubBasis) -> Certificate:
    """
    With m the Killing-orthogonal complement of H, check [H,H] in H,
    [H,m] in m and [m,m] in H; also record whether [m,m] spans H.
    """
    name = f"symmetric pair ({L.name}, {len(list(H))}-dim subalgebra)"
    h_basis = L.resolve(H)
    m_basis = killing_orthogonal_complement(L, H)
    shape = (L.ambient_size, L.ambient_size)
    h_span = MatrixSpan(h_basis, shape)
    m_span = MatrixSpan(m_basis, shape)

    checks = (("[H,H] in H", h_basis, h_basis, h_span),
              ("[H,m] in m", h_basis, m_basis, m_span),
              ("[m,m] in H", m_basis, m_basis, h_span))
    mm_coords: List[Vector] = []
    for label, left, right, span in checks:
        symmetric = left is right
        for i, X in enumerate(left):
            for j, Y in enumerate(right):
                if symmetric and j <= i:
                    continue
                coords = span.coordinates(bracket(X, Y))
                if coords is None:
                    return Certificate(name, False, {"complement_dim": len(m_basis)},
                                       Counterexample("inclusion", (i, j), detail=label))
                if label == "[m,m] in H":
                    mm_coords.append(coords)
    if mm_coords:
        spans = rank(Matrix.from_rows(mm_coords)) == len(h_basis)
    else:
        spans = not h_basis
    return Certificate(name, True, {
        "subalgebra_dim": len(h_basis),
        "complement_dim": len(m_basis),
        "mm_spans_subalgebra": spans,
        "complement": m_basis,
    })


def direct_sum(first: MatLieAlgebra, second: MatLieAlgebra, name: Optional[str] = None) -> MatLieAlgebra:
    """Block-diagonal realisation of first + second"""
    zero_first = Matrix.zeros(first.ambient_size)
    zero_second = Matrix.zeros(second.ambient_size)
    basis = [block_diagonal([b, zero_second]) for b in first.basis]
    basis += [block_diagonal([zero_first, b]) for b in second.basis]
    form = None
    if first.defining_form is not None and second.defining_form is not None:
        form = block_diagonal([first.defining_form, second.defining_form])
    return MatLieAlgebra(name or f"{first.name}+{second.name}", basis,
                         first.ambient_size + second.ambient_size, form)


def subalgebra(parent: MatLieAlgebra, elements: Sequence[Matrix], name: str) -> MatLieAlgebra:
    """Algebra spanned by elements of parent; closure is checked lazily"""
    return MatLieAlgebra(name, elements, parent.ambient_size, parent.defining_form)
