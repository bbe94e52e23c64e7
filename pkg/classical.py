#!/usr/bin/env python3
"""
Classical Matrix Algebras

Constructors for sp(n,R), the split so(m,m), sl(m,R) and gl(m,R), plus the
Cartan subalgebra and positive root vectors of sp(n,R).

Basis conventions (sp and split so):
- A-block: E_ij embedded as diag(E_ij, -E_ji), all (i, j) in lexicographic order
- B-block generators (upper right), then C-block generators (lower left)
"""

import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from exactmat import Matrix, block_diagonal, commutator, from_blocks
from liealg import MatLieAlgebra

logger = logging.getLogger(__name__)

Weight = Tuple[int, ...]


@dataclass(frozen=True)
class JForm:
    """Defining matrix of a classical algebra: M^T J + J M = 0"""
    size: int
    matrix: Matrix
    symmetric: bool


def _check_rank(value: int, label: str):
    if value < 1:
        raise ValueError(f"{label} must be at least 1, got {value}")


def sp_form(n: int) -> JForm:
    """J~ = [[0, I_n], [-I_n, 0]]"""
    _check_rank(n, "n")
    I = Matrix.identity(n)
    Z = Matrix.zeros(n)
    return JForm(2 * n, from_blocks([[Z, I], [-I, Z]]), symmetric=False)


def so_split_form(m: int) -> JForm:
    """J = [[0, I_m], [I_m, 0]]"""
    _check_rank(m, "m")
    I = Matrix.identity(m)
    Z = Matrix.zeros(m)
    return JForm(2 * m, from_blocks([[Z, I], [I, Z]]), symmetric=True)


def satisfies_defining_relation(M: Matrix, form: JForm) -> bool:
    J = form.matrix
    return (M.T @ J + J @ M).is_zero()


def _unit(size: int, entries: Sequence[Tuple[int, int, int]]) -> Matrix:
    return Matrix.from_sparse(size, size, entries)


def sp_algebra(n: int) -> MatLieAlgebra:
    """sp(n,R): block matrices [[A, B], [C, -A^T]] with B, C symmetric"""
    _check_rank(n, "n")
    size = 2 * n
    basis = []
    for i in range(n):
        for j in range(n):
            basis.append(_unit(size, [(i, j, 1), (n + j, n + i, -1)]))
    for i in range(n):
        for j in range(i, n):
            basis.append(_unit(size, [(i, n + j, 1)] + ([(j, n + i, 1)] if i != j else [])))
    for i in range(n):
        for j in range(i, n):
            basis.append(_unit(size, [(n + i, j, 1)] + ([(n + j, i, 1)] if i != j else [])))
    algebra = MatLieAlgebra(f"sp({n})", basis, size, sp_form(n).matrix)
    logger.debug(f"Built {algebra.name} with dimension {algebra.dim}")
    return algebra


def so_split_algebra(m: int) -> MatLieAlgebra:
    """so(m,m) in split form: [[A0, B0], [C0, -A0^T]] with B0, C0 skew"""
    _check_rank(m, "m")
    size = 2 * m
    basis = []
    for i in range(m):
        for j in range(m):
            basis.append(_unit(size, [(i, j, 1), (m + j, m + i, -1)]))
    for i in range(m):
        for j in range(i + 1, m):
            basis.append(_unit(size, [(i, m + j, 1), (j, m + i, -1)]))
    for i in range(m):
        for j in range(i + 1, m):
            basis.append(_unit(size, [(m + i, j, 1), (m + j, i, -1)]))
    algebra = MatLieAlgebra(f"so({m},{m})", basis, size, so_split_form(m).matrix)
    logger.debug(f"Built {algebra.name} with dimension {algebra.dim}")
    return algebra


def gl_algebra(m: int) -> MatLieAlgebra:
    """gl(m,R) with the matrix units E_ij"""
    _check_rank(m, "m")
    basis = [Matrix.elementary(m, i, j) for i in range(m) for j in range(m)]
    return MatLieAlgebra(f"gl({m})", basis, m)


def sl_algebra(m: int) -> MatLieAlgebra:
    """sl(m,R): off-diagonal units, then E_ii - E_(i+1)(i+1)"""
    _check_rank(m, "m")
    basis = [Matrix.elementary(m, i, j) for i in range(m) for j in range(m) if i != j]
    basis += [_unit(m, [(i, i, 1), (i + 1, i + 1, -1)]) for i in range(m - 1)]
    return MatLieAlgebra(f"sl({m})", basis, m)


@dataclass
class RootDatum:
    """Cartan basis and positive root vectors with integer roots in epsilon coordinates"""
    cartan_basis: List[Matrix]
    positive_root_vectors: List[Tuple[Matrix, Weight]]
    simple_roots: List[int]
    rho: Weight
    ranks: Tuple[int, ...]

    def __post_init__(self):
        self.verify()

    @property
    def rank(self) -> int:
        return len(self.cartan_basis)

    def simple_root_vectors(self) -> List[Matrix]:
        return [self.positive_root_vectors[i][0] for i in self.simple_roots]

    def verify(self):
        """Cartan elements commute and every root vector is an eigenvector"""
        for a in range(len(self.cartan_basis)):
            for b in range(a + 1, len(self.cartan_basis)):
                if not commutator(self.cartan_basis[a], self.cartan_basis[b]).is_zero():
                    raise ValueError(f"Cartan elements {a} and {b} do not commute")
        for index, (E, root) in enumerate(self.positive_root_vectors):
            if len(root) != self.rank:
                raise ValueError(f"Root {index} has {len(root)} coordinates for rank {self.rank}")
            for h, value in zip(self.cartan_basis, root):
                if commutator(h, E) != E.scale(value):
                    raise ValueError(f"Root vector {index} is not an eigenvector with root {root}")


def _epsilon(n: int, *terms: Tuple[int, int]) -> Weight:
    coords = [0] * n
    for index, coeff in terms:
        coords[index] += coeff
    return tuple(coords)


def sp_root_datum(n: int) -> RootDatum:
    """
    Standard C_n data for sp(n,R).

    Cartan basis h_i = E_ii - E_(n+i)(n+i). Positive roots in order:
    e_i - e_j (i<j), e_i + e_j (i<j), 2e_i. Simple roots are e_i - e_(i+1)
    and 2e_n.
    """
    _check_rank(n, "n")
    size = 2 * n
    cartan = [_unit(size, [(i, i, 1), (n + i, n + i, -1)]) for i in range(n)]
    roots: List[Tuple[Matrix, Weight]] = []
    simple: List[int] = []
    for i in range(n):
        for j in range(i + 1, n):
            if j == i + 1:
                simple.append(len(roots))
            roots.append((_unit(size, [(i, j, 1), (n + j, n + i, -1)]), _epsilon(n, (i, 1), (j, -1))))
    for i in range(n):
        for j in range(i + 1, n):
            roots.append((_unit(size, [(i, n + j, 1), (j, n + i, 1)]), _epsilon(n, (i, 1), (j, 1))))
    for i in range(n):
        if i == n - 1:
            simple.append(len(roots))
        roots.append((_unit(size, [(i, n + i, 1)]), _epsilon(n, (i, 2))))
    rho = tuple(range(n, 0, -1))
    return RootDatum(cartan, roots, simple, rho, (n,))


def direct_sum_root_datum(first: RootDatum, second: RootDatum) -> RootDatum:
    """Concatenated data for first + second in block-diagonal coordinates"""
    size_a = first.cartan_basis[0].rows
    size_b = second.cartan_basis[0].rows
    za, zb = Matrix.zeros(size_a), Matrix.zeros(size_b)
    pad_a = (0,) * first.rank
    pad_b = (0,) * second.rank
    cartan = [block_diagonal([h, zb]) for h in first.cartan_basis]
    cartan += [block_diagonal([za, h]) for h in second.cartan_basis]
    roots = [(block_diagonal([E, zb]), root + pad_b) for E, root in first.positive_root_vectors]
    roots += [(block_diagonal([za, E]), pad_a + root) for E, root in second.positive_root_vectors]
    offset = len(first.positive_root_vectors)
    simple = list(first.simple_roots) + [offset + i for i in second.simple_roots]
    return RootDatum(cartan, roots, simple, first.rho + second.rho, first.ranks + second.ranks)
