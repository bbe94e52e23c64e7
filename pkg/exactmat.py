#!/usr/bin/env python3
"""
Exact Rational Linear Algebra

Dense matrices over the rationals (fractions.Fraction) with:
1. Reduced row echelon form, rank and kernels
2. Linear solves with an explicit no-solution result
3. Congruence diagonalization of symmetric matrices
4. Sylvester signature extraction
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

logger = logging.getLogger(__name__)

Rational = Fraction
Vector = Tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


class DimensionError(ValueError):
    """Shapes of the operands do not fit together"""


class NotSymmetricError(ValueError):
    """A symmetric matrix was required"""


def as_rational(value) -> Fraction:
    """Convert int, str ('p/q') or Fraction to Fraction"""
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


@dataclass(frozen=True)
class Matrix:
    """Dense row-major matrix of Fractions"""
    rows: int
    cols: int
    entries: Tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"Expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    # Constructors

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Matrix":
        if not rows:
            return cls(0, 0, ())
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionError("Ragged rows")
        return cls(len(rows), width, tuple(as_rational(x) for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: Optional[int] = None) -> "Matrix":
        cols = rows if cols is None else cols
        return cls(rows, cols, (ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, size: int) -> "Matrix":
        return cls.diagonal([ONE] * size)

    @classmethod
    def diagonal(cls, values: Sequence) -> "Matrix":
        size = len(values)
        data = [ZERO] * (size * size)
        for i, v in enumerate(values):
            data[i * size + i] = as_rational(v)
        return cls(size, size, tuple(data))

    @classmethod
    def elementary(cls, size: int, i: int, j: int, value=1) -> "Matrix":
        """Matrix unit E_ij scaled by value"""
        data = [ZERO] * (size * size)
        data[i * size + j] = as_rational(value)
        return cls(size, size, tuple(data))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], height: Optional[int] = None) -> "Matrix":
        if not columns:
            return cls(height or 0, 0, ())
        h = len(columns[0])
        return cls(h, len(columns), tuple(as_rational(columns[j][i])
                                          for i in range(h) for j in range(len(columns))))

    @classmethod
    def from_sparse(cls, rows: int, cols: int, items: Iterable[Tuple[int, int, object]]) -> "Matrix":
        data = [ZERO] * (rows * cols)
        for i, j, v in items:
            data[i * cols + j] += as_rational(v)
        return cls(rows, cols, tuple(data))

    # Access

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        return self.entries[i * self.cols + j]

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> List[List[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def columns(self) -> List[Vector]:
        return [self.column(j) for j in range(self.cols)]

    @cached_property
    def row_support(self) -> Tuple[Tuple[Tuple[int, Fraction], ...], ...]:
        """Per row, the (column, value) pairs of nonzero entries"""
        c = self.cols
        e = self.entries
        return tuple(
            tuple((j, e[i * c + j]) for j in range(c) if e[i * c + j])
            for i in range(self.rows)
        )

    @cached_property
    def nonzeros(self) -> Tuple[Tuple[int, int, Fraction], ...]:
        return tuple((i, j, v) for i, support in enumerate(self.row_support) for j, v in support)

    def is_zero(self) -> bool:
        return not any(self.entries)

    def is_symmetric(self) -> bool:
        if not self.is_square:
            return False
        return all(self[i, j] == self[j, i] for i in range(self.rows) for j in range(i + 1, self.cols))

    def is_diagonal(self) -> bool:
        return all(i == j for i, j, _ in self.nonzeros)

    def diagonal_entries(self) -> Vector:
        return tuple(self[i, i] for i in range(min(self.rows, self.cols)))

    def trace(self) -> Fraction:
        if not self.is_square:
            raise DimensionError("Trace of a non-square matrix")
        return sum(self.diagonal_entries(), ZERO)

    # Arithmetic

    @property
    def T(self) -> "Matrix":
        return Matrix(self.cols, self.rows,
                      tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)))

    def _check_same_shape(self, other: "Matrix"):
        if self.shape != other.shape:
            raise DimensionError(f"Shape mismatch: {self.shape} vs {other.shape}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, factor) -> "Matrix":
        f = as_rational(factor)
        return Matrix(self.rows, self.cols, tuple(f * a for a in self.entries))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionError(f"Cannot multiply {self.shape} by {other.shape}")
        c = other.cols
        out = [ZERO] * (self.rows * c)
        right = other.row_support
        for i, k, a in self.nonzeros:
            base = i * c
            for j, b in right[k]:
                out[base + j] += a * b
        return Matrix(self.rows, c, tuple(out))

    def apply(self, vector: Sequence) -> Vector:
        """Matrix-vector product"""
        if len(vector) != self.cols:
            raise DimensionError(f"Vector of length {len(vector)} for {self.shape} matrix")
        return tuple(sum((v * vector[j] for j, v in support), ZERO) for support in self.row_support)

    def submatrix(self, row_indices: Sequence[int], col_indices: Sequence[int]) -> "Matrix":
        return Matrix(len(row_indices), len(col_indices),
                      tuple(self[i, j] for i in row_indices for j in col_indices))

    def first_difference(self, other: "Matrix") -> Optional[Tuple[int, int, Fraction, Fraction]]:
        """First (row, col, mine, theirs) where the matrices differ"""
        self._check_same_shape(other)
        for index, (a, b) in enumerate(zip(self.entries, other.entries)):
            if a != b:
                return index // self.cols, index % self.cols, a, b
        return None

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(x) for x in self.row(i)) + "]" for i in range(self.rows))


@dataclass(frozen=True)
class Signature:
    """Sylvester signature (p, q, z) of a symmetric form"""
    positive: int
    negative: int
    null: int

    @property
    def dimension(self) -> int:
        return self.positive + self.negative + self.null

    def as_tuple(self) -> Tuple[int, int, int]:
        return self.positive, self.negative, self.null

    def __str__(self) -> str:
        return f"({self.positive},{self.negative},{self.null})"


@dataclass(frozen=True)
class EchelonForm:
    """Result of rref: the reduced matrix, its pivot columns and rank"""
    R: Matrix
    pivot_columns: Tuple[int, ...]
    rank: int

    def __iter__(self):
        return iter((self.R, self.pivot_columns, self.rank))


# Matrix helpers used across modules

def combine(coefficients: Sequence, matrices: Sequence[Matrix], shape: Optional[Tuple[int, int]] = None) -> Matrix:
    """Linear combination sum(c_k * M_k), skipping zero coefficients"""
    if len(coefficients) != len(matrices):
        raise DimensionError("One coefficient per matrix is required")
    if not matrices:
        if shape is None:
            raise DimensionError("Empty combination needs an explicit shape")
        return Matrix.zeros(*shape)
    rows, cols = matrices[0].shape
    out = [ZERO] * (rows * cols)
    for coeff, mat in zip(coefficients, matrices):
        if not coeff:
            continue
        for i, j, v in mat.nonzeros:
            out[i * cols + j] += coeff * v
    return Matrix(rows, cols, tuple(out))


def block_diagonal(blocks: Sequence[Matrix]) -> Matrix:
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    items = []
    r0 = c0 = 0
    for b in blocks:
        items.extend((r0 + i, c0 + j, v) for i, j, v in b.nonzeros)
        r0 += b.rows
        c0 += b.cols
    return Matrix.from_sparse(rows, cols, items)


def from_blocks(grid: Sequence[Sequence[Matrix]]) -> Matrix:
    """Assemble a block matrix; each row of blocks shares a height"""
    heights = [row[0].rows for row in grid]
    widths = [b.cols for b in grid[0]]
    items = []
    r0 = 0
    for bi, row in enumerate(grid):
        c0 = 0
        for bj, block in enumerate(row):
            if block.shape != (heights[bi], widths[bj]):
                raise DimensionError(f"Block ({bi},{bj}) has shape {block.shape}")
            items.extend((r0 + i, c0 + j, v) for i, j, v in block.nonzeros)
            c0 += widths[bj]
        r0 += heights[bi]
    return Matrix.from_sparse(sum(heights), sum(widths), items)


def commutator(X: Matrix, Y: Matrix) -> Matrix:
    return X @ Y - Y @ X


# Elimination

def _eliminate(rows: List[List[Fraction]], ncols: int) -> List[int]:
    """
    In-place Gauss-Jordan elimination; returns pivot columns.

    Pivots are searched in the first ncols columns only; row operations
    cover the full row, so augmented columns follow along.
    """
    pivots: List[int] = []
    r = 0
    height = len(rows)
    for c in range(ncols):
        if r == height:
            break
        p = next((i for i in range(r, height) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pivot_row = rows[r]
        lead = pivot_row[c]
        if lead != 1:
            pivot_row = [x / lead for x in pivot_row]
            rows[r] = pivot_row
        support = [j for j in range(c, len(pivot_row)) if pivot_row[j]]
        for i in range(height):
            if i == r:
                continue
            row = rows[i]
            f = row[c]
            if f:
                for j in support:
                    row[j] -= f * pivot_row[j]
        pivots.append(c)
        r += 1
    return pivots


def rref(M: Matrix) -> EchelonForm:
    """Unique reduced row echelon form of M"""
    rows = M.to_rows()
    pivots = _eliminate(rows, M.cols)
    R = Matrix(M.rows, M.cols, tuple(x for row in rows for x in row))
    return EchelonForm(R, tuple(pivots), len(pivots))


def rank(M: Matrix) -> int:
    return rref(M).rank


def kernel_basis(M: Matrix) -> List[Vector]:
    """Standard nullspace basis: one vector per free column"""
    R, pivots, r = rref(M)
    pivot_set = set(pivots)
    free = [j for j in range(M.cols) if j not in pivot_set]
    basis = []
    for f in free:
        v = [ZERO] * M.cols
        v[f] = ONE
        for row_index, p in enumerate(pivots):
            v[p] = -R[row_index, f]
        basis.append(tuple(v))
    return basis


def solve_linear(A: Matrix, b: Sequence) -> Optional[Vector]:
    """
    Solve A x = b exactly.

    Returns None when b is not in the column space of A. A length mismatch
    between A and b raises DimensionError.
    """
    if A.rows != len(b):
        raise DimensionError(f"Right-hand side of length {len(b)} for {A.rows} equations")
    augmented = [list(A.row(i)) + [as_rational(b[i])] for i in range(A.rows)]
    pivots = _eliminate(augmented, A.cols + 1)
    if pivots and pivots[-1] == A.cols:
        return None
    x = [ZERO] * A.cols
    for row_index, p in enumerate(pivots):
        x[p] = augmented[row_index][A.cols]
    return tuple(x)


def inverse(M: Matrix) -> Matrix:
    if not M.is_square:
        raise DimensionError(f"Cannot invert a {M.shape} matrix")
    n = M.rows
    augmented = [list(M.row(i)) + [ONE if j == i else ZERO for j in range(n)] for i in range(n)]
    pivots = _eliminate(augmented, n)
    if len(pivots) < n:
        raise ValueError("Matrix is singular")
    return Matrix(n, n, tuple(x for row in augmented for x in row[n:]))


def solve_homogeneous(candidates: Sequence[Matrix],
                      constraints: Iterable[Callable[[Matrix], Matrix]]) -> List[Matrix]:
    """
    Basis of {X in span(candidates) : f(X) = 0 for every f in constraints}.

    The stacked system is processed one constraint at a time; each step keeps
    only the kernel of the current constraint restricted to the surviving
    candidates, so later steps work on a smaller space.
    """
    current = list(candidates)
    for constraint in constraints:
        if not current:
            break
        images = [constraint(X) for X in current]
        columns = Matrix.from_columns([img.entries for img in images])
        kernel = kernel_basis(columns)
        current = [combine(v, current) for v in kernel]
    return current


# Symmetric forms

def congruent_diagonalize(S: Matrix) -> Tuple[Matrix, Matrix]:
    """
    Return (D, P) with P^T S P = D diagonal and P invertible.

    Symmetric Gaussian elimination. A zero diagonal pivot with a nonzero
    entry S[k][j] in its row is repaired by the basis change e_k -> e_k + t e_j,
    t in {1, -1}, which makes the new pivot 2t S[k][j] + S[j][j] nonzero.
    """
    if not S.is_symmetric():
        raise NotSymmetricError("congruent_diagonalize needs a symmetric matrix")
    n = S.rows
    A = S.to_rows()
    P = Matrix.identity(n).to_rows()

    def add_multiple(target: int, source: int, factor: Fraction):
        # e_target -> e_target + factor * e_source, applied as a congruence
        for row in A:
            row[target] += factor * row[source]
        src = A[source]
        tgt = A[target]
        for j in range(n):
            tgt[j] += factor * src[j]
        for row in P:
            row[target] += factor * row[source]

    for k in range(n):
        if not A[k][k]:
            j = next((j for j in range(k + 1, n) if A[k][j]), None)
            if j is None:
                continue
            t = ONE if 2 * A[k][j] + A[j][j] else -ONE
            add_multiple(k, j, t)
        pivot = A[k][k]
        for i in range(k + 1, n):
            if A[i][k]:
                add_multiple(i, k, -A[i][k] / pivot)

    P_matrix = Matrix.from_rows(P)
    D = P_matrix.T @ S @ P_matrix
    if not D.is_diagonal():
        raise RuntimeError("Congruence diagonalization left off-diagonal entries")
    return D, P_matrix


def signature(S: Matrix) -> Signature:
    D, _ = congruent_diagonalize(S)
    diag = D.diagonal_entries()
    return Signature(
        positive=sum(1 for x in diag if x > 0),
        negative=sum(1 for x in diag if x < 0),
        null=sum(1 for x in diag if x == 0),
    )


def format_rational(value: Fraction) -> str:
    """Serialize as 'p/q' with an explicit denominator"""
    value = as_rational(value)
    return f"{value.numerator}/{value.denominator}"
