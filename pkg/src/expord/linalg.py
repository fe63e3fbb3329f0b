"""Dense matrices over exact rationals and the elimination kernels
(RREF, rank, nullspace basis, solve, invert) everything else builds on.

All values are ``fractions.Fraction`` end to end.  Floats are rejected at
the boundary so rounding can never sneak into a verdict; Fraction keeps
every result in canonical form (positive denominator, reduced) for free.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatch, EmptyMatrix

Vector = tuple  # tuple of Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def rat(value) -> Fraction:
    """Coerce an int, Fraction, or literal string ("3/4", "0.8") exactly.

    Floats are refused: Fraction(0.8) would be the binary float's exact
    value, not 4/5, which is never what a caller of this package means.
    """
    if isinstance(value, float):
        raise TypeError(
            f"refusing float {value!r}: pass an int, Fraction, or a string literal"
        )
    return Fraction(value)


def vector(entries) -> Vector:
    """Build an exact vector, coercing entries through rat()."""
    vec = tuple(rat(e) for e in entries)
    if not vec:
        raise EmptyMatrix("vectors need at least one entry")
    return vec


def dot(x: Vector, y: Vector) -> Fraction:
    if len(x) != len(y):
        raise DimensionMismatch(f"dot of lengths {len(x)} and {len(y)}")
    return sum((a * b for a, b in zip(x, y)), _ZERO)


def vec_add(x: Vector, y: Vector) -> Vector:
    if len(x) != len(y):
        raise DimensionMismatch(f"add of lengths {len(x)} and {len(y)}")
    return tuple(a + b for a, b in zip(x, y))


def vec_sub(x: Vector, y: Vector) -> Vector:
    if len(x) != len(y):
        raise DimensionMismatch(f"subtract of lengths {len(x)} and {len(y)}")
    return tuple(a - b for a, b in zip(x, y))


def vec_scale(c: Fraction, x: Vector) -> Vector:
    return tuple(c * a for a in x)


def is_zero_vector(x: Vector) -> bool:
    return all(a == 0 for a in x)


@dataclass(frozen=True)
class Matrix:
    """Immutable dense matrix of Fractions, stored row-major."""

    rows: tuple

    def __post_init__(self):
        if not self.rows or not self.rows[0]:
            raise EmptyMatrix("matrices need at least one row and one column")
        width = len(self.rows[0])
        if any(len(r) != width for r in self.rows):
            raise DimensionMismatch("ragged rows")

    @classmethod
    def from_rows(cls, rows) -> "Matrix":
        return cls(tuple(tuple(rat(e) for e in row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(
            tuple(
                tuple(_ONE if i == j else _ZERO for j in range(n)) for i in range(n)
            )
        )

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    @property
    def shape(self) -> tuple:
        return (self.nrows, self.ncols)

    def __getitem__(self, index) -> Fraction:
        i, j = index
        return self.rows[i][j]

    def row(self, i: int) -> Vector:
        return self.rows[i]

    def col(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def transpose(self) -> "Matrix":
        return Matrix(tuple(zip(*self.rows)))

    def matvec(self, v: Vector) -> Vector:
        if len(v) != self.ncols:
            raise DimensionMismatch(
                f"matvec of {self.shape} with vector of length {len(v)}"
            )
        return tuple(dot(r, v) for r in self.rows)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"product of {self.shape} and {other.shape}")
        cols = other.transpose().rows
        return Matrix(tuple(tuple(dot(r, c) for c in cols) for r in self.rows))

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.nrows != other.nrows:
            raise DimensionMismatch(f"hstack of {self.shape} and {other.shape}")
        return Matrix(tuple(a + b for a, b in zip(self.rows, other.rows)))

    def select_columns(self, cols) -> "Matrix":
        return Matrix(tuple(tuple(r[c] for c in cols) for r in self.rows))

    def __str__(self) -> str:
        return " ; ".join(" ".join(str(e) for e in r) for r in self.rows)


def _rref_lists(rows, width):
    """In-place Gauss-Jordan on a list of row lists; returns pivot columns."""
    pivots = []
    r = 0
    for c in range(width):
        pivot_row = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pv = rows[r][c]
        if pv != 1:
            rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            f = rows[i][c]
            if i != r and f != 0:
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def rref(matrix: Matrix):
    """Reduced row echelon form and its pivot columns (strictly increasing)."""
    rows = [list(r) for r in matrix.rows]
    pivots = _rref_lists(rows, matrix.ncols)
    return Matrix(tuple(tuple(r) for r in rows)), tuple(pivots)


def rank(matrix: Matrix) -> int:
    rows = [list(r) for r in matrix.rows]
    return len(_rref_lists(rows, matrix.ncols))


def nullspace_basis(matrix: Matrix):
    """Basis of {x : Mx = 0} in the free-variable parameterization of RREF.

    Each basis vector carries a 1 in one free column and the negated RREF
    entries in the pivot columns; the list is ordered by free column.  The
    result has exactly ncols - rank vectors (empty iff full column rank).
    """
    reduced, pivots = rref(matrix)
    n = matrix.ncols
    pivot_set = set(pivots)
    basis = []
    for free in range(n):
        if free in pivot_set:
            continue
        v = [_ZERO] * n
        v[free] = _ONE
        for row_index, pivot_col in enumerate(pivots):
            v[pivot_col] = -reduced.rows[row_index][free]
        basis.append(tuple(v))
    return basis


def solve(A: Matrix, b: Vector):
    """One exact solution of Ax = b (free variables set to 0), or None.

    Combined with nullspace_basis(A) this describes the full solution set.
    """
    if len(b) != A.nrows:
        raise DimensionMismatch(
            f"solve of {A.shape} with right-hand side of length {len(b)}"
        )
    n = A.ncols
    aug = [list(row) + [rhs] for row, rhs in zip(A.rows, b)]
    pivots = _rref_lists(aug, n + 1)
    if pivots and pivots[-1] == n:
        return None
    x = [_ZERO] * n
    for row_index, pivot_col in enumerate(pivots):
        x[pivot_col] = aug[row_index][n]
    return tuple(x)


def invert(matrix: Matrix):
    """Exact inverse, or None when the matrix is singular."""
    n = matrix.nrows
    if matrix.ncols != n:
        raise DimensionMismatch(f"cannot invert a {matrix.shape} matrix")
    aug = [list(row) + [_ONE if i == j else _ZERO for j in range(n)]
           for i, row in enumerate(matrix.rows)]
    pivots = _rref_lists(aug, 2 * n)
    if tuple(pivots[:n]) != tuple(range(n)):
        return None
    return Matrix(tuple(tuple(row[n:]) for row in aug))


def simplex_lattice(n: int, denominator: int):
    """All points of the n-simplex with coordinates k/denominator.

    Used as the brute-force grid oracle in tests; exact, so membership
    checks against it are meaningful.
    """
    for cuts in itertools.combinations_with_replacement(range(denominator + 1), n - 1):
        bounds = (0,) + cuts + (denominator,)
        yield tuple(
            Fraction(bounds[k + 1] - bounds[k], denominator) for k in range(n)
        )
