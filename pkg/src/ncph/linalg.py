"""Exact dense linear algebra over a NumberField.

Vectors are tuples of Scalars, matrices are tuples of row tuples.  Gaussian
elimination with exact zero tests gives exact rank, kernel, determinant,
inverse and linear solves; nothing here ever touches floating point.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .fields import NumberField, Scalar

Vector = tuple  # tuple[Scalar, ...]


def vec(field: NumberField, entries) -> Vector:
    return tuple(field.coerce(e) for e in entries)


def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vec_neg(u: Vector) -> Vector:
    return tuple(-a for a in u)


def vec_scale(u: Vector, c) -> Vector:
    return tuple(a * c for a in u)


def dot(u: Vector, v: Vector) -> Scalar:
    acc = u[0] * v[0]
    for a, b in zip(u[1:], v[1:]):
        acc = acc + a * b
    return acc


def vec_is_zero(u: Vector) -> bool:
    return all(a.is_zero() for a in u)


def vec_key(u: Vector) -> tuple:
    """Hashable exact key (power-basis coordinates)."""
    return tuple(a.coords for a in u)


class Matrix:
    """Immutable exact matrix over one NumberField."""

    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field: NumberField, rows):
        self.field = field
        self.rows = tuple(tuple(field.coerce(e) for e in row) for row in rows)
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        for row in self.rows:
            if len(row) != self.ncols:
                raise ValueError("ragged matrix")

    @staticmethod
    def identity(field: NumberField, n: int) -> "Matrix":
        one, zero = field.one, field.zero
        return Matrix(field, [[one if i == j else zero for j in range(n)]
                              for i in range(n)])

    @staticmethod
    def from_rows(rows: Sequence[Vector]) -> "Matrix":
        field = rows[0][0].field
        return Matrix(field, rows)

    def __mul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch")
        cols = list(zip(*other.rows))
        return Matrix(self.field,
                      [[dot(row, col) for col in cols] for row in self.rows])

    def apply(self, v: Vector) -> Vector:
        return tuple(dot(row, v) for row in self.rows)

    def transpose(self) -> "Matrix":
        return Matrix(self.field, list(zip(*self.rows)))

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix(self.field, [vec_add(r, s) for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix(self.field, [vec_sub(r, s) for r, s in zip(self.rows, other.rows)])

    def __neg__(self) -> "Matrix":
        return Matrix(self.field, [vec_neg(r) for r in self.rows])

    def scale(self, c) -> "Matrix":
        c = self.field.coerce(c)
        return Matrix(self.field, [vec_scale(r, c) for r in self.rows])

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.key() == other.key()
                and self.field is other.field)

    def __hash__(self):
        return hash(self.key())

    def key(self) -> tuple:
        return tuple(vec_key(r) for r in self.rows)

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols} over {self.field.name})"

    # -- elimination-based queries -----------------------------------------

    def _echelon(self):
        """Row echelon form; returns (rows as lists, pivot column list)."""
        rows = [list(r) for r in self.rows]
        pivots = []
        r = 0
        for col in range(self.ncols):
            pivot = next((i for i in range(r, len(rows))
                          if not rows[i][col].is_zero()), None)
            if pivot is None:
                continue
            rows[r], rows[pivot] = rows[pivot], rows[r]
            inv = rows[r][col].inverse()
            rows[r] = [e * inv for e in rows[r]]
            for i in range(len(rows)):
                if i != r and not rows[i][col].is_zero():
                    f = rows[i][col]
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
            pivots.append(col)
            r += 1
            if r == len(rows):
                break
        return rows, pivots

    def rank(self) -> int:
        return len(self._echelon()[1])

    def rref(self) -> "Matrix":
        rows, _ = self._echelon()
        return Matrix(self.field, rows)

    def kernel(self) -> list[Vector]:
        """Basis of the right null space."""
        rows, pivots = self._echelon()
        free = [c for c in range(self.ncols) if c not in pivots]
        basis = []
        for fc in free:
            v = [self.field.zero] * self.ncols
            v[fc] = self.field.one
            for r, pc in enumerate(pivots):
                v[pc] = -rows[r][fc]
            basis.append(tuple(v))
        return basis

    def det(self) -> Scalar:
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        rows = [list(r) for r in self.rows]
        n = self.nrows
        det = self.field.one
        for col in range(n):
            pivot = next((i for i in range(col, n)
                          if not rows[i][col].is_zero()), None)
            if pivot is None:
                return self.field.zero
            if pivot != col:
                rows[col], rows[pivot] = rows[pivot], rows[col]
                det = -det
            det = det * rows[col][col]
            inv = rows[col][col].inverse()
            for i in range(col + 1, n):
                if not rows[i][col].is_zero():
                    f = rows[i][col] * inv
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[col])]
        return det

    def inverse(self) -> "Matrix":
        if self.nrows != self.ncols:
            raise ValueError("inverse of a non-square matrix")
        n = self.nrows
        aug = [list(r) + list(Matrix.identity(self.field, n).rows[i])
               for i, r in enumerate(self.rows)]
        work = Matrix(self.field, aug)
        rows, pivots = work._echelon()
        if pivots != list(range(n)):
            raise ValueError("matrix is singular")
        return Matrix(self.field, [row[n:] for row in rows])

    def solve(self, rhs: Vector) -> Optional[Vector]:
        """One solution of A x = rhs, or None if inconsistent."""
        aug = [list(r) + [b] for r, b in zip(self.rows, rhs)]
        rows, pivots = Matrix(self.field, aug)._echelon()
        if self.ncols in pivots:
            return None
        x = [self.field.zero] * self.ncols
        for r, pc in enumerate(pivots):
            x[pc] = rows[r][-1]
        return tuple(x)


def mat_rank(m: Matrix) -> int:
    return m.rank()


def mat_kernel(m: Matrix) -> list[Vector]:
    return m.kernel()


def mat_inverse(m: Matrix) -> Matrix:
    return m.inverse()
