# Copyright the halftwist authors
# Licensed under the MIT license

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .errors import DomainError
from .rings import Ring, Scalar


@dataclass(frozen=True, eq=False)
class Matrix:
    """
    Dense square matrix over one of the scalar rings, stored row-major.

    Matrices act on column vectors: column b holds the image of basis vector b.
    """

    ring: Ring
    rows: tuple[tuple[Scalar, ...], ...]

    def __post_init__(self) -> None:
        size = len(self.rows)
        if any(len(row) != size for row in self.rows):
            raise DomainError("matrices must be square")

    @classmethod
    def from_rows(cls, ring: Ring, rows: Iterable[Sequence[Scalar]]) -> Matrix:
        return cls(ring, tuple(tuple(row) for row in rows))

    @classmethod
    def identity(cls, ring: Ring, dim: int) -> Matrix:
        return cls.scalar(ring, dim, ring.one())

    @classmethod
    def scalar(cls, ring: Ring, dim: int, value: Scalar) -> Matrix:
        zero = ring.zero()
        return cls(
            ring,
            tuple(tuple(value if i == j else zero for j in range(dim)) for i in range(dim)),
        )

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __getitem__(self, index: tuple[int, int]) -> Scalar:
        i, j = index
        return self.rows[i][j]

    def column(self, b: int) -> tuple[Scalar, ...]:
        return tuple(row[b] for row in self.rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __add__(self, other: Matrix) -> Matrix:
        return Matrix(
            self.ring,
            tuple(tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.rows, other.rows)),
        )

    def __sub__(self, other: Matrix) -> Matrix:
        return self + (-other)

    def __neg__(self) -> Matrix:
        return Matrix(self.ring, tuple(tuple(-a for a in row) for row in self.rows))

    def scale(self, value: Scalar | int) -> Matrix:
        return Matrix(self.ring, tuple(tuple(value * a for a in row) for row in self.rows))

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.dim != other.dim:
            raise DomainError(f"dimension mismatch {self.dim} vs {other.dim}")
        zero = self.ring.zero()
        columns = [other.column(b) for b in range(other.dim)]
        rows = []
        for row in self.rows:
            out = []
            for col in columns:
                total = zero
                for a, b in zip(row, col):
                    if a and b:
                        total = total + a * b
                out.append(total)
            rows.append(tuple(out))
        return Matrix(self.ring, tuple(rows))

    def __pow__(self, exponent: int) -> Matrix:
        if exponent < 0:
            raise DomainError("negative matrix powers are taken through inverse words")
        result = Matrix.identity(self.ring, self.dim)
        base = self
        while exponent:
            if exponent & 1:
                result = result @ base
            base = base @ base
            exponent >>= 1
        return result

    def map(self, fn: Callable[[Scalar], Scalar], ring: Ring) -> Matrix:
        return Matrix(ring, tuple(tuple(fn(a) for a in row) for row in self.rows))

    def trace(self) -> Scalar:
        total = self.ring.zero()
        for i in range(self.dim):
            total = total + self.rows[i][i]
        return total

    def determinant(self) -> Scalar:
        if self.ring.is_field:
            return self._determinant_field()
        return _laplace(self.rows, self.ring.zero())

    def _determinant_field(self) -> Scalar:
        rows = [list(row) for row in self.rows]
        size = self.dim
        det = self.ring.one()
        for col in range(size):
            pivot = next((r for r in range(col, size) if rows[r][col]), None)
            if pivot is None:
                return self.ring.zero()
            if pivot != col:
                rows[col], rows[pivot] = rows[pivot], rows[col]
                det = -det
            lead = rows[col][col]
            det = det * lead
            inverse = lead.inverse()  # type: ignore[union-attr]
            for r in range(col + 1, size):
                if rows[r][col]:
                    factor = rows[r][col] * inverse
                    rows[r] = [a - factor * b for a, b in zip(rows[r], rows[col])]
        return det

    def scalar_value(self) -> Scalar | None:
        """The (1,1) entry if the matrix equals it times the identity, else None."""
        candidate = self.rows[0][0]
        for i, row in enumerate(self.rows):
            for j, a in enumerate(row):
                if i == j:
                    if a != candidate:
                        return None
                elif a:
                    return None
        return candidate

    def is_scalar(self) -> bool:
        return self.scalar_value() is not None

    def restrict(self, indices: Sequence[int]) -> Matrix:
        """The block on the given basis indices."""
        return Matrix(
            self.ring, tuple(tuple(self.rows[i][j] for j in indices) for i in indices)
        )

    def entry_strings(self) -> list[list[str]]:
        return [[str(a) for a in row] for row in self.rows]


def _laplace(rows: Sequence[Sequence[Scalar]], zero: Scalar) -> Scalar:
    if len(rows) == 1:
        return rows[0][0]
    total = zero
    for j, a in enumerate(rows[0]):
        if not a:
            continue
        minor = [row[:j] + row[j + 1 :] for row in rows[1:]]
        term = a * _laplace(minor, zero)
        total = total + term if j % 2 == 0 else total - term
    return total
