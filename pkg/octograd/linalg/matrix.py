"""
Dense Exact Matrices

Matrices are immutable row-major tuples of exact scalars (Fraction, RealScalar, or plain int for integer matrices).
Products and sums stay in octograd scalars; elimination (rank, inverse, reduced row-echelon form) runs on sympy
DomainMatrix over QQ or QQ(√3).
"""


from fractions import Fraction
from typing import Any, Iterable, Sequence

from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from octograd.errors import DimensionMismatch, PreconditionError
from octograd.linalg.domains import domain_matrix, rows_of
from octograd.scalars import coerce

Vector = tuple


class Matrix:
    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable[Any]], ncols: int | None = None):
        self.rows = tuple(tuple(row) for row in rows)
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else (ncols or 0)
        if any(len(row) != self.ncols for row in self.rows):
            raise DimensionMismatch("Matrix rows must all have the same length")

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Matrix":
        return cls(((Fraction(0),) * ncols for _ in range(nrows)), ncols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls.diagonal([Fraction(1)] * n)

    @classmethod
    def diagonal(cls, entries: Sequence[Any]) -> "Matrix":
        n = len(entries)
        return cls(
            tuple(coerce(entries[i]) if i == j else Fraction(0) for j in range(n)) for i in range(n)
        )

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Any]], nrows: int | None = None) -> "Matrix":
        if not columns:
            return cls((() for _ in range(nrows or 0)), 0)

        return cls(zip(*columns))

    @classmethod
    def from_flat(cls, vector: Sequence[Any], n: int) -> "Matrix":
        if len(vector) != n * n:
            raise DimensionMismatch(f"Expected {n * n} entries for a {n}x{n} matrix, got {len(vector)}")

        return cls(tuple(vector[i * n: (i + 1) * n]) for i in range(n))

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, index: tuple[int, int]) -> Any:
        i, j = index
        return self.rows[i][j]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.rows)

    def flatten(self) -> Vector:
        return tuple(entry for row in self.rows for entry in row)

    def transpose(self) -> "Matrix":
        return Matrix(zip(*self.rows), self.nrows) if self.rows else Matrix((), 0)

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def is_symmetric(self) -> bool:
        return self.is_square and all(
            self.rows[i][j] == self.rows[j][i] for i in range(self.nrows) for j in range(i)
        )

    def is_zero(self) -> bool:
        return not any(entry for row in self.rows for entry in row)

    def trace(self) -> Any:
        if not self.is_square:
            raise DimensionMismatch("Trace of a non-square matrix")

        return sum((self.rows[i][i] for i in range(self.nrows)), Fraction(0))

    def apply(self, vector: Sequence[Any]) -> Vector:
        """The column vector M·v."""
        if len(vector) != self.ncols:
            raise DimensionMismatch(f"Cannot apply a {self.nrows}x{self.ncols} matrix to a {len(vector)}-vector")

        support = [(j, x) for j, x in enumerate(vector) if x]
        return tuple(
            sum((row[j] * x for j, x in support if row[j]), Fraction(0)) for row in self.rows
        )

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented

        if self.ncols != other.nrows:
            raise DimensionMismatch(f"Cannot multiply {self.shape} by {other.shape}")

        other_rows = [[(j, y) for j, y in enumerate(row) if y] for row in other.rows]
        product = []
        for row in self.rows:
            out = [Fraction(0)] * other.ncols
            for k, x in enumerate(row):
                if x:
                    for j, y in other_rows[k]:
                        out[j] += x * y

            product.append(out)

        return Matrix(product, other.ncols)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._require_same_shape(other)
        return Matrix(
            (tuple(x + y for x, y in zip(a, b)) for a, b in zip(self.rows, other.rows)), self.ncols
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._require_same_shape(other)
        return Matrix(
            (tuple(x - y for x, y in zip(a, b)) for a, b in zip(self.rows, other.rows)), self.ncols
        )

    def __neg__(self) -> "Matrix":
        return Matrix((tuple(-x for x in row) for row in self.rows), self.ncols)

    def scale(self, factor: Any) -> "Matrix":
        return Matrix((tuple(factor * x for x in row) for row in self.rows), self.ncols)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented

        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in row) for row in self.rows)
        return f"Matrix[{self.nrows}x{self.ncols}]({body})"

    def to_domain(self):
        """The sympy DomainMatrix of this matrix over QQ or QQ(√3)."""
        return domain_matrix(self.rows, self.ncols)

    def rank(self) -> int:
        return self.to_domain().rank()

    def kernel(self) -> "Subspace":
        from octograd.linalg.subspace import kernel_of_rows

        return kernel_of_rows(self.rows, self.ncols)

    def inverse(self) -> "Matrix":
        if not self.is_square:
            raise PreconditionError("Only square matrices can be inverted")

        if not self.nrows:
            return self

        try:
            inverse = self.to_domain().to_dense().inv()
        except DMNonInvertibleMatrixError as error:
            raise PreconditionError("Matrix is singular") from error

        return Matrix(rows_of(inverse), self.ncols)

    def _require_same_shape(self, other: "Matrix"):
        if self.shape != other.shape:
            raise DimensionMismatch(f"Shape mismatch {self.shape} vs {other.shape}")


def rref(rows: Iterable[Sequence[Any]], ncols: int) -> tuple[list[list[Any]], list[int]]:
    """Reduced row-echelon form with unit pivots. Returns the nonzero rows and their pivot columns."""
    rows = list(rows)
    if not rows:
        return [], []

    reduced, pivots = domain_matrix(rows, ncols).rref()
    return rows_of(reduced)[: len(pivots)], list(pivots)
