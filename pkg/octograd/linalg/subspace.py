"""
Canonical Subspaces

A Subspace is stored through the reduced row-echelon form of any spanning set. The RREF is unique, so subspace
equality is plain equality of the stored rows and subspaces can be hashed and used as dictionary keys.
"""


import logging
from fractions import Fraction
from typing import Any, Iterable, Iterator, Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from octograd.errors import DimensionMismatch, PreconditionError
from octograd.linalg.domains import QQ_SQRT3, Row, domain_matrix, domain_of, rows_of, support
from octograd.linalg.matrix import Matrix, Vector, rref

logger = logging.getLogger(__name__)


class Subspace:
    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, vectors: Iterable[Sequence[Any]], ambient_dim: int):
        vectors = [list(vector) for vector in vectors]
        if any(len(vector) != ambient_dim for vector in vectors):
            raise DimensionMismatch(f"Spanning vectors must have length {ambient_dim}")

        reduced, pivots = rref(vectors, ambient_dim)
        self.ambient_dim = ambient_dim
        self.basis: tuple[Vector, ...] = tuple(tuple(row) for row in reduced)
        self.pivots: tuple[int, ...] = tuple(pivots)

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls((), ambient_dim)

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(Matrix.identity(ambient_dim).rows, ambient_dim)

    @classmethod
    def span(cls, vectors: Sequence[Sequence[Any]], ambient_dim: int | None = None) -> "Subspace":
        if ambient_dim is None:
            if not vectors:
                raise DimensionMismatch("The ambient dimension of an empty span must be given")

            ambient_dim = len(vectors[0])

        return cls(vectors, ambient_dim)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return self.dim

    def is_zero(self) -> bool:
        return not self.basis

    def as_matrix(self) -> Matrix:
        return Matrix(self.basis, self.ambient_dim)

    def reduce(self, vector: Sequence[Any]) -> list[Any]:
        """Remainder of the vector after eliminating the pivot coordinates; zero exactly for members."""
        if len(vector) != self.ambient_dim:
            raise DimensionMismatch(f"Expected a {self.ambient_dim}-vector, got length {len(vector)}")

        remainder = list(vector)
        for row, pivot in zip(self.basis, self.pivots):
            factor = remainder[pivot]
            if factor:
                for j, x in enumerate(row):
                    if x:
                        remainder[j] -= factor * x

        return remainder

    def contains(self, vector: Sequence[Any]) -> bool:
        return not any(self.reduce(vector))

    def __contains__(self, vector: Sequence[Any]) -> bool:
        return self.contains(vector)

    def coordinates(self, vector: Sequence[Any]) -> Vector:
        """Coordinates of a member with respect to the canonical basis."""
        if not self.contains(vector):
            raise PreconditionError("Vector does not lie in the subspace")

        return tuple(vector[pivot] for pivot in self.pivots)

    def combination(self, coordinates: Sequence[Any]) -> Vector:
        total = [Fraction(0)] * self.ambient_dim
        for coefficient, row in zip(coordinates, self.basis):
            if coefficient:
                for j, x in enumerate(row):
                    if x:
                        total[j] += coefficient * x

        return tuple(total)

    def __add__(self, other: "Subspace") -> "Subspace":
        self._require_same_ambient(other)
        return Subspace((*self.basis, *other.basis), self.ambient_dim)

    def intersection(self, other: "Subspace") -> "Subspace":
        self._require_same_ambient(other)
        if self.is_zero() or other.is_zero():
            return Subspace.zero(self.ambient_dim)

        # x = Σ a_i A_i = Σ b_j B_j  <=>  (a, b) in the kernel of [Aᵀ | −Bᵀ]
        columns = [*self.basis, *(tuple(-x for x in row) for row in other.basis)]
        relations = kernel_of_rows(Matrix.from_columns(columns).rows, len(columns))
        return Subspace(
            (self.combination(relation[: self.dim]) for relation in relations.basis), self.ambient_dim
        )

    __and__ = intersection

    def image(self, matrix: Matrix) -> "Subspace":
        if matrix.ncols != self.ambient_dim:
            raise DimensionMismatch(f"Cannot map a {self.ambient_dim}-dim ambient by a {matrix.shape} matrix")

        return Subspace((matrix.apply(row) for row in self.basis), matrix.nrows)

    def is_subspace_of(self, other: "Subspace") -> bool:
        self._require_same_ambient(other)
        return all(other.contains(row) for row in self.basis)

    __le__ = is_subspace_of

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented

        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"<Subspace dim {self.dim} of {self.ambient_dim}>"

    def _require_same_ambient(self, other: "Subspace"):
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch(f"Ambient dimensions differ: {self.ambient_dim} vs {other.ambient_dim}")


CHUNK_ROWS = 512


def kernel_of_rows(rows: Iterable[Row], ncols: int) -> Subspace:
    """Null space of a streamed system of linear constraints.

    Rows are dense sequences or sparse {column: coefficient} mappings. They are read in chunks; each chunk is stacked
    under the echelon rows kept so far and the stack is brought to reduced row-echelon form by sympy, over QQ until a
    coefficient involving √3 turns up and over QQ(√3) from then on. Reading stops once every unknown is pinned down.
    """
    domain = QQ
    echelon: dict[int, dict[int, Any]] = {}
    seen = 0
    for chunk in _chunks(rows, CHUNK_ROWS):
        seen += len(chunk)
        if domain == QQ and domain_of(x for row in chunk for x in row.values()) == QQ_SQRT3:
            domain = QQ_SQRT3
            echelon = {i: {j: domain.convert_from(x, QQ) for j, x in row.items()} for i, row in echelon.items()}

        block = domain_matrix(chunk, ncols, domain)
        stacked = dict(echelon)
        for (i, j), x in block.to_dok().items():
            stacked.setdefault(len(echelon) + i, {})[j] = x

        reduced, pivots = DomainMatrix(stacked, (len(echelon) + len(chunk), ncols), domain).rref()
        echelon = {}
        for (i, j), x in reduced.to_dok().items():
            echelon.setdefault(i, {})[j] = x

        if len(pivots) == ncols:
            break

    logger.debug("kernel: %d unknowns, %d rows over %s -> dim %d", ncols, seen, domain, ncols - len(echelon))
    if not echelon:
        return Subspace.full(ncols)

    null = DomainMatrix(echelon, (len(echelon), ncols), domain).nullspace()
    return Subspace(rows_of(null), ncols)


def _chunks(rows: Iterable[Row], size: int) -> Iterator[list[dict[int, Any]]]:
    chunk = []
    for row in rows:
        if row := support(row):
            chunk.append(row)

        if len(chunk) == size:
            yield chunk
            chunk = []

    if chunk:
        yield chunk


def kernel(matrix: Matrix) -> Subspace:
    return kernel_of_rows(matrix.rows, matrix.ncols)
