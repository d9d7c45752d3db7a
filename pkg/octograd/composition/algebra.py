"""
Structure-Constant Algebras

An SCAlgebra is a finite-dimensional algebra given by the products of its basis vectors. It optionally carries a unit
and a norm (a QuadForm), and it remembers the Cayley-Dickson chain it was built with so that the doubling gradings
can be read off its coordinates.
"""


import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Any, Iterable, Sequence

from tramp.optionals import Optional

from octograd.errors import DimensionMismatch, PreconditionError
from octograd.linalg import Inertia, Matrix, Subspace, Vector, bilinear, inertia_of, kernel_of_rows
from octograd.results import VerificationReport
from octograd.scalars import coerce, div, scalar_from_json, scalar_to_json

logger = logging.getLogger(__name__)


def zero_vector(dim: int) -> Vector:
    return (Fraction(0),) * dim


def basis_vector(dim: int, index: int) -> Vector:
    return tuple(Fraction(1) if i == index else Fraction(0) for i in range(dim))


def add(x: Sequence[Any], y: Sequence[Any]) -> Vector:
    return tuple(a + b for a, b in zip(x, y))


def sub(x: Sequence[Any], y: Sequence[Any]) -> Vector:
    return tuple(a - b for a, b in zip(x, y))


def scale(factor: Any, x: Sequence[Any]) -> Vector:
    return tuple(factor * a for a in x)


class QuadForm:
    """Quadratic form q given by the Gram matrix of its polar form b(x, y) = q(x+y) − q(x) − q(y)."""

    def __init__(self, gram: Matrix):
        if not gram.is_symmetric():
            raise PreconditionError("The polar form of a quadratic form must be symmetric")

        self.gram = gram

    @property
    def dim(self) -> int:
        return self.gram.nrows

    @cached_property
    def diagonal_values(self) -> Vector:
        """q(e_i) = b(e_i, e_i) / 2."""
        return tuple(div(self.gram[i, i], 2) for i in range(self.dim))

    def polar(self, x: Sequence[Any], y: Sequence[Any]) -> Any:
        return bilinear(self.gram, x, y)

    def value(self, x: Sequence[Any]) -> Any:
        return div(self.polar(x, x), 2)

    @cached_property
    def inertia(self) -> Inertia:
        return inertia_of(self.gram)

    @property
    def is_nondegenerate(self) -> bool:
        return self.inertia.is_nondegenerate

    def check_consistency(self) -> VerificationReport:
        report = VerificationReport("quadratic form")
        for i, j in itertools.combinations_with_replacement(range(self.dim), 2):
            x, y = basis_vector(self.dim, i), basis_vector(self.dim, j)
            expected = self.value(add(x, y)) - self.value(x) - self.value(y)
            if expected != self.gram[i, j]:
                report.failed("polarization", (i, j), "b(x,y) != q(x+y) - q(x) - q(y)")
                return report

        report.passed("polarization")
        return report


@dataclass(frozen=True)
class DoublingChain:
    """Record of a Cayley-Dickson construction CD(base, α₁, …, α_k); the last k coordinates blocks are the
    doubling eigenspaces."""

    base_dim: int
    alphas: tuple[Any, ...] = ()

    def extended(self, alpha: Any) -> "DoublingChain":
        return DoublingChain(self.base_dim, (*self.alphas, alpha))


class SCAlgebra:
    def __init__(
        self,
        name: str,
        mult: Sequence[Sequence[Sequence[Any]]],
        *,
        unit: Sequence[Any] | None = None,
        norm: QuadForm | None = None,
        chain: DoublingChain | None = None,
        para_unit: Sequence[Any] | None = None,
    ):
        self.name = name
        self.dim = len(mult)
        if any(len(row) != self.dim or any(len(v) != self.dim for v in row) for row in mult):
            raise DimensionMismatch(f"Structure constants of {name} must be {self.dim}x{self.dim}x{self.dim}")

        self.mult: tuple[tuple[Vector, ...], ...] = tuple(
            tuple(tuple(coerce(c) for c in vector) for vector in row) for row in mult
        )
        self._sparse = [
            [tuple((k, c) for k, c in enumerate(vector) if c) for vector in row] for row in self.mult
        ]
        self.unit: Optional[Vector] = Optional.Some(tuple(coerce(c) for c in unit)) if unit else Optional.Nothing()
        self.norm: Optional[QuadForm] = Optional.Some(norm) if norm else Optional.Nothing()
        self.chain: Optional[DoublingChain] = Optional.Some(chain) if chain else Optional.Nothing()
        self.para_unit: Optional[Vector] = (
            Optional.Some(tuple(coerce(c) for c in para_unit)) if para_unit else Optional.Nothing()
        )

    def __repr__(self):
        return f"<SCAlgebra {self.name} dim {self.dim}>"

    # ---------------------------- #
    # Required structure           #
    # ---------------------------- #

    def require_unit(self) -> Vector:
        unit = self.unit.value_or(None)
        if unit is None:
            raise PreconditionError(f"{self.name} has no unit")

        return unit

    def require_norm(self) -> QuadForm:
        norm = self.norm.value_or(None)
        if norm is None:
            raise PreconditionError(f"{self.name} carries no norm")

        return norm

    def require_chain(self) -> DoublingChain:
        chain = self.chain.value_or(None)
        if chain is None:
            raise PreconditionError(f"{self.name} was not built by Cayley-Dickson doubling")

        return chain

    @property
    def has_norm(self) -> bool:
        return self.norm.value_or(None) is not None

    @property
    def is_unital(self) -> bool:
        return self.unit.value_or(None) is not None

    # ---------------------------- #
    # Arithmetic                   #
    # ---------------------------- #

    def basis(self) -> list[Vector]:
        return [basis_vector(self.dim, i) for i in range(self.dim)]

    def multiply(self, x: Sequence[Any], y: Sequence[Any]) -> Vector:
        out = [Fraction(0)] * self.dim
        y_support = [(j, b) for j, b in enumerate(y) if b]
        for i, a in enumerate(x):
            if a:
                row = self._sparse[i]
                for j, b in y_support:
                    coefficient = a * b
                    for k, c in row[j]:
                        out[k] += coefficient * c

        return tuple(out)

    def left_mult(self, x: Sequence[Any]) -> Matrix:
        """Matrix of L_x: y ↦ xy (columns are images of basis vectors)."""
        return Matrix.from_columns([self.multiply(x, e) for e in self.basis()])

    def right_mult(self, x: Sequence[Any]) -> Matrix:
        return Matrix.from_columns([self.multiply(e, x) for e in self.basis()])

    def polar(self, x: Sequence[Any], y: Sequence[Any]) -> Any:
        return self.require_norm().polar(x, y)

    def norm_of(self, x: Sequence[Any]) -> Any:
        return self.require_norm().value(x)

    def conjugate(self, x: Sequence[Any]) -> Vector:
        """Standard involution x̄ = n(x,1)1 − x."""
        unit = self.require_unit()
        return sub(scale(self.polar(x, unit), unit), x)

    def associator(self, x: Sequence[Any], y: Sequence[Any], z: Sequence[Any]) -> Vector:
        return sub(self.multiply(self.multiply(x, y), z), self.multiply(x, self.multiply(y, z)))

    def associativity_witness(self) -> tuple[int, int, int] | None:
        e = self.basis()
        for i, j, k in itertools.product(range(self.dim), repeat=3):
            if any(self.associator(e[i], e[j], e[k])):
                return i, j, k

        return None

    @property
    def is_associative(self) -> bool:
        return self.associativity_witness() is None

    def alternativity_witness(self, samples: Iterable[tuple[Vector, Vector]]) -> tuple[Vector, Vector] | None:
        """First sample pair with (xx)y ≠ x(xy) or (yx)x ≠ y(xx)."""
        for x, y in samples:
            if any(self.associator(x, x, y)) or any(self.associator(y, x, x)):
                return x, y

        return None

    def trace_zero_subspace(self) -> Subspace:
        """C⁰ = {x : n(x, 1) = 0}."""
        unit = self.require_unit()
        return kernel_of_rows([self.require_norm().gram.apply(unit)], self.dim)

    def involution_matrix(self) -> Matrix:
        return Matrix.from_columns([self.conjugate(e) for e in self.basis()])

    def norm_inertia(self) -> Inertia:
        return self.require_norm().inertia

    @property
    def is_division(self) -> bool:
        """Division type is decided by definiteness of the norm."""
        return self.norm_inertia().is_definite

    # ---------------------------- #
    # Change of basis              #
    # ---------------------------- #

    def rebased(self, new_basis: Sequence[Sequence[Any]], name: str | None = None) -> "SCAlgebra":
        """The same algebra in coordinates with respect to new_basis (rows given in the current coordinates)."""
        change = Matrix.from_columns(new_basis)
        inverse = change.inverse()

        def to_new(vector: Sequence[Any]) -> Vector:
            return inverse.apply(vector)

        mult = [[to_new(self.multiply(x, y)) for y in new_basis] for x in new_basis]
        unit = self.unit.value_or(None)
        norm = self.norm.value_or(None)
        para_unit = self.para_unit.value_or(None)
        return SCAlgebra(
            name or f"{self.name}'",
            mult,
            unit=to_new(unit) if unit else None,
            norm=QuadForm(change.transpose() @ norm.gram @ change) if norm else None,
            para_unit=to_new(para_unit) if para_unit else None,
        )

    # ---------------------------- #
    # Composition identities       #
    # ---------------------------- #

    def _products_and_gram_products(self):
        gram = self.require_norm().gram
        products = [[self.multiply(x, y) for y in self.basis()] for x in self.basis()]
        gram_products = [[gram.apply(p) for p in row] for row in products]
        return products, gram_products

    def composition_witness(self) -> tuple[int, int, int, int] | None:
        """First basis 4-tuple violating n(xy, zw) + n(xw, zy) = n(x, z)·n(y, w), the full polarization of
        n(xy) = n(x)n(y)."""
        gram = self.require_norm().gram
        products, gram_products = self._products_and_gram_products()

        def dot(u: Vector, v: Vector) -> Any:
            return sum((a * b for a, b in zip(u, v) if a and b), Fraction(0))

        for x, y, z, w in itertools.product(range(self.dim), repeat=4):
            left = dot(products[x][y], gram_products[z][w]) + dot(products[x][w], gram_products[z][y])
            if left != gram[x, z] * gram[y, w]:
                return x, y, z, w

        return None

    def associative_form_witness(self) -> tuple[int, int, int] | None:
        """First basis triple violating n(x⋆y, z) = n(x, y⋆z)."""
        gram = self.require_norm().gram
        products = [[self.multiply(x, y) for y in self.basis()] for x in self.basis()]
        for x, y, z in itertools.product(range(self.dim), repeat=3):
            left = sum((c * gram[k, z] for k, c in enumerate(products[x][y]) if c), Fraction(0))
            right = sum((c * gram[x, k] for k, c in enumerate(products[y][z]) if c), Fraction(0))
            if left != right:
                return x, y, z

        return None

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "dim": self.dim,
            "mult": [[[scalar_to_json(c) for c in v] for v in row] for row in self.mult],
            "unit": [scalar_to_json(c) for c in self.unit.value_or(())],
            "para_unit": [scalar_to_json(c) for c in self.para_unit.value_or(())],
            "gram": [[scalar_to_json(c) for c in row] for row in self.norm.value_or(None).gram.rows]
            if self.has_norm
            else [],
            "chain": {
                "base_dim": self.chain.value_or(None).base_dim,
                "alphas": [scalar_to_json(a) for a in self.chain.value_or(None).alphas],
            }
            if self.chain.value_or(None)
            else None,
        }

    @classmethod
    def from_json(cls, data: dict) -> "SCAlgebra":
        def decode(values):
            return [scalar_from_json(c) for c in values]

        chain = data.get("chain")
        return cls(
            data["name"],
            [[decode(v) for v in row] for row in data["mult"]],
            unit=decode(data.get("unit") or []) or None,
            norm=QuadForm(Matrix(decode(row) for row in data["gram"])) if data.get("gram") else None,
            chain=DoublingChain(chain["base_dim"], tuple(decode(chain["alphas"]))) if chain else None,
            para_unit=decode(data.get("para_unit") or []) or None,
        )
