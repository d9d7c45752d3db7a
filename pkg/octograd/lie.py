"""
Linear Lie Algebras

Lie algebras are subspaces of matrix spaces (or of triples of matrix spaces, for triality) obtained by exact kernel
solves. Elements are flattened row-major: entry (i, j) of copy s sits at index s·n² + i·n + j. Gradings on a Lie
algebra are stored in the coordinates of its canonical basis.
"""


import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cache, cached_property
from typing import Any, Iterable, Mapping, Sequence

from tramp.optionals import Optional

from octograd.composition import QuadForm, SCAlgebra, is_symmetric_composition, para_hurwitz
from octograd.errors import DimensionMismatch, PreconditionError
from octograd.gradings import BilinearLaw, GradedTarget, Grading
from octograd.linalg import Inertia, Matrix, Subspace, Vector, inertia_of, kernel_of_rows
from octograd.results import VerificationReport
from octograd.scalars import scalar_from_json, scalar_to_json
from octograd.utils.iterables import first_index

logger = logging.getLogger(__name__)


class LinearLieAlg:
    def __init__(self, name: str, n: int, basis: Iterable[Sequence[Any]] | Subspace, copies: int = 1):
        self.name = name
        self.n = n
        self.copies = copies
        self.ambient_dim = copies * n * n
        self.space = basis if isinstance(basis, Subspace) else Subspace(basis, self.ambient_dim)
        if self.space.ambient_dim != self.ambient_dim:
            raise DimensionMismatch(f"Basis of {name} must live in dimension {self.ambient_dim}")

    def __repr__(self):
        return f"<LinearLieAlg {self.name} dim {self.dim}>"

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def basis(self) -> tuple[Vector, ...]:
        return self.space.basis

    # ---------------------------- #
    # Elements                     #
    # ---------------------------- #

    def matrices(self, element: Sequence[Any]) -> tuple[Matrix, ...]:
        size = self.n * self.n
        return tuple(Matrix.from_flat(element[s * size: (s + 1) * size], self.n) for s in range(self.copies))

    @staticmethod
    def flatten(matrices: Sequence[Matrix]) -> Vector:
        return tuple(entry for matrix in matrices for entry in matrix.flatten())

    def bracket(self, x: Sequence[Any], y: Sequence[Any]) -> Vector:
        """Componentwise commutator of ambient elements."""
        return self.flatten(
            [a @ b - b @ a for a, b in zip(self.matrices(x), self.matrices(y))]
        )

    def coordinates(self, element: Sequence[Any]) -> Vector:
        return self.space.coordinates(element)

    def element(self, coordinates: Sequence[Any]) -> Vector:
        return self.space.combination(coordinates)

    def contains(self, element: Sequence[Any]) -> bool:
        return element in self.space

    @cached_property
    def structure_constants(self) -> tuple[tuple[Vector, ...], ...]:
        """[b_i, b_j] in coordinates, for the canonical basis b."""
        constants = [[None] * self.dim for _ in range(self.dim)]
        for i, j in itertools.combinations_with_replacement(range(self.dim), 2):
            if i == j:
                constants[i][i] = (Fraction(0),) * self.dim
                continue

            value = self.coordinates(self.bracket(self.basis[i], self.basis[j]))
            constants[i][j] = value
            constants[j][i] = tuple(-c for c in value)

        logger.debug("structure constants of %s computed", self.name)
        return tuple(tuple(row) for row in constants)

    @cached_property
    def _sparse_constants(self):
        return [[[(k, c) for k, c in enumerate(vector) if c] for vector in row] for row in self.structure_constants]

    def bracket_coords(self, x: Sequence[Any], y: Sequence[Any]) -> Vector:
        out = [Fraction(0)] * self.dim
        y_support = [(j, b) for j, b in enumerate(y) if b]
        for i, a in enumerate(x):
            if a:
                row = self._sparse_constants[i]
                for j, b in y_support:
                    coefficient = a * b
                    for k, c in row[j]:
                        out[k] += coefficient * c

        return tuple(out)

    def ad(self, x: Sequence[Any]) -> Matrix:
        """Matrix of ad x in coordinates."""
        columns = [self.bracket_coords(x, e) for e in Matrix.identity(self.dim).rows]
        return Matrix.from_columns(columns, self.dim)

    def closure_report(self) -> VerificationReport:
        report = VerificationReport(f"bracket closure of {self.name}")
        for i, j in itertools.combinations(range(self.dim), 2):
            if self.bracket(self.basis[i], self.basis[j]) not in self.space:
                report.failed("closure", (i, j), "bracket leaves the span")
                return report

        report.passed("closure", self.dim)
        return report

    @cached_property
    def killing_gram(self) -> Matrix:
        """K(b_i, b_j) = trace(ad b_i ∘ ad b_j) = Σ c_{ik}^l c_{jl}^k."""
        sparse = self._sparse_constants
        gram = [[Fraction(0)] * self.dim for _ in range(self.dim)]
        for i, j in itertools.combinations_with_replacement(range(self.dim), 2):
            total = Fraction(0)
            for k in range(self.dim):
                for l, c in sparse[i][k]:
                    for m, d in sparse[j][l]:
                        if m == k:
                            total = c * d + total

            gram[i][j] = gram[j][i] = total

        return Matrix(gram, self.dim)

    def is_subalgebra_of(self, other: "LinearLieAlg") -> bool:
        if (self.n, self.copies) != (other.n, other.copies):
            return False

        return self.space.is_subspace_of(other.space)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "ambient_dims": [self.n] * self.copies,
            "basis": [[scalar_to_json(x) for x in row] for row in self.basis],
        }

    @classmethod
    def from_json(cls, data: dict) -> "LinearLieAlg":
        dims = data["ambient_dims"]
        return cls(
            data.get("name", "lie"),
            dims[0],
            [[scalar_from_json(x) for x in row] for row in data["basis"]],
            copies=len(dims),
        )


def killing_form(lie: LinearLieAlg) -> tuple[QuadForm, Inertia]:
    gram = lie.killing_gram
    return QuadForm(gram), inertia_of(gram)


class LieTarget(GradedTarget, target_kind="lie"):
    def __init__(self, lie: LinearLieAlg):
        self.lie = lie

    @classmethod
    @cache
    def of(cls, lie: LinearLieAlg) -> "LieTarget":
        return cls(lie)

    @property
    def dim(self) -> int:
        return self.lie.dim

    @property
    def name(self) -> str:
        return self.lie.name

    def laws(self, grading: Grading) -> list[BilinearLaw]:
        return [BilinearLaw("bracket", self.lie.bracket_coords, symmetric=True)]

    def form(self) -> Optional[Matrix]:
        return Optional.Some(self.lie.killing_gram)

    def to_json(self) -> dict:
        return {"lie": self.lie.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "LieTarget":
        return cls(LinearLieAlg.from_json(data["lie"]))


# ---------------------------- #
# Linear conditions            #
# ---------------------------- #


def _skew_rows(gram: Matrix, offset: int = 0) -> Iterable[dict[int, Any]]:
    """Rows of DᵀG + GD = 0 for i ≤ j; D[k][i] sits at offset + k·n + i."""
    n = gram.nrows
    for i in range(n):
        for j in range(i, n):
            row: dict[int, Any] = {}
            for k in range(n):
                if gram[k, j]:
                    index = offset + k * n + i
                    row[index] = row.get(index, 0) + gram[k, j]

                if gram[i, k]:
                    index = offset + k * n + j
                    row[index] = row.get(index, 0) + gram[i, k]

            yield row


def _relation_rows(
    algebra: SCAlgebra, first: int, second: int, third: int
) -> Iterable[dict[int, Any]]:
    """Rows of d₁(e_i e_j) − d₂(e_i)e_j − e_i d₃(e_j) = 0 with the d's at the given offsets."""
    n = algebra.dim
    mult = algebra.mult
    for i, j, r in itertools.product(range(n), repeat=3):
        row: dict[int, Any] = {}

        def put(index: int, value: Any):
            total = row.get(index, 0) + value
            if total:
                row[index] = total
            else:
                row.pop(index, None)

        for k in range(n):
            if mult[i][j][k]:
                put(first + r * n + k, mult[i][j][k])

            if mult[k][j][r]:
                put(second + k * n + i, -mult[k][j][r])

            if mult[i][k][r]:
                put(third + k * n + j, -mult[i][k][r])

        if row:
            yield row


def so_of_form(form: QuadForm | Matrix, name: str = "so") -> LinearLieAlg:
    gram = form.gram if isinstance(form, QuadForm) else form
    if not inertia_of(gram).is_nondegenerate:
        raise PreconditionError("so(V, Q) needs a nondegenerate form")

    n = gram.nrows
    return LinearLieAlg(name, n, kernel_of_rows(_skew_rows(gram), n * n))


def derivations(algebra: SCAlgebra) -> LinearLieAlg:
    n = algebra.dim
    space = kernel_of_rows(_relation_rows(algebra, 0, 0, 0), n * n)
    return LinearLieAlg(f"Der({algebra.name})", n, space)


def triality_algebra(algebra: SCAlgebra) -> LinearLieAlg:
    """tri(S) = {(d₁, d₂, d₃) ∈ so(S, n)³ : d₁(x⋆y) = d₂(x)⋆y + x⋆d₃(y)}."""
    if not is_symmetric_composition(algebra):
        raise PreconditionError(f"{algebra.name} is not a symmetric composition algebra")

    n = algebra.dim
    size = n * n
    gram = algebra.require_norm().gram
    rows = itertools.chain(
        *(_skew_rows(gram, s * size) for s in range(3)),
        _relation_rows(algebra, 0, size, 2 * size),
    )
    return LinearLieAlg(f"tri({algebra.name})", n, kernel_of_rows(rows, 3 * size), copies=3)


def slot_projection(lie: LinearLieAlg, slot: int) -> Subspace:
    size = lie.n * lie.n
    return Subspace((row[slot * size: (slot + 1) * size] for row in lie.basis), size)


def cyclic_shift(element: Sequence[Any], n: int) -> Vector:
    """(d₁, d₂, d₃) ↦ (d₃, d₁, d₂)."""
    size = n * n
    return (*element[2 * size:], *element[: 2 * size])


# ---------------------------- #
# Triality decomposition       #
# ---------------------------- #


@dataclass
class TriDecomposition:
    tri: LinearLieAlg
    derivations: Subspace
    ad_family: Subspace
    t_family: Subspace
    report: VerificationReport


def tri_decomposition(algebra: SCAlgebra) -> TriDecomposition:
    """tri(C̄) = {(d,d,d)} ⊕ {(ad_x, −2L_x−R_x, L_x+2R_x)} ⊕ {(T_x, −R_x, −L_x)} for d ∈ Der(C), x ∈ C⁰."""
    tri = triality_algebra(para_hurwitz(algebra))
    der = derivations(algebra)
    traceless = algebra.trace_zero_subspace()
    flatten = LinearLieAlg.flatten

    def triple(a: Matrix, b: Matrix, c: Matrix) -> Vector:
        return flatten([a, b, c])

    diagonal = [triple(*(Matrix.from_flat(d, algebra.dim),) * 3) for d in der.basis]
    ad_family, t_family, lt_family = [], [], []
    for x in traceless.basis:
        left, right = algebra.left_mult(x), algebra.right_mult(x)
        ad_family.append(triple(left - right, -(left.scale(2)) - right, left + right.scale(2)))
        t_family.append(triple(left + right, -right, -left))
        lt_family.append(triple(left, -(left + right), right))

    report = VerificationReport(f"triality decomposition of {algebra.name}")
    for family_name, family in (
        ("derivations", diagonal), ("ad family", ad_family), ("T family", t_family), ("(L,-T,R) family", lt_family)
    ):
        outside = first_index(family, lambda v: v not in tri.space)
        if outside is None:
            report.passed(f"{family_name} in tri")
        else:
            report.failed(f"{family_name} in tri", outside, "element outside tri")

    spaces = [Subspace(family, tri.ambient_dim) for family in (diagonal, ad_family, t_family)]
    total = spaces[0] + spaces[1] + spaces[2]
    dims = tuple(space.dim for space in spaces)
    if sum(dims) == total.dim and total == tri.space:
        report.passed("direct sum equals tri", dims)
    else:
        report.failed("direct sum equals tri", dims, f"sum has dim {total.dim}, tri has dim {tri.dim}")

    return TriDecomposition(tri, *spaces, report)


# ---------------------------- #
# Gradings on Der(C)           #
# ---------------------------- #


def _membership_rows(images: Sequence[Vector], target: Subspace | None) -> list[list[Any]]:
    """Rows in the coefficients c_a saying Σ c_a images[a] ∈ target."""
    if target is None:
        residues = [list(image) for image in images]
    else:
        residues = [target.reduce(image) for image in images]

    width = len(images[0]) if images else 0
    return [[residue[r] for residue in residues] for r in range(width)]


def induced_grading_on_der(grading: Grading, der: LinearLieAlg | None = None) -> Grading:
    """Der(C)_g = {d : d(C_h) ⊆ C_{g+h} for all h}, in coordinates of Der(C)."""
    algebra = grading.target.algebra
    der = der or derivations(algebra)
    operators = [Matrix.from_flat(d, algebra.dim) for d in der.basis]
    support = grading.support
    candidates = sorted({b - a for a in support for b in support}, key=lambda g: g.coordinates)
    components: dict = {}
    for degree in candidates:
        rows = []
        for source, space in grading.components.items():
            target = grading.components.get(source + degree)
            for x in space.basis:
                rows.extend(_membership_rows([d.apply(x) for d in operators], target))

        component = kernel_of_rows(rows, der.dim)
        if not component.is_zero():
            components[degree] = component

    result = Grading(grading.group, components, LieTarget.of(der), parameters=grading.parameters)
    if sum(space.dim for space in components.values()) != der.dim:
        raise PreconditionError("Induced components do not span Der(C); the input grading is not a grading")

    return result
