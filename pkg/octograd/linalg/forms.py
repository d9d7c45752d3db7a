"""
Symmetric Bilinear Forms

Inertia (Sylvester signature) by exact congruence diagonalization on sympy DomainMatrix. Diagonal signs are decided
with real_sign, so forms over Q and over Q(√3) are both supported.
"""


from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

from sympy.polys.matrices import DomainMatrix

from octograd.errors import DimensionMismatch, PreconditionError
from octograd.linalg.domains import from_domain
from octograd.linalg.matrix import Matrix
from octograd.scalars import coerce, real_sign


@dataclass(frozen=True)
class Inertia:
    positive: int
    negative: int
    radical: int

    @property
    def dim(self) -> int:
        return self.positive + self.negative + self.radical

    @property
    def is_definite(self) -> bool:
        return not self.radical and (not self.positive or not self.negative)

    @property
    def is_nondegenerate(self) -> bool:
        return not self.radical

    def __add__(self, other: "Inertia") -> "Inertia":
        return Inertia(
            self.positive + other.positive, self.negative + other.negative, self.radical + other.radical
        )

    def negated(self) -> "Inertia":
        return Inertia(self.negative, self.positive, self.radical)

    def as_tuple(self) -> tuple[int, int, int]:
        return self.positive, self.negative, self.radical

    def __str__(self):
        return f"({self.positive},{self.negative},{self.radical})"


def congruence_diagonalize(gram: Matrix) -> list[Any]:
    """Diagonal entries of a form congruent to the given symmetric matrix.

    A nonzero diagonal pivot d is split off and the form replaced by its Schur complement M[1:, 1:] − M[1:, 0]·M[0, 1:]/d.
    With a zero diagonal, the shear e_i ← e_i + e_j turns an off-diagonal entry a_ij into the diagonal entry 2·a_ij.
    """
    if not gram.is_square:
        raise DimensionMismatch("Gram matrices must be square")

    if not gram.is_symmetric():
        raise PreconditionError("Gram matrix is not symmetric")

    m = gram.to_domain().to_dense()
    domain = m.domain
    diagonal = []
    while (n := m.shape[0]) > 0:
        entries = m.to_list()
        pivot = next((i for i in range(n) if entries[i][i]), None)
        if pivot is None:
            pair = next(((i, j) for i in range(n) for j in range(i + 1, n) if entries[i][j]), None)
            if pair is None:
                diagonal.extend([Fraction(0)] * n)
                break

            i, j = pair
            shear = DomainMatrix(
                [[domain.one if r == c or (r, c) == (i, j) else domain.zero for c in range(n)] for r in range(n)],
                (n, n),
                domain,
            )
            m = shear * m * shear.transpose()
            pivot = i

        order = [pivot, *(k for k in range(n) if k != pivot)]
        m = m.extract(order, order)
        d = m.to_list()[0][0]
        diagonal.append(from_domain(d, domain))
        if n == 1:
            break

        m = m[1:, 1:] - (m[1:, :1] * m[:1, 1:]) * domain.quo(domain.one, d)

    return diagonal


def inertia_of(gram: Matrix) -> Inertia:
    signs = [real_sign(x) for x in congruence_diagonalize(gram)]
    return Inertia(signs.count(1), signs.count(-1), signs.count(0))


def gram_restriction(gram: Matrix, basis: Sequence[Sequence[Any]]) -> Matrix:
    """Gram matrix B·G·Bᵀ of the form restricted to the span of the given rows."""
    if not basis:
        return Matrix((), 0)

    b = Matrix(basis)
    return b @ gram @ b.transpose()


def bilinear(gram: Matrix, x: Sequence[Any], y: Sequence[Any]) -> Any:
    gy = gram.apply(y)
    return sum((xi * gi for xi, gi in zip(x, gy) if xi and gi), coerce(0))
