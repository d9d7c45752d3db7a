"""
Cubic Étale Algebras

Two cubic étale algebras over F are used: the split one F×F×F (componentwise, with the cyclic shift ρ) and
L = F×K, handled in the F-basis {1, ξ, ξ²} of F[ξ]/(ξ³ − 1) where ξ = (1, ω). In that basis T(ξ) = T(ξ²) = 0,
ξ^♯ = ξ², and the conjugation τ of K swaps ξ and ξ².
"""


from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Literal, Sequence

from octograd.errors import PreconditionError
from octograd.linalg import Matrix, Vector
from octograd.scalars import OMEGA, RealScalar, Scalar, coerce, div, omega_power

EtaleVariant = Literal["split", "twisted"]


@dataclass(frozen=True)
class EtaleCubic:
    variant: EtaleVariant

    def __post_init__(self):
        if self.variant not in ("split", "twisted"):
            raise PreconditionError(f"Unknown cubic étale variant {self.variant!r}")

    @classmethod
    def split(cls) -> "EtaleCubic":
        return cls("split")

    @classmethod
    def twisted(cls) -> "EtaleCubic":
        return cls("twisted")

    @property
    def is_split(self) -> bool:
        return self.variant == "split"

    @property
    def dim(self) -> int:
        return 3

    # ---------------------------- #
    # Distinguished elements       #
    # ---------------------------- #

    def one(self) -> Vector:
        return (Fraction(1),) * 3 if self.is_split else (Fraction(1), Fraction(0), Fraction(0))

    def zero(self) -> Vector:
        return (Fraction(0),) * 3

    def scalar(self, value: Any) -> Vector:
        value = coerce(value)
        return (value,) * 3 if self.is_split else (value, Fraction(0), Fraction(0))

    def xi(self) -> Vector:
        self._require_twisted("ξ")
        return Fraction(0), Fraction(1), Fraction(0)

    def center_twist(self) -> Vector:
        """a = (1, −1) ∈ F×K, which satisfies a² = 1 and a^♯ = a."""
        self._require_twisted("the center twist")
        return Fraction(-1, 3), Fraction(2, 3), Fraction(2, 3)

    # ---------------------------- #
    # Arithmetic                   #
    # ---------------------------- #

    def add(self, x: Sequence[Any], y: Sequence[Any]) -> Vector:
        return tuple(a + b for a, b in zip(x, y))

    def sub(self, x: Sequence[Any], y: Sequence[Any]) -> Vector:
        return tuple(a - b for a, b in zip(x, y))

    def scale(self, factor: Any, x: Sequence[Any]) -> Vector:
        return tuple(factor * a for a in x)

    def multiply(self, x: Sequence[Any], y: Sequence[Any]) -> Vector:
        if self.is_split:
            return tuple(a * b for a, b in zip(x, y))

        x0, x1, x2 = x
        y0, y1, y2 = y
        return (
            x0 * y0 + x1 * y2 + x2 * y1,
            x0 * y1 + x1 * y0 + x2 * y2,
            x0 * y2 + x2 * y0 + x1 * y1,
        )

    def sharp(self, x: Sequence[Any]) -> Vector:
        """The adjoint: x·x^♯ = N(x)·1."""
        x0, x1, x2 = x
        if self.is_split:
            return x1 * x2, x2 * x0, x0 * x1

        return x0 * x0 - x1 * x2, x2 * x2 - x0 * x1, x1 * x1 - x0 * x2

    def norm(self, x: Sequence[Any]) -> Any:
        x0, x1, x2 = x
        if self.is_split:
            return x0 * x1 * x2

        return x0 * x0 * x0 + x1 * x1 * x1 + x2 * x2 * x2 - 3 * x0 * x1 * x2

    def trace(self, x: Sequence[Any]) -> Any:
        if self.is_split:
            return x[0] + x[1] + x[2]

        return 3 * x[0]

    def inverse(self, x: Sequence[Any]) -> Vector:
        norm = self.norm(x)
        if not norm:
            raise PreconditionError(f"{tuple(x)} is not invertible in {self.variant} L")

        return tuple(div(c, norm) for c in self.sharp(x))

    def in_ground_field(self, x: Sequence[Any]) -> bool:
        if self.is_split:
            return x[0] == x[1] == x[2]

        return not x[1] and not x[2]

    def ground_value(self, x: Sequence[Any]) -> Any:
        if not self.in_ground_field(x):
            raise PreconditionError(f"{tuple(x)} does not lie in F")

        return x[0]

    def multiplication_matrix(self, x: Sequence[Any]) -> Matrix:
        columns = [self.multiply(x, e) for e in Matrix.identity(3).rows]
        return Matrix.from_columns(columns)

    # ---------------------------- #
    # Automorphisms                #
    # ---------------------------- #

    def rho(self, x: Sequence[Any]) -> Vector:
        """The cyclic automorphism (x₁, x₂, x₃) ↦ (x₂, x₃, x₁) of F×F×F."""
        self._require_split("ρ")
        return x[1], x[2], x[0]

    def rho2(self, x: Sequence[Any]) -> Vector:
        return self.rho(self.rho(x))

    def tau(self, x: Sequence[Any]) -> Vector:
        """Conjugation of K: ξ ↔ ξ²."""
        self._require_twisted("τ")
        return x[0], x[2], x[1]

    # ---------------------------- #
    # F×K coordinates              #
    # ---------------------------- #

    def from_pair(self, b: Any, c: Any) -> Vector:
        """The element (b, c) ∈ F×K with c ∈ K = F(ω) given as a Scalar or a real number."""
        self._require_twisted("(b, c) coordinates")
        c = Scalar.from_value(c)
        b = coerce(b)
        # inverse discrete Fourier transform over the evaluations 1, ω, ω²
        return tuple(rational_or_real(div(b + 2 * (c * omega_power(-t)).real_part(), 3)) for t in range(3))

    def to_pair(self, x: Sequence[Any]) -> tuple[Any, Scalar]:
        self._require_twisted("(b, c) coordinates")
        x0, x1, x2 = x
        return x0 + x1 + x2, Scalar.from_value(x0) + OMEGA * x1 + OMEGA * OMEGA * x2

    def _require_twisted(self, what: str):
        if self.is_split:
            raise PreconditionError(f"{what} is only defined on F×K")

    def _require_split(self, what: str):
        if not self.is_split:
            raise PreconditionError(f"{what} is only defined on F×F×F")


def rational_or_real(value: Any) -> Any:
    """Drops a zero √3 part so rational data stays rational."""
    if isinstance(value, RealScalar) and value.is_rational:
        return value.a

    return value


def etale_name(etale: EtaleCubic) -> str:
    return "F×F×F" if etale.is_split else "F×K"
