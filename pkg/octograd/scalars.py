"""
Exact Scalars

The scalar tower Q ⊂ Q(√3) ⊂ Q(ζ) where ζ is a primitive 12th root of unity. Rationals are fractions.Fraction,
RealScalar is a + b√3, and Scalar is a 4-vector over Q in the basis {1, ζ, ζ², ζ³} reduced with ζ⁴ = ζ² − 1.

The fixed embeddings are ζ = e^{iπ/6}, so √3 = ζ + ζ¹¹, i = ζ³ and the primitive cube root of unity is
ω = ζ⁴ = −1/2 + (√3/2)i.

Linear algebra is generic over all three types: they share the arithmetic operators, are falsy exactly at zero, and
compare equal to the rationals they represent. The helpers at the bottom of this module (div, real_sign, coerce) are
what the rest of the package uses to stay field-agnostic.
"""


from fractions import Fraction
from typing import Any, TypeAlias

from octograd.errors import FieldError

Rational: TypeAlias = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


class RealScalar:
    """Element a + b√3 of the ordered field Q(√3)."""

    __slots__ = ("a", "b")

    def __init__(self, a: int | Fraction = 0, b: int | Fraction = 0):
        self.a = a if type(a) is Fraction else Fraction(a)
        self.b = b if type(b) is Fraction else Fraction(b)

    @classmethod
    def _make(cls, a: Fraction, b: Fraction) -> "RealScalar":
        value = object.__new__(cls)
        value.a = a
        value.b = b
        return value

    @property
    def is_rational(self) -> bool:
        return not self.b

    def conjugate(self) -> "RealScalar":
        """The Galois conjugate a − b√3 (not complex conjugation, which fixes real scalars)."""
        return RealScalar._make(self.a, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a - 3 * self.b * self.b

    def sign(self) -> int:
        return real_sign(self)

    def __add__(self, other: Any) -> "RealScalar":
        if isinstance(other, RealScalar):
            return RealScalar._make(self.a + other.a, self.b + other.b)

        if isinstance(other, (int, Fraction)):
            return RealScalar._make(self.a + other, self.b)

        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other: Any) -> "RealScalar":
        if isinstance(other, RealScalar):
            return RealScalar._make(self.a - other.a, self.b - other.b)

        if isinstance(other, (int, Fraction)):
            return RealScalar._make(self.a - other, self.b)

        return NotImplemented

    def __rsub__(self, other: Any) -> "RealScalar":
        if isinstance(other, (int, Fraction)):
            return RealScalar._make(other - self.a, -self.b)

        return NotImplemented

    def __mul__(self, other: Any) -> "RealScalar":
        if isinstance(other, RealScalar):
            if not other.b:
                return RealScalar._make(self.a * other.a, self.b * other.a if self.b else _ZERO)

            if not self.b:
                return RealScalar._make(self.a * other.a, self.a * other.b)

            return RealScalar._make(
                self.a * other.a + 3 * self.b * other.b, self.a * other.b + self.b * other.a
            )

        if isinstance(other, (int, Fraction)):
            return RealScalar._make(self.a * other, self.b * other if self.b else _ZERO)

        return NotImplemented

    __rmul__ = __mul__

    def inverse(self) -> "RealScalar":
        if not self:
            raise FieldError("Division by zero in Q(√3)")

        if not self.b:
            return RealScalar._make(1 / self.a, _ZERO)

        norm = self.norm()
        return RealScalar._make(self.a / norm, -self.b / norm)

    def __truediv__(self, other: Any) -> "RealScalar":
        if isinstance(other, RealScalar):
            return self * other.inverse()

        if isinstance(other, (int, Fraction)):
            if not other:
                raise FieldError("Division by zero in Q(√3)")

            return RealScalar._make(self.a / other, self.b / other)

        return NotImplemented

    def __rtruediv__(self, other: Any) -> "RealScalar":
        if isinstance(other, (int, Fraction)):
            return self.inverse() * other

        return NotImplemented

    def __neg__(self) -> "RealScalar":
        return RealScalar._make(-self.a, -self.b)

    def __pos__(self) -> "RealScalar":
        return self

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, RealScalar):
            return self.a == other.a and self.b == other.b

        if isinstance(other, (int, Fraction)):
            return not self.b and self.a == other

        if isinstance(other, Scalar):
            return other == self

        return NotImplemented

    def __hash__(self):
        return hash(self.a) if not self.b else hash((self.a, self.b))

    def __lt__(self, other: Any) -> bool:
        return real_sign(other - self) > 0

    def __le__(self, other: Any) -> bool:
        return real_sign(other - self) >= 0

    def __gt__(self, other: Any) -> bool:
        return real_sign(self - other) > 0

    def __ge__(self, other: Any) -> bool:
        return real_sign(self - other) >= 0

    def __repr__(self):
        return f"RealScalar({self})"

    def __str__(self):
        if not self.b:
            return str(self.a)

        if not self.a:
            return f"{self.b}√3"

        return f"{self.a}{'+' if self.b > 0 else '-'}{abs(self.b)}√3"


class Scalar:
    """Element of Q(ζ) stored as coordinates in the basis {1, ζ, ζ², ζ³}."""

    __slots__ = ("coeffs",)

    def __init__(self, c0: int | Fraction = 0, c1: int | Fraction = 0, c2: int | Fraction = 0, c3: int | Fraction = 0):
        self.coeffs = (Fraction(c0), Fraction(c1), Fraction(c2), Fraction(c3))

    @classmethod
    def _make(cls, coeffs: tuple[Fraction, Fraction, Fraction, Fraction]) -> "Scalar":
        value = object.__new__(cls)
        value.coeffs = coeffs
        return value

    @classmethod
    def from_value(cls, value: "int | Fraction | RealScalar | Scalar") -> "Scalar":
        match value:
            case Scalar():
                return value

            case RealScalar(a=a, b=b):
                # √3 = 2ζ − ζ³
                return cls._make((a, 2 * b, _ZERO, -b))

            case int() | Fraction():
                return cls._make((Fraction(value), _ZERO, _ZERO, _ZERO))

            case _:
                raise FieldError(f"{value!r} is not an element of Q(ζ12)")

    @classmethod
    def from_parts(cls, real: "int | Fraction | RealScalar", imag: "int | Fraction | RealScalar") -> "Scalar":
        """The scalar real + imag·i."""
        real, imag = as_real(real), as_real(imag)
        # (c + d√3)·i = cζ³ + d(2ζ² − 1)
        return cls._make((real.a - imag.b, 2 * real.b, 2 * imag.b, imag.a - real.b))

    def real_part(self) -> RealScalar:
        c0, c1, c2, _ = self.coeffs
        return RealScalar._make(c0 + c2 / 2, c1 / 2)

    def imag_part(self) -> RealScalar:
        _, c1, c2, c3 = self.coeffs
        return RealScalar._make(c3 + c1 / 2, c2 / 2)

    @property
    def is_real(self) -> bool:
        _, c1, c2, c3 = self.coeffs
        return not c2 and 2 * c3 == -c1

    def to_real(self) -> RealScalar:
        if not self.is_real:
            raise FieldError(f"{self} is not in the real subfield Q(√3)")

        return self.real_part()

    def conjugate(self) -> "Scalar":
        """Complex conjugation ζ ↦ ζ¹¹ = ζ − ζ³."""
        c0, c1, c2, c3 = self.coeffs
        return Scalar._make((c0 + c2, c1, -c2, -c1 - c3))

    def __add__(self, other: Any) -> "Scalar":
        other = _as_scalar_or_none(other)
        if other is None:
            return NotImplemented

        return Scalar._make(tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other: Any) -> "Scalar":
        other = _as_scalar_or_none(other)
        if other is None:
            return NotImplemented

        return Scalar._make(tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other: Any) -> "Scalar":
        other = _as_scalar_or_none(other)
        if other is None:
            return NotImplemented

        return other - self

    def __mul__(self, other: Any) -> "Scalar":
        if isinstance(other, (int, Fraction)):
            return Scalar._make(tuple(x * other for x in self.coeffs))

        other = _as_scalar_or_none(other)
        if other is None:
            return NotImplemented

        product = [_ZERO] * 7
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    if y:
                        product[i + j] += x * y

        # ζ⁴ = ζ² − 1, ζ⁵ = ζ³ − ζ, ζ⁶ = −1
        p0, p1, p2, p3, p4, p5, p6 = product
        return Scalar._make((p0 - p4 - p6, p1 - p5, p2 + p4, p3 + p5))

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if not self:
            raise FieldError("Division by zero in Q(ζ12)")

        conjugate = self.conjugate()
        return conjugate * Scalar.from_value((self * conjugate).to_real().inverse())

    def __truediv__(self, other: Any) -> "Scalar":
        other = _as_scalar_or_none(other)
        if other is None:
            return NotImplemented

        return self * other.inverse()

    def __rtruediv__(self, other: Any) -> "Scalar":
        other = _as_scalar_or_none(other)
        if other is None:
            return NotImplemented

        return other * self.inverse()

    def __pow__(self, exponent: int) -> "Scalar":
        if exponent < 0:
            return self.inverse() ** -exponent

        result, base = ONE, self
        while exponent:
            if exponent & 1:
                result = result * base

            base = base * base
            exponent >>= 1

        return result

    def __neg__(self) -> "Scalar":
        return Scalar._make(tuple(-x for x in self.coeffs))

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __eq__(self, other: Any) -> bool:
        other = _as_scalar_or_none(other)
        if other is None:
            return NotImplemented

        return self.coeffs == other.coeffs

    def __hash__(self):
        if self.is_real:
            return hash(self.real_part())

        return hash(self.coeffs)

    def __repr__(self):
        return f"Scalar{tuple(str(c) for c in self.coeffs)}"

    def __str__(self):
        real, imag = self.real_part(), self.imag_part()
        if not imag:
            return str(real)

        return f"({real})+({imag})i"


def _as_scalar_or_none(value: Any) -> Scalar | None:
    if isinstance(value, (Scalar, RealScalar, int, Fraction)):
        return Scalar.from_value(value)

    return None


ZETA = Scalar(0, 1, 0, 0)
ONE = Scalar(1)
I = Scalar(0, 0, 0, 1)
OMEGA = Scalar(-1, 0, 1, 0)
SQRT3 = RealScalar(0, 1)


def omega_power(k: int) -> Scalar:
    """ω^k for any integer k; ω has order 3."""
    return (ONE, OMEGA, OMEGA * OMEGA)[k % 3]


def as_real(value: "int | Fraction | RealScalar | Scalar") -> RealScalar:
    match value:
        case RealScalar():
            return value

        case Scalar():
            return value.to_real()

        case int() | Fraction():
            return RealScalar(value)

        case _:
            raise FieldError(f"{value!r} is not an element of Q(√3)")


def coerce(value: Any) -> Any:
    """Turn ints into Fractions so that division never falls back to floats. Field elements pass through."""
    match value:
        case bool():
            raise FieldError("Booleans are not scalars")

        case int():
            return Fraction(value)

        case Fraction() | RealScalar() | Scalar():
            return value

        case _:
            raise FieldError(f"{value!r} is not an exact scalar")


def div(numerator: Any, denominator: Any) -> Any:
    if not denominator:
        raise FieldError("Division by zero")

    if isinstance(numerator, int) and isinstance(denominator, int):
        return Fraction(numerator, denominator)

    return numerator / denominator


def real_sign(value: "int | Fraction | RealScalar | Scalar") -> int:
    """Exact sign of a real scalar under √3 > 0."""
    match value:
        case int() | Fraction():
            return (value > 0) - (value < 0)

        case Scalar():
            return real_sign(value.to_real())

        case RealScalar(a=a, b=b):
            sign_a, sign_b = (a > 0) - (a < 0), (b > 0) - (b < 0)
            if sign_a == sign_b or not sign_b:
                return sign_a

            if not sign_a:
                return sign_b

            return sign_a if a * a > 3 * b * b else sign_b

        case _:
            raise FieldError(f"{value!r} is not an element of Q(√3)")


def scalar_to_json(value: Any) -> Any:
    match value:
        case Scalar():
            return [[c.numerator, c.denominator] for c in value.coeffs]

        case RealScalar(a=a, b=b):
            return [[a.numerator, a.denominator], [b.numerator, b.denominator]]

        case int() | Fraction():
            value = Fraction(value)
            return [value.numerator, value.denominator]

        case _:
            raise FieldError(f"{value!r} is not an exact scalar")


def scalar_from_json(data: Any) -> Any:
    """Inverse of scalar_to_json; the nesting depth and length tell the three encodings apart."""
    match data:
        case [int() as numerator, int() as denominator]:
            return Fraction(numerator, denominator)

        case [[int(), int()] as a, [int(), int()] as b]:
            return RealScalar(Fraction(*a), Fraction(*b))

        case [[int(), int()], [int(), int()], [int(), int()], [int(), int()]]:
            return Scalar._make(tuple(Fraction(*pair) for pair in data))

        case int():
            return Fraction(data)

        case _:
            raise FieldError(f"Cannot decode scalar from {data!r}")
