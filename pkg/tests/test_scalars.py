from fractions import Fraction

import pytest

from octograd.errors import FieldError
from octograd.scalars import (
    I,
    OMEGA,
    ONE,
    SQRT3,
    ZETA,
    RealScalar,
    Scalar,
    as_real,
    coerce,
    div,
    omega_power,
    real_sign,
    scalar_from_json,
    scalar_to_json,
)


def test_zeta_has_order_twelve():
    assert ZETA ** 12 == ONE
    assert all(ZETA ** k != ONE for k in range(1, 12))
    assert ZETA ** 3 == I
    assert ZETA ** 4 == OMEGA


def test_omega_is_a_primitive_cube_root():
    assert OMEGA ** 3 == 1
    assert 1 + OMEGA + OMEGA * OMEGA == 0
    assert omega_power(-1) == OMEGA * OMEGA
    assert OMEGA.real_part() == Fraction(-1, 2)
    assert OMEGA.imag_part() == SQRT3 * Fraction(1, 2)


def test_root_three_squares_to_three():
    assert SQRT3 * SQRT3 == 3
    assert Scalar.from_value(SQRT3) ** 2 == 3
    assert Scalar.from_value(SQRT3).to_real() == SQRT3


def test_real_scalar_arithmetic():
    x = RealScalar(1, 1)
    assert x * x.conjugate() == -2
    assert x * x.inverse() == 1
    assert 2 - x == RealScalar(1, -1)
    assert (x / 2) * 2 == x
    assert hash(RealScalar(3)) == hash(Fraction(3))


@pytest.mark.parametrize(
    "value, sign",
    [(RealScalar(2, -1), 1), (RealScalar(-2, 1), -1), (RealScalar(1, -1), -1), (RealScalar(0, 0), 0), (Fraction(-1, 3), -1)],
    ids=["2-√3", "√3-2", "1-√3", "zero", "rational"],
)
def test_real_sign(value, sign):
    assert real_sign(value) == sign


def test_real_comparisons():
    assert SQRT3 > Fraction(17, 10)
    assert SQRT3 < Fraction(7, 4)
    assert sorted([SQRT3, Fraction(2), Fraction(1)]) == [1, SQRT3, 2]


def test_complex_parts_and_conjugation():
    z = Scalar.from_parts(Fraction(1, 2), SQRT3)
    assert z.real_part() == Fraction(1, 2)
    assert z.imag_part() == SQRT3
    assert not z.is_real
    assert (z * z.conjugate()).is_real
    assert (z * z.conjugate()).to_real() == Fraction(1, 4) + 3
    assert I * I == -1


def test_scalar_inverse():
    z = Scalar(1, 2, -1, 3)
    assert z * z.inverse() == ONE
    assert z / z == 1


def test_errors():
    with pytest.raises(FieldError):
        div(Fraction(1), 0)

    with pytest.raises(FieldError):
        coerce(True)

    with pytest.raises(FieldError):
        coerce(0.5)

    with pytest.raises(FieldError):
        as_real(I)

    with pytest.raises(FieldError):
        scalar_from_json("1/2")


def test_div_keeps_exact_types():
    assert div(1, 3) == Fraction(1, 3)
    assert isinstance(div(1, 3), Fraction)
    assert div(SQRT3, SQRT3) == 1


@pytest.mark.parametrize(
    "value", [Fraction(-3, 4), RealScalar(1, Fraction(-1, 2)), Scalar(1, 0, Fraction(2, 3), -1)], ids=["Q", "Q(√3)", "Q(ζ)"]
)
def test_json_encoding(value):
    encoded = scalar_to_json(value)
    assert scalar_from_json(encoded) == value
    assert type(scalar_from_json(encoded)) is type(value)
