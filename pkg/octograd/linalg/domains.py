"""
Exact Domains

Bridge between octograd scalars and sympy's polynomial domains. Rational problems are solved over QQ and problems
with an irrational entry over QQ(√3); elements come back as Fraction, or RealScalar when the √3 part is nonzero.
"""


from fractions import Fraction
from typing import Any, Iterable, Mapping, Sequence

import sympy
from sympy import QQ, ZZ
from sympy.polys.domains.domain import Domain
from sympy.polys.matrices import DomainMatrix

from octograd.errors import DimensionMismatch, FieldError, PreconditionError
from octograd.scalars import RealScalar, Scalar, as_real, coerce

QQ_SQRT3 = QQ.algebraic_field(sympy.sqrt(3))

Row = Sequence[Any] | Mapping[int, Any]


def split(value: Any) -> tuple[Fraction, Fraction]:
    """(a, b) with value = a + b√3."""
    match coerce(value):
        case Fraction() as rational:
            return rational, Fraction(0)

        case RealScalar(a=a, b=b):
            return a, b

        case Scalar() as scalar:
            real = as_real(scalar)
            return real.a, real.b


def is_irrational(value: Any) -> bool:
    return isinstance(value, (RealScalar, Scalar)) and bool(split(value)[1])


def domain_of(values: Iterable[Any]) -> Domain:
    return QQ_SQRT3 if any(is_irrational(value) for value in values) else QQ


def _qq(value: Fraction) -> Any:
    return QQ(value.numerator, value.denominator)


def _fraction(element: Any) -> Fraction:
    return Fraction(int(element.numerator), int(element.denominator))


def to_domain(value: Any, domain: Domain) -> Any:
    a, b = split(value)
    if domain == QQ:
        if b:
            raise FieldError(f"{value!r} is not rational")

        return _qq(a)

    # dense coefficient list in the power basis of √3, leading coefficient first
    return domain([_qq(b), _qq(a)] if b else [_qq(a)] if a else [])


def from_domain(element: Any, domain: Domain) -> Any:
    if domain == ZZ:
        return int(element)

    if domain == QQ:
        return _fraction(element)

    match element.to_list():
        case []:
            return Fraction(0)

        case [a]:
            return _fraction(a)

        case [b, a]:
            return RealScalar(_fraction(a), _fraction(b))

        case coefficients:
            raise FieldError(f"Unexpected element {coefficients!r} of {domain}")


def support(row: Row) -> dict[int, Any]:
    items = row.items() if isinstance(row, Mapping) else enumerate(row)
    return {j: x for j, x in items if x}


def domain_matrix(rows: Iterable[Row], ncols: int, domain: Domain | None = None) -> DomainMatrix:
    """Sparse DomainMatrix of the rows, over the smallest of QQ and QQ(√3) holding every entry unless given."""
    rows = [support(row) for row in rows]
    if any(j >= ncols for row in rows for j in row):
        raise DimensionMismatch(f"Row entries beyond column {ncols}")

    if domain is None:
        domain = domain_of(x for row in rows for x in row.values())

    entries = {i: {j: to_domain(x, domain) for j, x in row.items()} for i, row in enumerate(rows) if row}
    return DomainMatrix(entries, (len(rows), ncols), domain)


def integer_matrix(rows: Sequence[Sequence[Any]], ncols: int) -> DomainMatrix:
    def integral(value: Any) -> int:
        a, b = split(value)
        if b or a.denominator != 1:
            raise PreconditionError(f"{value!r} is not an integer")

        return int(a)

    return DomainMatrix([[ZZ(integral(x)) for x in row] for row in rows], (len(rows), ncols), ZZ)


def rows_of(matrix: DomainMatrix) -> list[list[Any]]:
    domain = matrix.domain
    return [[from_domain(x, domain) for x in row] for row in matrix.to_list()]
