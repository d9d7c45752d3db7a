from abc import ABC, abstractmethod
from functools import cache
from typing import Type, TypeAlias

from tramp.optionals import Optional

from octograd.composition.algebra import SCAlgebra
from octograd.composition.hurwitz import ground_field, hurwitz_algebra, split_cayley_good_basis

AlgebraName: TypeAlias = str


class NamedAlgebra(ABC):
    __algebras__: "dict[AlgebraName, Type[NamedAlgebra]]" = {}
    algebra_name: AlgebraName
    nice_name: str

    def __init_subclass__(cls, **kwargs):
        cls.algebra_name = kwargs.pop("algebra_name", getattr(cls, "algebra_name", cls.__name__))
        cls.nice_name = kwargs.pop("nice_name", getattr(cls, "nice_name", cls.__name__))

        super().__init_subclass__(**kwargs)
        NamedAlgebra.__algebras__[cls.algebra_name] = cls

    @classmethod
    @abstractmethod
    def build(cls) -> SCAlgebra:
        ...


class GroundField(NamedAlgebra, algebra_name="F", nice_name="Ground field"):
    @classmethod
    def build(cls) -> SCAlgebra:
        return ground_field()


class ComplexNumbers(NamedAlgebra, algebra_name="C", nice_name="Complex numbers CD(F,-1)"):
    @classmethod
    def build(cls) -> SCAlgebra:
        return hurwitz_algebra(-1, name="C")


class SplitComplex(NamedAlgebra, algebra_name="Cs", nice_name="Split quadratic algebra CD(F,1)"):
    @classmethod
    def build(cls) -> SCAlgebra:
        return hurwitz_algebra(1, name="Cs")


class Quaternions(NamedAlgebra, algebra_name="H", nice_name="Quaternions CD(F,-1,-1)"):
    @classmethod
    def build(cls) -> SCAlgebra:
        return hurwitz_algebra(-1, -1, name="H")


class SplitQuaternions(NamedAlgebra, algebra_name="Hs", nice_name="Split quaternions CD(F,1,1)"):
    @classmethod
    def build(cls) -> SCAlgebra:
        return hurwitz_algebra(1, 1, name="Hs")


class Octonions(NamedAlgebra, algebra_name="O", nice_name="Octonions CD(F,-1,-1,-1)"):
    @classmethod
    def build(cls) -> SCAlgebra:
        return hurwitz_algebra(-1, -1, -1, name="O")


class SplitOctonions(NamedAlgebra, algebra_name="Os", nice_name="Split octonions CD(F,1,1,1)"):
    @classmethod
    def build(cls) -> SCAlgebra:
        return hurwitz_algebra(1, 1, 1, name="Os")


class SplitCayleyGoodBasis(NamedAlgebra, algebra_name="split-cayley", nice_name="Split Cayley algebra, good basis"):
    @classmethod
    def build(cls) -> SCAlgebra:
        return split_cayley_good_basis()


def find_algebra(name: AlgebraName) -> Optional[Type[NamedAlgebra]]:
    match NamedAlgebra.__algebras__.get(name):
        case None:
            return Optional.Nothing()
        case constructor:
            return Optional.Some(constructor)


@cache
def get_algebra(name: AlgebraName) -> SCAlgebra:
    """Builds (once) the named algebra. Raises KeyError for unknown names."""
    match find_algebra(name):
        case Optional.Some(constructor):
            return constructor.build()
        case _:
            raise KeyError(f"Unknown algebra {name!r}, expected one of {', '.join(NamedAlgebra.__algebras__)}")


def algebra_names() -> list[AlgebraName]:
    return list(NamedAlgebra.__algebras__)
