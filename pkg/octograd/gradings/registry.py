from abc import ABC, abstractmethod
from functools import cache
from typing import Type, TypeAlias

from tramp.optionals import Optional

GradingName: TypeAlias = str


class NamedGrading(ABC):
    """Registry of the named (fine) gradings. Subclasses register under `grading_name`."""

    __gradings__: "dict[GradingName, Type[NamedGrading]]" = {}
    grading_name: GradingName
    nice_name: str

    def __init_subclass__(cls, **kwargs):
        cls.grading_name = kwargs.pop("grading_name", getattr(cls, "grading_name", cls.__name__))
        cls.nice_name = kwargs.pop("nice_name", getattr(cls, "nice_name", cls.__name__))

        super().__init_subclass__(**kwargs)
        NamedGrading.__gradings__[cls.grading_name] = cls

    @classmethod
    @abstractmethod
    def build(cls) -> "Grading":
        ...

    @staticmethod
    def find(name: GradingName) -> "Optional[Type[NamedGrading]]":
        match NamedGrading.__gradings__.get(name):
            case None:
                return Optional.Nothing()
            case grading_type:
                return Optional.Some(grading_type)

    @staticmethod
    @cache
    def build_named(name: GradingName) -> "Grading":
        match NamedGrading.find(name):
            case Optional.Some(grading_type):
                return grading_type.build()
            case _:
                raise KeyError(f"Unknown grading {name!r}, expected one of {', '.join(NamedGrading.__gradings__)}")


def grading_names() -> list[GradingName]:
    return list(NamedGrading.__gradings__)
