"""
Grading Labels

Labels are the classification data of the Cayley-algebra gradings. Each label kind registers itself by name so label
files can be decoded, and decides isomorphism with another label of the same kind.
"""


import itertools
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Type, TypeAlias

from octograd.errors import CodecError, PreconditionError
from octograd.groups import Character, FinAbGroup, GroupElem

LabelKind: TypeAlias = str


class GradingLabel(ABC):
    __labels__: "dict[LabelKind, Type[GradingLabel]]" = {}
    label_kind: LabelKind

    def __init_subclass__(cls, **kwargs):
        cls.label_kind = kwargs.pop("label_kind", getattr(cls, "label_kind", cls.__name__))

        super().__init_subclass__(**kwargs)
        GradingLabel.__labels__[cls.label_kind] = cls

    @property
    @abstractmethod
    def group(self) -> FinAbGroup:
        ...

    def normalized(self) -> "GradingLabel":
        return self

    def is_isomorphic_to(self, other: "GradingLabel") -> bool:
        return self == other

    @abstractmethod
    def to_json(self) -> dict:
        ...

    @classmethod
    @abstractmethod
    def from_json(cls, group: FinAbGroup, data: dict) -> "GradingLabel":
        ...


def label_to_json(label: GradingLabel) -> dict:
    return {"kind": label.label_kind, "group": label.group.to_json(), **label.to_json()}


def label_from_json(data: dict) -> GradingLabel:
    match GradingLabel.__labels__.get(data.get("kind")):
        case None:
            raise CodecError(f"Unknown label kind {data.get('kind')!r}")
        case label_type:
            return label_type.from_json(FinAbGroup.from_json(data["group"]), data)


def iso_decision(first: GradingLabel, second: GradingLabel) -> bool:
    """Whether the gradings with these labels are isomorphic (valid over real closed fields)."""
    if first.group != second.group:
        raise PreconditionError(f"Labels over different groups: {first.group} and {second.group}")

    first, second = first.normalized(), second.normalized()
    if type(first) is not type(second):
        return False

    return first.is_isomorphic_to(second)


def character_to_json(mu: Character) -> dict:
    return {"basis": [t.to_json() for t in mu.basis], "values": list(mu.values)}


def character_from_json(group: FinAbGroup, data: dict) -> Character:
    return Character([GroupElem.from_json(group, t) for t in data["basis"]], data["values"])


@dataclass(frozen=True)
class TrivialLabel(GradingLabel, label_kind="trivial"):
    algebra: str
    over: FinAbGroup

    @property
    def group(self) -> FinAbGroup:
        return self.over

    def to_json(self) -> dict:
        return {"algebra": self.algebra}

    @classmethod
    def from_json(cls, group: FinAbGroup, data: dict) -> "TrivialLabel":
        return cls(data["algebra"], group)

    def __str__(self):
        return f"trivial grading on {self.algebra}"


@dataclass(frozen=True)
class CartanTriple(GradingLabel, label_kind="cartan"):
    """Γ_Cs(G, γ) for γ = (g₁, g₂, g₃) with g₁ + g₂ + g₃ = e."""

    gamma: tuple[GroupElem, GroupElem, GroupElem]

    def __post_init__(self):
        if len(self.gamma) != 3:
            raise PreconditionError("A Cartan label needs three degrees")

        if not (self.gamma[0] + self.gamma[1] + self.gamma[2]).is_identity:
            raise PreconditionError(f"Degrees {', '.join(map(str, self.gamma))} do not multiply to e")

    @property
    def group(self) -> FinAbGroup:
        return self.gamma[0].group

    def normalized(self) -> GradingLabel:
        if all(g.is_identity for g in self.gamma):
            return TrivialLabel("Os", self.group)

        return self

    def is_isomorphic_to(self, other: "CartanTriple") -> bool:
        """γ′ ∼ γ: γ′_i = γ_{π(i)}^k for some π ∈ Sym(3) and k = ±1."""
        return any(
            tuple(self.gamma[pi[i]] * k for i in range(3)) == other.gamma
            for pi in itertools.permutations(range(3))
            for k in (1, -1)
        )

    def to_json(self) -> dict:
        return {"gamma": [g.to_json() for g in self.gamma]}

    @classmethod
    def from_json(cls, group: FinAbGroup, data: dict) -> "CartanTriple":
        return cls(tuple(GroupElem.from_json(group, g) for g in data["gamma"]))

    def __str__(self):
        return f"Cartan({', '.join(map(str, self.gamma))})"


@dataclass(frozen=True)
class QuaternionType(GradingLabel, label_kind="cd-quaternion"):
    """Γ_C(G, H, T) with T = ⟨t⟩ of order 2."""

    algebra: str
    t: GroupElem

    @property
    def group(self) -> FinAbGroup:
        return self.t.group

    def to_json(self) -> dict:
        return {"algebra": self.algebra, "t": self.t.to_json()}

    @classmethod
    def from_json(cls, group: FinAbGroup, data: dict) -> "QuaternionType":
        return cls(data["algebra"], GroupElem.from_json(group, data["t"]))

    def __str__(self):
        return f"Γ_{self.algebra}(H, <{self.t}>)"


@dataclass(frozen=True)
class QuadraticType(GradingLabel, label_kind="cd-quadratic"):
    """Γ_C(G, K, T, μ) with T elementary abelian of order 4."""

    algebra: str
    mu: Character

    @property
    def group(self) -> FinAbGroup:
        return self.mu.subgroup.ambient

    def to_json(self) -> dict:
        return {"algebra": self.algebra, "mu": character_to_json(self.mu)}

    @classmethod
    def from_json(cls, group: FinAbGroup, data: dict) -> "QuadraticType":
        return cls(data["algebra"], character_from_json(group, data["mu"]))

    def __str__(self):
        return f"Γ_{self.algebra}(K, {self.mu})"


@dataclass(frozen=True)
class FullType(GradingLabel, label_kind="cd-full"):
    """Γ_C(G, F, T, μ) with T elementary abelian of order 8."""

    algebra: str
    mu: Character

    @property
    def group(self) -> FinAbGroup:
        return self.mu.subgroup.ambient

    def to_json(self) -> dict:
        return {"algebra": self.algebra, "mu": character_to_json(self.mu)}

    @classmethod
    def from_json(cls, group: FinAbGroup, data: dict) -> "FullType":
        return cls(data["algebra"], character_from_json(group, data["mu"]))

    def __str__(self):
        return f"Γ_{self.algebra}(F, {self.mu})"
