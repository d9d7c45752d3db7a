"""
Finitely Generated Abelian Groups

Grading groups are kept in invariant-factor normal form Z^r × Z_{n₁} × … × Z_{n_k} with n₁ | n₂ | … | n_k, so two
groups are equal exactly when their dataclasses are. Group law is written additively; the identity is `group.zero`.

Presentations (universal groups, groups given by arbitrary cyclic factors) are normalized with the Smith normal form.
"""


import itertools
import logging
from dataclasses import dataclass, field
from functools import reduce
from math import gcd, lcm
from typing import Hashable, Iterable, Iterator, Sequence

from octograd.errors import GroupError
from octograd.linalg.integer import hermite_normal_form, smith_normal_form
from octograd.linalg.matrix import Matrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FinAbGroup:
    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(self.torsion))
        if self.free_rank < 0:
            raise GroupError("Free rank must be non-negative")

        if any(n < 2 for n in self.torsion):
            raise GroupError(f"Invariant factors must be at least 2, got {self.torsion}")

        if any(b % a for a, b in zip(self.torsion, self.torsion[1:])):
            raise GroupError(f"Invariant factors must divide each other in order, got {self.torsion}")

    @classmethod
    def free(cls, rank: int) -> "FinAbGroup":
        return cls(rank, ())

    @classmethod
    def cyclic(cls, n: int) -> "FinAbGroup":
        return cls(0, (n,)) if n > 1 else cls()

    @classmethod
    def from_factors(cls, free_rank: int, factors: Sequence[int]) -> "tuple[FinAbGroup, tuple[GroupElem, ...]]":
        """Z^free_rank × Z_{f₁} × … in invariant-factor form, plus the images of the standard generators of the
        factor presentation (free generators first)."""
        ngens = free_rank + len(factors)
        relations = [[factor if j == free_rank + i else 0 for j in range(ngens)] for i, factor in enumerate(factors)]
        return presented_group(ngens, relations)

    @property
    def ngens(self) -> int:
        return self.free_rank + len(self.torsion)

    @property
    def is_finite(self) -> bool:
        return not self.free_rank

    @property
    def order(self) -> int | None:
        return reduce(lambda a, b: a * b, self.torsion, 1) if self.is_finite else None

    @property
    def zero(self) -> "GroupElem":
        return GroupElem(self, (0,) * self.free_rank, (0,) * len(self.torsion))

    identity = zero

    def element(self, free: Sequence[int] = (), torsion: Sequence[int] = ()) -> "GroupElem":
        return GroupElem(self, tuple(free) or (0,) * self.free_rank, tuple(torsion) or (0,) * len(self.torsion))

    def __call__(self, *coordinates: int) -> "GroupElem":
        """Element from its flat coordinate list: free coordinates first, then torsion residues."""
        if len(coordinates) != self.ngens:
            raise GroupError(f"{self} takes {self.ngens} coordinates, got {len(coordinates)}")

        return GroupElem(self, coordinates[: self.free_rank], coordinates[self.free_rank:])

    @property
    def gens(self) -> tuple["GroupElem", ...]:
        return tuple(self(*(1 if i == j else 0 for j in range(self.ngens))) for i in range(self.ngens))

    def elements(self) -> Iterator["GroupElem"]:
        if not self.is_finite:
            raise GroupError(f"Cannot enumerate the infinite group {self}")

        for residues in itertools.product(*(range(n) for n in self.torsion)):
            yield GroupElem(self, (), residues)

    def parse(self, text: str) -> "GroupElem":
        """Parse "free;torsion" coordinates such as "1,-1;2" (either side may be empty)."""
        if text.strip() == "e":
            return self.zero

        if ";" in text:
            free_text, _, torsion_text = text.partition(";")
        elif self.free_rank and self.torsion:
            raise GroupError(f"Elements of {self} are written as 'free;torsion', got {text!r}")
        elif self.free_rank:
            free_text, torsion_text = text, ""
        else:
            free_text, torsion_text = "", text

        free = tuple(int(x) for x in free_text.split(",") if x.strip())
        torsion = tuple(int(x) for x in torsion_text.split(",") if x.strip())
        return self.element(free, torsion)

    def product(self, other: "FinAbGroup") -> "tuple[FinAbGroup, GroupHom, GroupHom]":
        """Direct product in normal form with the two inclusion homomorphisms."""
        group, images = FinAbGroup.from_factors(
            self.free_rank + other.free_rank, (*self.torsion, *other.torsion)
        )
        free_left, free_right = images[: self.free_rank], images[self.free_rank: self.free_rank + other.free_rank]
        torsion_images = images[self.free_rank + other.free_rank:]
        left = GroupHom(self, group, (*free_left, *torsion_images[: len(self.torsion)]))
        right = GroupHom(other, group, (*free_right, *torsion_images[len(self.torsion):]))
        return group, left, right

    def __str__(self):
        parts = ([f"Z^{self.free_rank}"] if self.free_rank > 1 else ["Z"] if self.free_rank else []) + [
            f"Z{n}" for n in self.torsion
        ]
        return " x ".join(parts) or "1"

    def to_json(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}

    @classmethod
    def from_json(cls, data: dict) -> "FinAbGroup":
        return cls(data["free_rank"], tuple(data["torsion"]))


@dataclass(frozen=True)
class GroupElem:
    group: FinAbGroup = field(repr=False)
    free: tuple[int, ...]
    torsion: tuple[int, ...]

    def __post_init__(self):
        if len(self.free) != self.group.free_rank or len(self.torsion) != len(self.group.torsion):
            raise GroupError(f"Element coordinates {self.free};{self.torsion} do not fit {self.group}")

        object.__setattr__(self, "free", tuple(int(x) for x in self.free))
        object.__setattr__(
            self, "torsion", tuple(int(x) % n for x, n in zip(self.torsion, self.group.torsion))
        )

    @property
    def coordinates(self) -> tuple[int, ...]:
        return self.free + self.torsion

    def _require_same_group(self, other: "GroupElem"):
        if not isinstance(other, GroupElem) or other.group != self.group:
            raise GroupError(f"Elements of different groups: {self.group} and {getattr(other, 'group', other)}")

    def __add__(self, other: "GroupElem") -> "GroupElem":
        self._require_same_group(other)
        return GroupElem(
            self.group,
            tuple(a + b for a, b in zip(self.free, other.free)),
            tuple(a + b for a, b in zip(self.torsion, other.torsion)),
        )

    def __neg__(self) -> "GroupElem":
        return GroupElem(self.group, tuple(-a for a in self.free), tuple(-a for a in self.torsion))

    def __sub__(self, other: "GroupElem") -> "GroupElem":
        return self + -other

    def __mul__(self, k: int) -> "GroupElem":
        return GroupElem(self.group, tuple(k * a for a in self.free), tuple(k * a for a in self.torsion))

    __rmul__ = __mul__

    @property
    def is_identity(self) -> bool:
        return not any(self.free) and not any(self.torsion)

    @property
    def order(self) -> int | None:
        """Least k ≥ 1 with k·x = 0, or None when x has infinite order."""
        if any(self.free):
            return None

        return reduce(lcm, (n // gcd(n, r) for r, n in zip(self.torsion, self.group.torsion)), 1)

    def __str__(self):
        free = ",".join(str(a) for a in self.free)
        torsion = ",".join(str(a) for a in self.torsion)
        if self.group.free_rank and self.group.torsion:
            return f"{free};{torsion}"

        return free or torsion or "e"

    def to_json(self) -> dict:
        return {"free": list(self.free), "torsion": list(self.torsion)}

    @classmethod
    def from_json(cls, group: FinAbGroup, data: dict) -> "GroupElem":
        return cls(group, tuple(data["free"]), tuple(data["torsion"]))


@dataclass(frozen=True)
class GroupHom:
    """Homomorphism given by the images of the standard generators of the domain."""

    domain: FinAbGroup
    codomain: FinAbGroup
    images: tuple[GroupElem, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if len(self.images) != self.domain.ngens:
            raise GroupError(f"{self.domain} needs {self.domain.ngens} generator images, got {len(self.images)}")

        for image in self.images:
            if image.group != self.codomain:
                raise GroupError("Generator image is not an element of the codomain")

        for n, image in zip(self.domain.torsion, self.images[self.domain.free_rank:]):
            if not (image * n).is_identity:
                raise GroupError(f"Image {image} of a generator of order {n} has order {image.order}")

    @classmethod
    def identity(cls, group: FinAbGroup) -> "GroupHom":
        return cls(group, group, group.gens)

    @classmethod
    def zero(cls, domain: FinAbGroup, codomain: FinAbGroup) -> "GroupHom":
        return cls(domain, codomain, (codomain.zero,) * domain.ngens)

    def __call__(self, element: GroupElem) -> GroupElem:
        if element.group != self.domain:
            raise GroupError(f"{element} is not in the domain {self.domain}")

        result = self.codomain.zero
        for coefficient, image in zip(element.coordinates, self.images):
            if coefficient:
                result = result + image * coefficient

        return result

    def compose(self, inner: "GroupHom") -> "GroupHom":
        """self ∘ inner."""
        return GroupHom(inner.domain, self.codomain, tuple(self(image) for image in inner.images))

    def in_kernel(self, element: GroupElem) -> bool:
        return self(element).is_identity


class Subgroup:
    """Subgroup of an ambient group given by generators.

    The subgroup is identified with the lattice of its lifts in Z^(r+k) (torsion relations included); the Hermite
    normal form of that lattice is canonical and gives the canonical generating set.
    """

    def __init__(self, ambient: FinAbGroup, generators: Iterable[GroupElem]):
        self.ambient = ambient
        generators = tuple(generators)
        for generator in generators:
            if generator.group != ambient:
                raise GroupError(f"{generator} is not an element of {ambient}")

        width = ambient.ngens
        relations = [
            [n if j == ambient.free_rank + i else 0 for j in range(width)] for i, n in enumerate(ambient.torsion)
        ]
        self._lattice = tuple(
            tuple(row) for row in hermite_normal_form([*(g.coordinates for g in generators), *relations], width)
        )
        self.generators = tuple(
            element for element in (ambient(*row) for row in self._lattice) if not element.is_identity
        )

    def __contains__(self, element: GroupElem) -> bool:
        return self.contains(element)

    def contains(self, element: GroupElem) -> bool:
        if element.group != self.ambient:
            raise GroupError(f"{element} is not an element of {self.ambient}")

        remainder = list(element.coordinates)
        for row in self._lattice:
            pivot = next(j for j, x in enumerate(row) if x)
            quotient, residue = divmod(remainder[pivot], row[pivot])
            if residue:
                return False

            remainder = [a - quotient * b for a, b in zip(remainder, row)]

        return not any(remainder)

    @property
    def is_finite(self) -> bool:
        return all(generator.order is not None for generator in self.generators)

    @property
    def order(self) -> int | None:
        if not self.is_finite:
            return None

        pivots = reduce(lambda a, b: a * b, (row[next(j for j, x in enumerate(row) if x)] for row in self._lattice), 1)
        return reduce(lambda a, b: a * b, self.ambient.torsion, 1) // pivots

    def elements(self) -> frozenset[GroupElem]:
        if not self.is_finite:
            raise GroupError("Cannot enumerate an infinite subgroup")

        found = {self.ambient.zero}
        frontier = [self.ambient.zero]
        while frontier:
            element = frontier.pop()
            for generator in self.generators:
                candidate = element + generator
                if candidate not in found:
                    found.add(candidate)
                    frontier.append(candidate)

        return frozenset(found)

    def is_elementary_abelian_2(self) -> bool:
        return all((generator * 2).is_identity for generator in self.generators)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subgroup):
            return NotImplemented

        return self.ambient == other.ambient and self._lattice == other._lattice

    def __hash__(self):
        return hash((self.ambient, self._lattice))

    def __repr__(self):
        return f"<Subgroup of {self.ambient} generated by {', '.join(str(g) for g in self.generators) or 'e'}>"


def subgroup_generated(generators: Sequence[GroupElem], ambient: FinAbGroup | None = None) -> Subgroup:
    if ambient is None:
        if not generators:
            raise GroupError("The ambient group of an empty generating set must be given")

        ambient = generators[0].group

    return Subgroup(ambient, generators)


class Character:
    """A homomorphism μ: T → {±1} on an elementary abelian 2-subgroup T, given by its values on a basis of T."""

    def __init__(self, basis: Sequence[GroupElem], values: Sequence[int]):
        if len(basis) != len(values) or any(v not in (1, -1) for v in values):
            raise GroupError("A character needs one value ±1 per basis element")

        self.basis = tuple(basis)
        self.values = tuple(values)
        self.subgroup = subgroup_generated(self.basis, self.basis[0].group if self.basis else None)
        self._table: dict[GroupElem, int] = {}
        for exponents in itertools.product((0, 1), repeat=len(self.basis)):
            element = self.subgroup.ambient.zero
            sign = 1
            for exponent, generator, value in zip(exponents, self.basis, self.values):
                if exponent:
                    element = element + generator
                    sign *= value

            if self._table.setdefault(element, sign) != sign:
                raise GroupError("Character values are inconsistent with the relations of T")

        if self.subgroup.order != len(self._table):
            raise GroupError("Character basis must be independent and T elementary abelian of exponent 2")

    def __call__(self, element: GroupElem) -> int:
        if element not in self._table:
            raise GroupError(f"{element} is not in the domain of the character")

        return self._table[element]

    @property
    def is_trivial(self) -> bool:
        return all(value == 1 for value in self.values)

    def table(self) -> dict[GroupElem, int]:
        return dict(self._table)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Character):
            return NotImplemented

        return self.subgroup == other.subgroup and self._table == other._table

    def __hash__(self):
        return hash((self.subgroup, frozenset(self._table.items())))

    def __repr__(self):
        return f"Character({', '.join(f'{g}->{v:+d}' for g, v in zip(self.basis, self.values))})"


def characters(basis: Sequence[GroupElem]) -> list[Character]:
    """All 2^r characters of the elementary abelian 2-group with the given basis, trivial one first."""
    return [
        Character(basis, tuple(-1 if bit else 1 for bit in bits))
        for bits in itertools.product((0, 1), repeat=len(basis))
    ]


def presented_group(
    ngens: int, relations: Sequence[Sequence[int]]
) -> tuple[FinAbGroup, tuple[GroupElem, ...]]:
    """The abelian group ⟨x₁..x_n | rows of `relations`⟩ in invariant-factor form with the images of the x_i."""
    if not relations:
        relations = [[0] * ngens]

    smith, _, v = smith_normal_form([list(row) for row in relations])
    diagonal = [smith[j, j] if j < min(smith.nrows, smith.ncols) else 0 for j in range(ngens)]
    torsion_positions = [j for j, d in enumerate(diagonal) if d > 1]
    free_positions = [j for j, d in enumerate(diagonal) if d == 0]
    group = FinAbGroup(len(free_positions), tuple(diagonal[j] for j in torsion_positions))
    images = tuple(
        GroupElem(group, tuple(v[i, j] for j in free_positions), tuple(v[i, j] for j in torsion_positions))
        for i in range(ngens)
    )
    return group, images


def universal_group(
    support: Sequence[Hashable], relations: Iterable[tuple[Hashable, Hashable, Hashable | None]]
) -> tuple[FinAbGroup, dict[Hashable, GroupElem]]:
    """Abelian group generated by the support labels subject to s₁ + s₂ = s₃ for every relation.

    A relation whose third entry is None reads s₁ + s₂ = 0. Relations are sorted first so the result does not depend
    on the order in which they were collected.
    """
    index = {label: i for i, label in enumerate(support)}
    rows = set()
    for s1, s2, s3 in relations:
        row = [0] * len(support)
        row[index[s1]] += 1
        row[index[s2]] += 1
        if s3 is not None:
            row[index[s3]] -= 1

        rows.add(tuple(row))

    group, images = presented_group(len(support), sorted(rows))
    logger.debug("universal group of %d labels and %d relations: %s", len(support), len(rows), group)
    return group, {label: images[i] for label, i in index.items()}


@dataclass(frozen=True)
class Presentation:
    """An abelian group presented on labelled generators: images of the labels and, for each standard generator of
    the group, an integer word in the labels mapping onto it."""

    group: FinAbGroup
    images: dict[Hashable, GroupElem]
    words: tuple[dict[Hashable, int], ...] = field(default=())

    def hom_to(self, values: dict[Hashable, GroupElem], codomain: FinAbGroup) -> "GroupHom":
        """The homomorphism sending each label's image to the given value; the values must satisfy the relations."""
        images = []
        for word in self.words:
            image = codomain.zero
            for label, coefficient in word.items():
                image = image + values[label] * coefficient

            images.append(image)

        hom = GroupHom(self.group, codomain, tuple(images))
        if any(hom(self.images[label]) != value for label, value in values.items()):
            raise GroupError("Values do not satisfy the relations of the presentation")

        return hom


def universal_presentation(
    support: Sequence[Hashable], relations: Iterable[tuple[Hashable, Hashable, Hashable | None]]
) -> Presentation:
    group, images = universal_group(support, relations)
    matrix = Matrix([[images[label].coordinates[j] for j in range(group.ngens)] for label in support], group.ngens)
    words = []
    for generator in group.gens:
        word = _solve_word(matrix, generator, group)
        words.append({support[i]: c for i, c in enumerate(word) if c})

    return Presentation(group, images, tuple(words))


def _solve_word(images: Matrix, target: GroupElem, group: FinAbGroup) -> list[int]:
    """Integer combination of the label images equal to the target (labels generate the group)."""
    width = group.ngens
    relations = [[n if j == group.free_rank + i else 0 for j in range(width)] for i, n in enumerate(group.torsion)]
    rows = [list(row) for row in images.rows] + relations
    # x · rows = target over Z: Smith form of the stacked rows
    smith, u, v = smith_normal_form(rows)
    rhs = [sum(target.coordinates[k] * v[k, j] for k in range(width)) for j in range(width)]
    y = []
    for j in range(width):
        d = smith[j, j] if j < min(smith.nrows, smith.ncols) else 0
        if d == 0:
            if rhs[j]:
                raise GroupError(f"{target} is not generated by the labels")

            y.append(0)
        else:
            if rhs[j] % d:
                raise GroupError(f"{target} is not generated by the labels")

            y.append(rhs[j] // d)

    y.extend([0] * (smith.nrows - width))
    solution = [sum(y[k] * u[k, i] for k in range(smith.nrows)) for i in range(smith.nrows)]
    return solution[: len(images.rows)]
