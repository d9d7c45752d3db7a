"""
Group Gradings

A Grading decomposes the carrier space of a graded target (an algebra, a Lie algebra or a twisted composition) into
canonical Subspaces indexed by elements of a FinAbGroup. What it means to be graded is owned by the target: it lists
the laws that must be degree-compatible (products, forms, involutions, module actions) and verify_grading checks
every one of them on component bases.
"""


import itertools
import logging
from abc import ABC, abstractmethod
from collections import Counter
from dataclasses import dataclass
from typing import Any, Callable, Iterable, Mapping, Type, TypeAlias

from tramp.optionals import Optional

from octograd.errors import CodecError, DimensionMismatch, GroupError, PreconditionError
from octograd.groups import FinAbGroup, GroupElem, GroupHom, Presentation, universal_presentation
from octograd.linalg import Inertia, Matrix, Subspace, Vector, gram_restriction, inertia_of
from octograd.results import VerificationReport

logger = logging.getLogger(__name__)

TargetKind: TypeAlias = str


@dataclass(frozen=True)
class BilinearLaw:
    """A bilinear map that must satisfy law(U_g, U_h) ⊆ values_{g+h}. When `values` is None the map takes values in
    the graded space itself and its nonzero products give the relations of the universal group."""

    name: str
    apply: Callable[[Vector, Vector], Vector]
    values: Mapping[GroupElem, Subspace] | None = None
    symmetric: bool = False


@dataclass(frozen=True)
class LinearLaw:
    """A linear map that must carry U_g into U_{g+shift}."""

    name: str
    matrix: Matrix
    shift: GroupElem | None = None


Law: TypeAlias = BilinearLaw | LinearLaw


class GradedTarget(ABC):
    __targets__: "dict[TargetKind, Type[GradedTarget]]" = {}
    target_kind: TargetKind

    def __init_subclass__(cls, **kwargs):
        cls.target_kind = kwargs.pop("target_kind", getattr(cls, "target_kind", cls.__name__))

        super().__init_subclass__(**kwargs)
        GradedTarget.__targets__[cls.target_kind] = cls

    @property
    @abstractmethod
    def dim(self) -> int:
        ...

    @property
    @abstractmethod
    def name(self) -> str:
        ...

    @abstractmethod
    def laws(self, grading: "Grading") -> list[Law]:
        ...

    def form(self) -> Optional[Matrix]:
        """Gram matrix of the invariant form used by fingerprints."""
        return Optional.Nothing()

    @abstractmethod
    def to_json(self) -> dict:
        ...

    @classmethod
    @abstractmethod
    def from_json(cls, data: dict) -> "GradedTarget":
        ...


def target_from_json(data: dict) -> GradedTarget:
    match GradedTarget.__targets__.get(data.get("kind")):
        case None:
            raise CodecError(f"Unknown graded target kind {data.get('kind')!r}")
        case target_type:
            return target_type.from_json(data)


def target_to_json(target: GradedTarget) -> dict:
    return {"kind": target.target_kind, **target.to_json()}


class Grading:
    def __init__(
        self,
        group: FinAbGroup,
        components: Mapping[GroupElem, Subspace] | Iterable[tuple[GroupElem, Subspace]],
        target: GradedTarget,
        label: Any = None,
        parameters: Mapping[str, GroupElem] | None = None,
    ):
        self.group = group
        self.target = target
        self.label = label
        self.parameters = dict(parameters or {})
        items = components.items() if isinstance(components, Mapping) else components
        collected: dict[GroupElem, Subspace] = {}
        for degree, space in items:
            if degree.group != group:
                raise GroupError(f"Degree {degree} is not an element of {group}")

            if space.ambient_dim != target.dim:
                raise DimensionMismatch(f"Component at {degree} lives in dim {space.ambient_dim}, not {target.dim}")

            if degree in collected:
                raise PreconditionError(f"Degree {degree} appears twice")

            if not space.is_zero():
                collected[degree] = space

        self.components: dict[GroupElem, Subspace] = dict(
            sorted(collected.items(), key=lambda item: item[0].coordinates)
        )

    @property
    def support(self) -> tuple[GroupElem, ...]:
        return tuple(self.components)

    def component(self, degree: GroupElem) -> Optional[Subspace]:
        match self.components.get(degree):
            case None:
                return Optional.Nothing()
            case space:
                return Optional.Some(space)

    def dims(self) -> dict[GroupElem, int]:
        return {degree: space.dim for degree, space in self.components.items()}

    def census(self) -> Counter:
        """Number of components of each dimension."""
        return Counter(space.dim for space in self.components.values())

    def degree_of(self, vector: Vector) -> Optional[GroupElem]:
        """Degree of a nonzero homogeneous vector."""
        for degree, space in self.components.items():
            if vector in space:
                return Optional.Some(degree)

        return Optional.Nothing()

    def with_label(self, label: Any) -> "Grading":
        return Grading(self.group, self.components, self.target, label, self.parameters)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Grading):
            return NotImplemented

        return self.group == other.group and self.components == other.components and self.target is other.target

    __hash__ = None

    def __repr__(self):
        census = ", ".join(f"{count}x{dim}" for dim, count in sorted(self.census().items()))
        return f"<Grading by {self.group} on {self.target.name}: {census}>"


# ---------------------------- #
# Verification                 #
# ---------------------------- #


def verify_grading(grading: Grading) -> VerificationReport:
    report = VerificationReport(f"grading on {grading.target.name}")
    components = grading.components
    if not components:
        report.failed("direct sum", None, "grading has no components")
        return report

    total = sum(space.dim for space in components.values())
    spanned = Subspace([v for space in components.values() for v in space.basis], grading.target.dim)
    if total == spanned.dim == grading.target.dim:
        report.passed("direct sum", total)
    else:
        report.failed(
            "direct sum", (total, spanned.dim), f"component dims sum to {total}, span {spanned.dim}, "
            f"ambient {grading.target.dim}"
        )

    for law in grading.target.laws(grading):
        match law:
            case BilinearLaw():
                _verify_bilinear(grading, law, report)
            case LinearLaw():
                _verify_linear(grading, law, report)

    for failure in report.failures:
        logger.info("%s: %s failed with witness %r", report.subject, failure.name, failure.witness)

    return report


def _component_pairs(grading: Grading, symmetric: bool):
    items = list(grading.components.items())
    if symmetric:
        return itertools.combinations_with_replacement(items, 2)

    return itertools.product(items, repeat=2)


def _verify_bilinear(grading: Grading, law: BilinearLaw, report: VerificationReport):
    values = grading.components if law.values is None else law.values
    for (g, left), (h, right) in _component_pairs(grading, law.symmetric):
        expected = values.get(g + h)
        for i, x in enumerate(left.basis):
            for j, y in enumerate(right.basis):
                product = law.apply(x, y)
                if any(product) and (expected is None or product not in expected):
                    report.failed(law.name, (g, h, i, j), f"{law.name} of components {g} and {h} leaves {g + h}")
                    return

    report.passed(law.name)


def _verify_linear(grading: Grading, law: LinearLaw, report: VerificationReport):
    shift = law.shift or grading.group.zero
    for g, space in grading.components.items():
        expected = grading.components.get(g + shift)
        for i, x in enumerate(space.basis):
            image = law.matrix.apply(x)
            if any(image) and (expected is None or image not in expected):
                report.failed(law.name, (g, i), f"{law.name} does not map component {g} into {g + shift}")
                return

    report.passed(law.name)


# ---------------------------- #
# Constructions                #
# ---------------------------- #


def trivial_grading(target: GradedTarget, group: FinAbGroup | None = None, label: Any = None) -> Grading:
    group = group or FinAbGroup()
    return Grading(group, {group.zero: Subspace.full(target.dim)}, target, label)


def induce(grading: Grading, hom: GroupHom, label: Any = None) -> Grading:
    """The H-grading ^αΓ: the component at h is the sum of the U_g with α(g) = h."""
    if hom.domain != grading.group:
        raise GroupError(f"Cannot induce a {grading.group}-grading along a map from {hom.domain}")

    merged: dict[GroupElem, Subspace] = {}
    for degree, space in grading.components.items():
        image = hom(degree)
        merged[image] = merged[image] + space if image in merged else space

    parameters = {key: hom(value) for key, value in grading.parameters.items()}
    return Grading(hom.codomain, merged, grading.target, label, parameters)


def refines(fine: Grading, coarse: Grading) -> bool:
    """Every component of `fine` lies in some component of `coarse`."""
    if fine.target is not coarse.target and fine.target.dim != coarse.target.dim:
        raise DimensionMismatch("Gradings live on different targets")

    return all(any(space <= other for other in coarse.components.values()) for space in fine.components.values())


# ---------------------------- #
# Universal group              #
# ---------------------------- #


def grading_relations(grading: Grading) -> list[tuple[GroupElem, GroupElem, GroupElem | None]]:
    """Relations s₁ + s₂ = s₃ read off the nonzero products of components."""
    relations = []
    for law in grading.target.laws(grading):
        if not isinstance(law, BilinearLaw) or law.values is not None:
            continue

        for (g, left), (h, right) in _component_pairs(grading, law.symmetric):
            if any(any(law.apply(x, y)) for x in left.basis for y in right.basis):
                if g + h not in grading.components:
                    raise PreconditionError(f"Products of {g} and {h} leave the support; verify the grading first")

                relations.append((g, h, g + h))

    return relations


def grading_presentation(grading: Grading) -> Presentation:
    return universal_presentation(grading.support, grading_relations(grading))


def grading_universal_group(grading: Grading) -> tuple[FinAbGroup, Grading]:
    """The universal group U(Γ) with Γ relabeled as a U(Γ)-grading."""
    presentation = grading_presentation(grading)
    relabeled = Grading(
        presentation.group,
        {presentation.images[degree]: space for degree, space in grading.components.items()},
        grading.target,
        None,
        {key: presentation.images[value] for key, value in grading.parameters.items() if value in presentation.images},
    )
    logger.debug("universal group of %r is %s", grading, presentation.group)
    return presentation.group, relabeled


def universal_projection(grading: Grading) -> GroupHom:
    """The canonical map U(Γ) → G sending each support label to itself."""
    presentation = grading_presentation(grading)
    return presentation.hom_to({degree: degree for degree in grading.support}, grading.group)


def induced_by_universal(grading: Grading) -> Grading:
    _, relabeled = grading_universal_group(grading)
    return induce(relabeled, universal_projection(grading), grading.label)


# ---------------------------- #
# Invariants                   #
# ---------------------------- #


def fingerprint(grading: Grading) -> dict[GroupElem, tuple[int, Inertia]]:
    """Dimension and inertia of the restricted invariant form per component."""
    match grading.target.form():
        case Optional.Some(gram):
            return {
                degree: (space.dim, inertia_of(gram_restriction(gram, space.basis)))
                for degree, space in grading.components.items()
            }
        case _:
            raise PreconditionError(f"{grading.target.name} carries no invariant form")
