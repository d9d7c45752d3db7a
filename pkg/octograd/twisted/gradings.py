"""
Type III Gradings on Twisted Compositions

A grading Γ_C on the Cayley algebra C and an element h of order 3 grade TC(C̄, L) by

    V_g = fixed part of (C_g⊗1⊗ℂ) ⊕ (C_{g−h}⊗ξ⊗ℂ) ⊕ (C_{g−2h}⊗ξ²⊗ℂ),

so L is graded by deg ξ = h. Up to the twist by the center element a = (1, −1) of L, every grading whose
identity component is not of the exceptional Okubo type arises this way, and the isomorphism classes are the
items below, keyed by the dimension of V_e:

    1.a / 1.b   Γ_C of type (F, T, μ) on O / Os
    2.a / 2.b   Γ_C of type (K, T, μ) on O / Os
    2.c         Cartan Γ_C with no γ_i in ⟨h⟩
    4.a / 4.b   Γ_C of type (H, ⟨t⟩) on O / Os
    4.c         Cartan Γ_C with exactly one γ_i in ⟨h⟩
    8.a / 8.b   trivial Γ_C on O / Os (or Cartan with all γ_i equal in ⟨h⟩)
    8.c         Cartan Γ_C with γ = (e, h, h²) up to order
"""


import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction

from tramp.optionals import Optional

from octograd.errors import PreconditionError
from octograd.gradings import (
    CartanTriple,
    FullType,
    GradingLabel,
    Grading,
    QuadraticType,
    QuaternionType,
    TrivialLabel,
    cayley_grading_from_label,
    iso_decision,
    label_from_json,
    label_to_json,
)
from octograd.gradings.targets import AlgebraTarget
from octograd.groups import Character, FinAbGroup, GroupElem, subgroup_generated
from octograd.linalg import Matrix, Subspace
from octograd.results import VerificationReport
from octograd.twisted.composition import (
    CARRIER_DIM,
    CAYLEY_DIM,
    TwistedComposition,
    TwistedTarget,
    carrier_index,
    carrier_vector,
    tc_hurwitz,
)

logger = logging.getLogger(__name__)

ITEM_DIMS = {1, 2, 4, 8}


# ---------------------------- #
# Labels                       #
# ---------------------------- #


def _powers(h: GroupElem) -> tuple[GroupElem, GroupElem, GroupElem]:
    return h.group.zero, h, h * 2


@dataclass(frozen=True)
class TypeIIILabel(GradingLabel, label_kind="type-iii"):
    """Γ(G, Γ_C, h): the label of Γ_C together with the degree h of ξ."""

    cayley: GradingLabel
    h: GroupElem

    def __post_init__(self):
        if self.h.order != 3:
            raise PreconditionError(f"h = {self.h} does not have order 3")

        if self.cayley.group != self.h.group:
            raise PreconditionError(f"Γ_C is graded by {self.cayley.group}, but h lies in {self.h.group}")

    @property
    def group(self) -> FinAbGroup:
        return self.h.group

    @property
    def item(self) -> str:
        match self.cayley:
            case TrivialLabel(algebra):
                return "8.a" if algebra == "O" else "8.b"
            case QuaternionType(algebra):
                return "4.a" if algebra == "O" else "4.b"
            case QuadraticType(algebra):
                return "2.a" if algebra == "O" else "2.b"
            case FullType(algebra):
                return "1.a" if algebra == "O" else "1.b"
            case CartanTriple(gamma):
                powers = _powers(self.h)
                inside = [g for g in gamma if g in powers]
                match len(inside):
                    case 0:
                        return "2.c"
                    case 1:
                        return "4.c"
                    case _ if len(set(gamma)) == 1:
                        return "8.b"
                    case _:
                        return "8.c"

        raise PreconditionError(f"No Type III item for {self.cayley!r}")

    @property
    def identity_dim(self) -> int:
        return int(self.item.split(".")[0])

    def _cartan_off_h(self) -> GroupElem:
        """For item 4.c: γ shifted by a power of h so its member in ⟨h⟩ becomes e, then the first nonzero member."""
        powers = _powers(self.h)
        (anchor,) = [g for g in self.cayley.gamma if g in powers]
        return next(g - anchor for g in self.cayley.gamma if g != anchor)

    def is_isomorphic_to(self, other: "TypeIIILabel") -> bool:
        if self.item != other.item:
            return False

        if subgroup_generated([self.h]) != subgroup_generated([other.h]):
            return False

        match self.item:
            case "1.a" | "1.b" | "2.a" | "2.b":
                return self.cayley.mu == other.cayley.mu
            case "4.a" | "4.b":
                return self.cayley.t == other.cayley.t
            case "4.c":
                g, g_other = self._cartan_off_h(), other._cartan_off_h()
                return g_other in (g, -g)
            case "2.c":
                gamma, target = self.cayley.gamma, other.cayley.gamma
                return any(
                    tuple(gamma[pi[i]] * k + self.h * j for i in range(3)) == target
                    for pi in itertools.permutations(range(3))
                    for j in range(3)
                    for k in (1, -1)
                )
            case _:
                return True

    def to_json(self) -> dict:
        return {"cayley": label_to_json(self.cayley), "h": self.h.to_json()}

    @classmethod
    def from_json(cls, group: FinAbGroup, data: dict) -> "TypeIIILabel":
        return cls(label_from_json(data["cayley"]), GroupElem.from_json(group, data["h"]))

    def __str__(self):
        return f"({self.item}) Γ(G, {self.cayley}, h={self.h})"


def typeIII_iso_decision(first: TypeIIILabel, second: TypeIIILabel) -> bool:
    return iso_decision(first, second)


# ---------------------------- #
# Constructions                #
# ---------------------------- #


def _require_order_three(group: FinAbGroup, h: GroupElem):
    if h.group != group:
        raise PreconditionError(f"h = {h} is not an element of {group}")

    if h.order != 3:
        raise PreconditionError(f"h = {h} does not have order 3")


def _carrier_components(twisted: TwistedComposition, cayley_grading: Grading, h: GroupElem) -> dict:
    frame = twisted.frame
    vectors: dict[GroupElem, list] = {}
    for degree, space in cayley_grading.components.items():
        for x in space.basis:
            rebased = frame.to_rebased(x)
            for j in range(3):
                v = [Fraction(0)] * CARRIER_DIM
                for k, c in enumerate(rebased):
                    v[carrier_index(k, j)] = c

                vectors.setdefault(degree + h * j, []).append(tuple(v))

    return {degree: Subspace(basis, CARRIER_DIM) for degree, basis in vectors.items()}


def _cayley_grading_on(
    twisted: TwistedComposition, group: FinAbGroup, cayley_grading: Grading, h: GroupElem
) -> Grading:
    label = None if cayley_grading.label is None else TypeIIILabel(cayley_grading.label, h)
    return Grading(
        group,
        _carrier_components(twisted, cayley_grading, h),
        TwistedTarget.of(twisted),
        label,
        {"h": h},
    )


def cayley_grading(group: FinAbGroup, gamma_c: Grading, h: GroupElem) -> Grading:
    """Γ(G, Γ_C, h) on TC(C̄, L) for the Cayley algebra Γ_C grades."""
    _require_order_three(group, h)
    if gamma_c.group != group:
        raise PreconditionError(f"Γ_C is graded by {gamma_c.group}, not {group}")

    if not isinstance(gamma_c.target, AlgebraTarget):
        raise PreconditionError(f"Γ_C must grade a Cayley algebra, not {gamma_c.target.name}")

    grading = _cayley_grading_on(tc_hurwitz(gamma_c.target.algebra), group, gamma_c, h)
    logger.debug("built %s", grading)
    return grading


def typeIII_grading(label: TypeIIILabel) -> Grading:
    return cayley_grading(label.group, cayley_grading_from_label(label.cayley), label.h)


def twist_by_center(grading: Grading) -> Grading:
    """The grading with components a·V_g for the center element a = (1, −1) of L."""
    if not isinstance(grading.target, TwistedTarget):
        raise PreconditionError(f"{grading.target.name} is not a twisted composition")

    twisted = grading.target.twisted
    a = twisted.etale.center_twist()
    components = {
        degree: Subspace([twisted.act(a, v) for v in space.basis], CARRIER_DIM)
        for degree, space in grading.components.items()
    }
    return Grading(grading.group, components, grading.target, None, grading.parameters)


def _degree_of_xi(grading: Grading) -> GroupElem:
    h = grading.parameters.get("h")
    if h is None or h.order != 3:
        raise PreconditionError("Not a Type III grading: the degree h of ξ is missing or not of order 3")

    return h


def identity_component_dim(grading: Grading) -> tuple[int, str]:
    """dim V_e and the item family it selects ("n.*"), or the exact item when the grading carries a label."""
    _degree_of_xi(grading)
    match grading.component(grading.group.zero):
        case Optional.Some(space):
            dim = space.dim
        case _:
            dim = 0

    if dim not in ITEM_DIMS:
        raise PreconditionError(f"dim V_e = {dim} is not one of 1, 2, 4, 8")

    match grading.label:
        case TypeIIILabel() as label if label.identity_dim == dim:
            return dim, label.item
        case _:
            return dim, f"{dim}.*"


# ---------------------------- #
# h ↔ h² isomorphism           #
# ---------------------------- #


@dataclass(frozen=True)
class HSquareWitness:
    """The automorphism x⊗ℓ⊗c ↦ x̄⊗τ(ℓ)⊗c of V carrying Γ(G, Γ_C, h) onto Γ(G, Γ_C, h²)."""

    matrix: Matrix
    source: Grading
    target: Grading
    report: VerificationReport


def _conjugation_tau_matrix() -> Matrix:
    columns = []
    for index in range(CARRIER_DIM):
        k, j = divmod(index, 3)
        image = carrier_vector(carrier_index(k, -j))
        columns.append(image if k == 0 else tuple(-c for c in image))

    return Matrix.from_columns(columns)


def recover_cayley_grading(grading: Grading) -> Grading:
    """Γ_C from a grading Γ(G, Γ_C, h): C_g is the ξ⁰ block of V_g. Raises if the grading is not of that form."""
    h = _degree_of_xi(grading)
    if not isinstance(grading.target, TwistedTarget):
        raise PreconditionError(f"{grading.target.name} is not a twisted composition")

    twisted = grading.target.twisted
    frame = twisted.frame
    components = {}
    for degree, space in grading.components.items():
        block = [tuple(v[carrier_index(k, 0)] for k in range(CAYLEY_DIM)) for v in space.basis]
        components[degree] = Subspace([frame.to_source(x) for x in block], CAYLEY_DIM)

    label = grading.label.cayley if isinstance(grading.label, TypeIIILabel) else None
    recovered = Grading(grading.group, components, AlgebraTarget.of(twisted.cayley), label)
    if _carrier_components(twisted, recovered, h) != grading.components:
        raise PreconditionError("Not a Cayley grading: the components are not C_{g−jh}⊗ξʲ blocks")

    return recovered


def h_square_isomorphism(grading: Grading) -> HSquareWitness:
    h = _degree_of_xi(grading)
    cayley = recover_cayley_grading(grading)
    twisted = grading.target.twisted
    target = _cayley_grading_on(twisted, grading.group, cayley, h * 2)
    phi = _conjugation_tau_matrix()
    report = VerificationReport(f"h ↔ h² isomorphism on {twisted.name}")

    if (phi @ phi) == Matrix.identity(CARRIER_DIM):
        report.passed("invertible")
    else:
        report.failed("invertible", phi @ phi, "φ² is not the identity")

    mismatched = [
        degree for degree, space in grading.components.items()
        if Subspace([phi.apply(v) for v in space.basis], CARRIER_DIM) != target.components.get(degree)
    ]
    if mismatched:
        report.failed("degree preserving", mismatched[0], f"φ(V_g) ≠ V′_g at {len(mismatched)} degrees")
    else:
        report.passed("degree preserving", len(grading.components))

    L = twisted.etale
    basis = [carrier_vector(i) for i in range(CARRIER_DIM)]
    images = [phi.apply(v) for v in basis]
    beta_failure = q_failure = None
    for u, w in itertools.combinations_with_replacement(range(CARRIER_DIM), 2):
        if beta_failure is None and phi.apply(twisted.beta_polar(basis[u], basis[w])) != twisted.beta_polar(
            images[u], images[w]
        ):
            beta_failure = (u, w)

        if q_failure is None and twisted.polar_q(images[u], images[w]) != L.tau(
            twisted.polar_q(basis[u], basis[w])
        ):
            q_failure = (u, w)

    for name, failure in (("β(φx, φy) = φβ(x, y)", beta_failure), ("b_Q(φx, φy) = τ(b_Q(x, y))", q_failure)):
        if failure is None:
            report.passed(name)
        else:
            report.failed(name, failure, f"fails on basis pair {failure}")

    xi = twisted.xi_matrix()
    if phi @ xi == xi @ xi @ phi:
        report.passed("φ(ξv) = ξ²φ(v)")
    else:
        report.failed("φ(ξv) = ξ²φ(v)", phi @ xi)

    if phi.apply(twisted.epsilon()) == twisted.epsilon():
        report.passed("φ(ε) = ε")
    else:
        report.failed("φ(ε) = ε", phi.apply(twisted.epsilon()))

    for failure in report.failures:
        logger.info("%s: %s failed with witness %r", report.subject, failure.name, failure.witness)

    return HSquareWitness(phi, grading, target, report)


# ---------------------------- #
# Minimal instances            #
# ---------------------------- #


def minimal_typeIII_instances() -> dict[str, TypeIIILabel]:
    """One label per item over a smallest group that admits it."""
    instances: dict[str, TypeIIILabel] = {}

    group = FinAbGroup(0, (2, 2, 6))
    basis = (group(1, 0, 0), group(0, 1, 0), group(0, 0, 3))
    h = group(0, 0, 2)
    instances["1.a"] = TypeIIILabel(FullType("O", Character(basis, (1, 1, 1))), h)
    instances["1.b"] = TypeIIILabel(FullType("Os", Character(basis, (1, 1, -1))), h)

    group = FinAbGroup(0, (2, 6))
    basis = (group(1, 0), group(0, 3))
    h = group(0, 2)
    instances["2.a"] = TypeIIILabel(QuadraticType("O", Character(basis, (1, 1))), h)
    instances["2.b"] = TypeIIILabel(QuadraticType("Os", Character(basis, (1, -1))), h)

    group = FinAbGroup(2, (3,))
    instances["2.c"] = TypeIIILabel(
        CartanTriple((group(1, 0, 0), group(0, 1, 0), group(-1, -1, 0))), group(0, 0, 1)
    )

    group = FinAbGroup.cyclic(6)
    instances["4.a"] = TypeIIILabel(QuaternionType("O", group(3)), group(2))
    instances["4.b"] = TypeIIILabel(QuaternionType("Os", group(3)), group(2))

    group = FinAbGroup(1, (3,))
    instances["4.c"] = TypeIIILabel(CartanTriple((group.zero, group(1, 0), group(-1, 0))), group(0, 1))

    group = FinAbGroup.cyclic(3)
    instances["8.a"] = TypeIIILabel(TrivialLabel("O", group), group(1))
    instances["8.b"] = TypeIIILabel(TrivialLabel("Os", group), group(1))
    instances["8.c"] = TypeIIILabel(CartanTriple((group(0), group(1), group(2))), group(1))
    return instances
