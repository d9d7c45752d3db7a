"""
Gradings on Cayley Algebras

Every grading on a real Cayley algebra is either induced from the Cartan grading of the split algebra or comes from
a Cayley-Dickson doubling process: the doubling eigenspaces of CD(B, α₁, …, α_k) are graded by an elementary abelian
2-group T whose basis t_i is the degree of the i-th doubling generator. The norm restricted to the block of t is a
multiple μ(t)·n_B, which is what admissibility of μ: T → {±1} is about.
"""


import logging
from fractions import Fraction
from typing import Sequence

from octograd.composition import SCAlgebra, get_algebra, hurwitz_algebra
from octograd.errors import PreconditionError
from octograd.gradings.grading import Grading, induce
from octograd.gradings.labels import CartanTriple, FullType, GradingLabel, QuadraticType, QuaternionType, TrivialLabel
from octograd.gradings.registry import NamedGrading
from octograd.gradings.targets import AlgebraTarget
from octograd.groups import Character, FinAbGroup, GroupElem, GroupHom, characters, subgroup_generated
from octograd.linalg import Inertia, Subspace, gram_restriction, inertia_of
from octograd.scalars import real_sign

logger = logging.getLogger(__name__)

CAYLEY_INERTIA = {"O": Inertia(8, 0, 0), "Os": Inertia(4, 4, 0)}

# norm of the doubling base B for |T| = 2, 4, 8: H, C = CD(F,-1), F
BASE_INERTIA = {1: Inertia(4, 0, 0), 2: Inertia(2, 0, 0), 3: Inertia(1, 0, 0)}

# degrees of e₁, e₂, u₁, u₂, u₃, v₁, v₂, v₃ in the Cartan Z²-grading
CARTAN_DEGREES = ((0, 0), (0, 0), (1, 0), (0, 1), (-1, -1), (-1, 0), (0, -1), (1, 1))


def cayley_kind(algebra: SCAlgebra) -> str:
    """'O' for the division Cayley algebra, 'Os' for the split one, decided by the norm's inertia."""
    if algebra.dim != 8:
        raise PreconditionError(f"{algebra.name} is not a Cayley algebra")

    inertia = algebra.norm_inertia()
    for kind, expected in CAYLEY_INERTIA.items():
        if inertia == expected:
            return kind

    raise PreconditionError(f"{algebra.name} has norm inertia {inertia}, not that of a Cayley algebra")


def gradings_target(algebra: SCAlgebra) -> AlgebraTarget:
    return AlgebraTarget.of(algebra)


def trivial_cayley_grading(algebra: SCAlgebra, group: FinAbGroup) -> Grading:
    label = TrivialLabel(cayley_kind(algebra), group)
    return Grading(group, {group.zero: Subspace.full(algebra.dim)}, gradings_target(algebra), label)


# ---------------------------- #
# Cartan gradings              #
# ---------------------------- #


def cartan_z2_grading(algebra: SCAlgebra | None = None) -> Grading:
    """The Cartan Z²-grading of the good basis."""
    algebra = algebra or get_algebra("split-cayley")
    group = FinAbGroup.free(2)
    components: dict[GroupElem, Subspace] = {}
    for index, degree in enumerate(CARTAN_DEGREES):
        line = Subspace.span([tuple(Fraction(int(i == index)) for i in range(8))])
        degree = group(*degree)
        components[degree] = components[degree] + line if degree in components else line

    gamma = (group(1, 0), group(0, 1), group(-1, -1))
    return Grading(group, components, gradings_target(algebra), CartanTriple(gamma))


def cartan_grading(group: FinAbGroup, gamma: Sequence[GroupElem], algebra: SCAlgebra | None = None) -> Grading:
    """Γ_Cs(G, γ): induced from the Cartan grading by (1,0) ↦ g₁, (0,1) ↦ g₂."""
    label = CartanTriple(tuple(gamma))
    if label.group != group:
        raise PreconditionError(f"γ must consist of elements of {group}")

    base = cartan_z2_grading(algebra)
    hom = GroupHom(base.group, group, (gamma[0], gamma[1]))
    return induce(base, hom, label)


# ---------------------------- #
# Cayley-Dickson gradings      #
# ---------------------------- #


def _require_elementary_basis(basis: Sequence[GroupElem]):
    if not 1 <= len(basis) <= 3:
        raise PreconditionError(f"T needs 1, 2 or 3 generators, got {len(basis)}")

    subgroup = subgroup_generated(basis)
    if not subgroup.is_elementary_abelian_2() or subgroup.order != 2 ** len(basis):
        raise PreconditionError(f"{', '.join(map(str, basis))} do not form a basis of an elementary abelian 2-group")


def doubling_character(algebra: SCAlgebra, basis: Sequence[GroupElem]) -> Character:
    """μ(t_i) = sign(−α_i) for the last len(basis) doubling parameters: n(u_i) = −α_i."""
    alphas = algebra.require_chain().alphas[-len(basis):]
    return Character(basis, [real_sign(-alpha) for alpha in alphas])


def admissible(mu: Character, kind: str) -> bool:
    """Whether ⊥_{t ∈ T} μ(t)·n_B has the inertia of the norm of the Cayley algebra of the given kind."""
    rank = len(mu.basis)
    if rank not in (2, 3):
        raise PreconditionError("Admissibility is defined for T of order 4 or 8")

    base = BASE_INERTIA[rank]
    inertia = Inertia(0, 0, 0)
    for sign in mu.table().values():
        inertia = inertia + (base if sign > 0 else base.negated())

    return inertia == CAYLEY_INERTIA[kind]


def admissible_characters(basis: Sequence[GroupElem], kind: str) -> list[Character]:
    return [mu for mu in characters(basis) if admissible(mu, kind)]


def cd_grading(
    algebra: SCAlgebra, group: FinAbGroup, basis: Sequence[GroupElem], mu: Character | None = None
) -> Grading:
    """Grading by the eigenspaces of the last len(basis) doublings of a Cayley-Dickson algebra."""
    _require_elementary_basis(basis)
    if any(t.group != group for t in basis):
        raise PreconditionError(f"T must lie in {group}")

    kind = cayley_kind(algebra)
    chain = algebra.require_chain()
    rank = len(basis)
    if len(chain.alphas) < rank:
        raise PreconditionError(f"{algebra.name} has fewer than {rank} doublings")

    block = algebra.dim // 2 ** rank
    base = [tuple(Fraction(int(i == j)) for i in range(algebra.dim)) for j in range(block)]
    if not inertia_of(gram_restriction(algebra.require_norm().gram, base)).is_definite:
        raise PreconditionError("The doubling base must have a definite norm")

    derived = doubling_character(algebra, basis)
    if mu is not None and mu != derived:
        raise PreconditionError(f"μ = {mu} does not match the doubling parameters ({derived})")

    if rank > 1 and not admissible(derived, kind):
        raise PreconditionError(f"μ = {derived} is not admissible on {kind}")

    components: dict[GroupElem, list] = {}
    for index in range(algebra.dim):
        bits = index // block
        degree = group.zero
        for i, t in enumerate(basis):
            if bits >> i & 1:
                degree = degree + t

        components.setdefault(degree, []).append(tuple(Fraction(int(i == index)) for i in range(algebra.dim)))

    match rank:
        case 1:
            label = QuaternionType(kind, basis[0])
        case 2:
            label = QuadraticType(kind, derived)
        case _:
            label = FullType(kind, derived)

    grading = Grading(
        group,
        {degree: Subspace.span(vectors) for degree, vectors in components.items()},
        gradings_target(algebra),
        label,
    )
    logger.debug("built %s", grading)
    return grading


def cayley_cd_grading(kind: str, group: FinAbGroup, basis: Sequence[GroupElem], mu: Character | None = None) -> Grading:
    """Builds the Cayley algebra of the given kind as CD(B, −μ(t₁), …) and returns its doubling grading."""
    if kind not in CAYLEY_INERTIA:
        raise PreconditionError(f"Unknown Cayley algebra kind {kind!r}, expected O or Os")

    _require_elementary_basis(basis)
    rank = len(basis)
    if rank == 1:
        if mu is not None:
            raise PreconditionError("Quaternion-type gradings take no μ")

        alphas = (-1, -1, -1 if kind == "O" else 1)
    else:
        mu = mu or Character(basis, [1] * rank)
        if not admissible(mu, kind):
            raise PreconditionError(f"μ = {mu} is not admissible on {kind}")

        values = [mu(t) for t in basis]
        alphas = (*(-1,) * (3 - rank), *(-v for v in values))

    algebra = hurwitz_algebra(*alphas, name=kind)
    return cd_grading(algebra, group, basis, mu)


# ---------------------------- #
# Fine gradings                #
# ---------------------------- #


def elementary_group(rank: int = 3) -> tuple[FinAbGroup, tuple[GroupElem, ...]]:
    group = FinAbGroup(0, (2,) * rank)
    return group, group.gens


class DivisionFullGrading(NamedGrading, grading_name="O-Z2^3", nice_name="Γ_O(Z2^3, R, Z2^3)"):
    @classmethod
    def build(cls) -> Grading:
        group, basis = elementary_group()
        return cayley_cd_grading("O", group, basis)


class SplitFullGrading(NamedGrading, grading_name="Os-Z2^3", nice_name="Γ_Os(Z2^3, R, Z2^3, μ)"):
    @classmethod
    def build(cls) -> Grading:
        group, basis = elementary_group()
        return cayley_cd_grading("Os", group, basis, Character(basis, (1, 1, -1)))


class SplitCartanGrading(NamedGrading, grading_name="Os-Z^2", nice_name="Cartan grading on Os"):
    @classmethod
    def build(cls) -> Grading:
        return cartan_z2_grading()


def fine_cayley(which: str) -> Grading:
    """The fine gradings on real Cayley algebras: O-Z2^3, Os-Z2^3 and Os-Z^2."""
    if which not in ("O-Z2^3", "Os-Z2^3", "Os-Z^2"):
        raise PreconditionError(f"Unknown fine Cayley grading {which!r}")

    return NamedGrading.build_named(which)


def cayley_grading_from_label(label: GradingLabel) -> Grading:
    """Constructs a representative of the isomorphism class a Cayley label names."""
    match label:
        case TrivialLabel(algebra, group):
            return trivial_cayley_grading(get_algebra(algebra), group)
        case QuaternionType(algebra, t):
            return cayley_cd_grading(algebra, t.group, [t])
        case QuadraticType(algebra, mu) | FullType(algebra, mu):
            return cayley_cd_grading(algebra, label.group, mu.basis, mu)
        case CartanTriple(gamma):
            return cartan_grading(label.group, gamma)
        case _:
            raise PreconditionError(f"{label!r} is not a Cayley grading label")
