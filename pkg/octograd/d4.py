"""
Type III Gradings on so(7,1) and so(5,3)

For a Cayley algebra C the space Ṽ₀ = F(1⊗1) ⊕ (C⁰⊗i) carries the form n with n(1⊗1) = 1 and n(x⊗i) = −n(x). Its
orthogonal Lie algebra, of signature (1,7) for O and (5,3) for Os, is spanned by three families of operators

    d⊗1                         d ∈ Der(C)
    A⁺_x = ad_x⊗1 + √3·T_x⊗i     x ∈ C⁰
    A⁻_x = ad_x⊗1 − √3·T_x⊗i     x ∈ C⁰

with T_x = L_x + R_x. A grading Γ_C and h of order 3 put Der(C)_g in degree g, A⁺_x for x ∈ C⁰_{g−h} in degree g and
A⁻_x for x ∈ C⁰_{g−2h} in degree g. The same Lie algebra is recovered as the first L-component of Der_L(V, β, Q)
for V = TC(C̄, L), which is how the model is cross-checked.

Ṽ₀ uses the rebased basis {1, e₁, …, e₇} of C, index 0 for 1⊗1 and index k for e_k⊗i.
"""


import csv
import io
import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cache, cached_property
from typing import Any, Sequence

from octograd.composition import SCAlgebra
from octograd.errors import PreconditionError
from octograd.gradings import (
    Grading,
    NamedGrading,
    cartan_grading,
    cayley_cd_grading,
    fine_cayley,
    fingerprint,
    grading_universal_group,
)
from octograd.gradings.targets import AlgebraTarget
from octograd.groups import Character, FinAbGroup, GroupElem
from octograd.lie import LieTarget, LinearLieAlg, derivations, induced_grading_on_der, so_of_form
from octograd.linalg import Inertia, Matrix, Subspace, Vector, inertia_of, kernel_of_rows
from octograd.results import CheckResult, VerificationReport
from octograd.scalars import SQRT3
from octograd.twisted import TwistedComposition, TypeIIILabel, cayley_frame
from octograd.twisted.composition import CARRIER_DIM, CAYLEY_DIM
from octograd.utils.iterables import first_index

logger = logging.getLogger(__name__)

SO_DIM = 28


# ---------------------------- #
# The model so(Ṽ₀, n)          #
# ---------------------------- #


class TildeV0Model:
    def __init__(self, cayley: SCAlgebra):
        self.cayley = cayley
        self.frame = cayley_frame(cayley)
        self.rebased = self.frame.rebased
        self.traceless = Subspace.span([_unit(k) for k in range(1, CAYLEY_DIM)])
        self.gram = _tilde_gram(self.rebased)
        self.der = derivations(self.rebased)

    @property
    def dim(self) -> int:
        return CAYLEY_DIM

    def derivation_operator(self, d: Sequence[Any]) -> Matrix:
        """d⊗1 acts on Ṽ₀ by the matrix of d: d(1) = 0 and d(C⁰) ⊆ C⁰."""
        return Matrix.from_flat(d, CAYLEY_DIM)

    def a_operator(self, x: Sequence[Any], sign: int) -> Matrix:
        """A^±_x: 1⊗1 ↦ ±2√3·x⊗i and y⊗i ↦ ad_x(y)⊗i ± √3·n(x, y)·1⊗1."""
        if x[0]:
            raise PreconditionError("A^±_x needs x in C⁰")

        algebra = self.rebased
        ad = algebra.left_mult(x) - algebra.right_mult(x)
        entries = [[Fraction(0)] * CAYLEY_DIM for _ in range(CAYLEY_DIM)]
        for k in range(1, CAYLEY_DIM):
            entries[k][0] = sign * 2 * SQRT3 * x[k]

        for m in range(1, CAYLEY_DIM):
            entries[0][m] = sign * SQRT3 * algebra.polar(x, _unit(m))
            for k in range(1, CAYLEY_DIM):
                entries[k][m] = ad[k, m]

        return Matrix(entries)

    @cached_property
    def families(self) -> dict[str, list[Vector]]:
        flatten = LinearLieAlg.flatten
        return {
            "derivations": [flatten([self.derivation_operator(d)]) for d in self.der.basis],
            "A+": [flatten([self.a_operator(x, 1)]) for x in self.traceless.basis],
            "A-": [flatten([self.a_operator(x, -1)]) for x in self.traceless.basis],
        }

    @cached_property
    def lie(self) -> LinearLieAlg:
        spanning = [v for family in self.families.values() for v in family]
        lie = LinearLieAlg(f"so(Ṽ0, {self.cayley.name})", CAYLEY_DIM, spanning)
        logger.debug("built %r", lie)
        return lie

    def form_inertia(self) -> Inertia:
        return inertia_of(self.gram)


def _unit(index: int) -> Vector:
    return tuple(Fraction(int(i == index)) for i in range(CAYLEY_DIM))


def _tilde_gram(rebased: SCAlgebra) -> Matrix:
    """Polar form of n on Ṽ₀: 2 on 1⊗1 and −n(e_k, e_m) on C⁰⊗i."""
    norm = rebased.require_norm().gram
    return Matrix(
        [
            [norm[a, b] if a == b == 0 else -norm[a, b] if a and b else Fraction(0) for b in range(CAYLEY_DIM)]
            for a in range(CAYLEY_DIM)
        ]
    )


@cache
def so_tilde_v0(cayley: SCAlgebra) -> TildeV0Model:
    return TildeV0Model(cayley)


def verify_model(model: TildeV0Model) -> VerificationReport:
    """Skewness of every generator, independence of the three families, bracket closure, equality with so(Ṽ₀, n)
    and the Killing form K(x, y) = 6·tr(xy)."""
    report = VerificationReport(f"model {model.lie.name}")
    gram = model.gram
    for name, family in model.families.items():
        skew = first_index(family, lambda v: not _is_skew(Matrix.from_flat(v, CAYLEY_DIM), gram))
        if skew is None:
            report.passed(f"{name} skew", len(family))
        else:
            report.failed(f"{name} skew", skew, f"generator {skew} of {name} is not skew for n")

    dims = tuple(Subspace(family, CAYLEY_DIM ** 2).dim for family in model.families.values())
    if dims == (14, 7, 7) and model.lie.dim == SO_DIM:
        report.passed("families independent", dims)
    else:
        report.failed("families independent", dims, f"span has dim {model.lie.dim}")

    report.extend(model.lie.closure_report())

    if model.lie.space == so_of_form(gram).space:
        report.passed("equals so(Ṽ0, n)")
    else:
        report.failed("equals so(Ṽ0, n)", model.lie.dim)

    report.add(killing_cross_check(model.lie))
    for failure in report.failures:
        logger.info("%s: %s failed with witness %r", report.subject, failure.name, failure.witness)

    return report


def _is_skew(matrix: Matrix, gram: Matrix) -> bool:
    return (matrix.T @ gram + gram @ matrix).is_zero()


def killing_cross_check(lie: LinearLieAlg) -> CheckResult:
    """K(x, y) = (n − 2)·tr(xy) on so(n)."""
    factor = lie.n - 2
    matrices = [lie.matrices(b)[0] for b in lie.basis]
    gram = lie.killing_gram
    for i, j in itertools.combinations_with_replacement(range(lie.dim), 2):
        expected = factor * (matrices[i] @ matrices[j]).trace()
        if gram[i, j] != expected:
            return CheckResult.Failed("Killing form is (n − 2)·tr", (i, j), f"{gram[i, j]} ≠ {expected}")

    return CheckResult.Passed("Killing form is (n − 2)·tr", factor)


# ---------------------------- #
# Type III gradings            #
# ---------------------------- #


def typeIII_so_grading(group: FinAbGroup, gamma_c: Grading, h: GroupElem) -> Grading:
    if h.group != group or h.order != 3:
        raise PreconditionError(f"h = {h} must be an element of order 3 in {group}")

    if gamma_c.group != group or not isinstance(gamma_c.target, AlgebraTarget):
        raise PreconditionError(f"Γ_C must be a {group}-grading on a Cayley algebra")

    model = so_tilde_v0(gamma_c.target.algebra)
    rebased = model.frame.transport(gamma_c)
    der_grading = induced_grading_on_der(rebased, model.der)
    flatten = LinearLieAlg.flatten

    vectors: dict[GroupElem, list[Vector]] = {}
    for degree, space in der_grading.components.items():
        vectors.setdefault(degree, []).extend(model.der.element(c) for c in space.basis)

    for degree, space in rebased.components.items():
        traceless = space & model.traceless
        for x in traceless.basis:
            vectors.setdefault(degree + h, []).append(flatten([model.a_operator(x, 1)]))
            vectors.setdefault(degree + h * 2, []).append(flatten([model.a_operator(x, -1)]))

    lie = model.lie
    components = {
        degree: Subspace([lie.coordinates(v) for v in elements], lie.dim) for degree, elements in vectors.items()
    }
    label = None if gamma_c.label is None else TypeIIILabel(gamma_c.label, h)
    grading = Grading(group, components, LieTarget.of(lie), label, {"h": h})
    logger.debug("built %s", grading)
    return grading


# ---------------------------- #
# Der_L(V, β, Q)               #
# ---------------------------- #


def _unknown(a: int, b: int, t: int) -> int:
    return (a * CAYLEY_DIM + b) * 3 + t % 3


def _carrier_unit(index: int) -> Vector:
    return tuple(Fraction(int(i == index)) for i in range(CARRIER_DIM))


def _der_rows(twisted: TwistedComposition):
    """D(f_(b,s)) = Σ m_ab^t f_(a,t+s) with unknowns m_ab^t ∈ F: b_Q-skewness, then the β-derivation law on the
    pairs (w_a, w_b), a ≤ b, and (ξw_a, w_b), which suffice since D is L-linear and β(ξx, ξy) = ξ²β(x, y)."""
    gram = twisted.gram
    for b in range(CAYLEY_DIM):
        for c in range(b, CAYLEY_DIM):
            for t in range(3):
                row: dict[int, Any] = {}
                for a in range(CAYLEY_DIM):
                    if gram[a][c]:
                        row[_unknown(a, b, t)] = row.get(_unknown(a, b, t), 0) + gram[a][c]

                    if gram[b][a]:
                        row[_unknown(a, c, t)] = row.get(_unknown(a, c, t), 0) + gram[b][a]

                yield row

    basis = [_carrier_unit(i) for i in range(CARRIER_DIM)]

    @cache
    def beta(u: int, w: int) -> Vector:
        return twisted.beta_polar(basis[u], basis[w])

    pairs = [(3 * a, 3 * b) for a in range(CAYLEY_DIM) for b in range(a, CAYLEY_DIM)]
    pairs += [(3 * a + 1, 3 * b) for a in range(CAYLEY_DIM) for b in range(CAYLEY_DIM)]
    for x, y in pairs:
        rows: list[dict[int, Any]] = [{} for _ in range(CARRIER_DIM)]

        def put(output: int, unknown: int, value: Any):
            total = rows[output].get(unknown, 0) + value
            if total:
                rows[output][unknown] = total
            else:
                rows[output].pop(unknown, None)

        z = beta(x, y)
        for index, value in enumerate(z):
            if value:
                b, s = divmod(index, 3)
                for a in range(CAYLEY_DIM):
                    for r in range(3):
                        put(3 * a + r, _unknown(a, b, r - s), value)

        for moving, other in ((x, y), (y, x)):
            b, s = divmod(moving, 3)
            for a in range(CAYLEY_DIM):
                for t in range(3):
                    image = beta(3 * a + (t + s) % 3, other)
                    for output, value in enumerate(image):
                        if value:
                            put(output, _unknown(a, b, t), -value)

        yield from rows


def _operator_from_unknowns(m: Sequence[Any]) -> Vector:
    flat = [Fraction(0)] * (CARRIER_DIM * CARRIER_DIM)
    for a, b, t, s in itertools.product(range(CAYLEY_DIM), range(CAYLEY_DIM), range(3), range(3)):
        value = m[_unknown(a, b, t)]
        if value:
            flat[(3 * a + (t + s) % 3) * CARRIER_DIM + 3 * b + s] = value

    return tuple(flat)


def der_of_twisted(twisted: TwistedComposition) -> LinearLieAlg:
    """L-linear, b_Q-skew maps D of V with D(β(x, y)) = β(Dx, y) + β(x, Dy)."""
    unknowns = CAYLEY_DIM * CAYLEY_DIM * 3
    solution = kernel_of_rows(_der_rows(twisted), unknowns)
    logger.debug("Der_L(%s): %d unknowns -> dim %d", twisted.name, unknowns, solution.dim)
    return LinearLieAlg(
        f"Der_L({twisted.name})", CARRIER_DIM, [_operator_from_unknowns(m) for m in solution.basis]
    )


def first_component_projection(der: LinearLieAlg) -> Subspace:
    """Restriction to the F-factor of L = F×K (ξ ↦ 1): M_ab = Σ_t m_ab^t, an endomorphism of Ṽ₀."""
    projected = []
    for element in der.basis:
        (operator,) = der.matrices(element)
        projected.append(
            tuple(
                sum((operator[3 * a + t, 3 * b] for t in range(3)), Fraction(0))
                for a in range(CAYLEY_DIM)
                for b in range(CAYLEY_DIM)
            )
        )

    return Subspace(projected, CAYLEY_DIM * CAYLEY_DIM)


def verify_der_of_twisted(twisted: TwistedComposition, der: LinearLieAlg | None = None) -> VerificationReport:
    der = der or der_of_twisted(twisted)
    model = so_tilde_v0(twisted.cayley)
    projection = first_component_projection(der)
    report = VerificationReport(f"{der.name} against {model.lie.name}")
    if der.dim == SO_DIM:
        report.passed("dim 28", der.dim)
    else:
        report.failed("dim 28", der.dim)

    if projection.dim == der.dim:
        report.passed("projection injective")
    else:
        report.failed("projection injective", projection.dim, f"image has dim {projection.dim}")

    if projection == model.lie.space:
        report.passed("projection equals so(Ṽ0, n)")
    else:
        report.failed("projection equals so(Ṽ0, n)", projection.dim)

    return report


# ---------------------------- #
# Census                       #
# ---------------------------- #


@dataclass(frozen=True)
class CensusRow:
    degree: GroupElem
    dim: int
    inertia: Inertia

    def as_dict(self) -> dict:
        return {
            "degree": list(self.degree.coordinates),
            "dim": self.dim,
            "p": self.inertia.positive,
            "q": self.inertia.negative,
            "r": self.inertia.radical,
        }


def census(grading: Grading) -> list[CensusRow]:
    """Dimension and inertia of the restricted Killing form per component."""
    return [CensusRow(degree, dim, inertia) for degree, (dim, inertia) in fingerprint(grading).items()]


def census_csv(rows: Sequence[CensusRow]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["degree", "dim", "p", "q", "r"])
    for row in rows:
        writer.writerow(
            [
                ";".join(map(str, row.degree.coordinates)),
                row.dim,
                row.inertia.positive,
                row.inertia.negative,
                row.inertia.radical,
            ]
        )

    return buffer.getvalue()


def census_json(rows: Sequence[CensusRow]) -> list[dict]:
    return [row.as_dict() for row in rows]


# ---------------------------- #
# Fine gradings                #
# ---------------------------- #


def _elementary_times_z3() -> tuple[FinAbGroup, tuple[GroupElem, ...], GroupElem]:
    group, images = FinAbGroup.from_factors(0, (2, 2, 2, 3))
    return group, images[:3], images[3]


class DivisionTypeIIIGrading(NamedGrading, grading_name="O-Z2^3Z3", nice_name="Type III Z2^3×Z3 on so(7,1)"):
    @classmethod
    def build(cls) -> Grading:
        group, basis, h = _elementary_times_z3()
        return typeIII_so_grading(group, cayley_cd_grading("O", group, basis), h)


class SplitTypeIIIGrading(NamedGrading, grading_name="Os-Z2^3Z3", nice_name="Type III Z2^3×Z3 on so(5,3)"):
    @classmethod
    def build(cls) -> Grading:
        group, basis, h = _elementary_times_z3()
        return typeIII_so_grading(group, cayley_cd_grading("Os", group, basis, Character(basis, (1, 1, -1))), h)


class CartanTypeIIIGrading(NamedGrading, grading_name="Os-Z^2Z3", nice_name="Type III Z^2×Z3 on so(5,3)"):
    @classmethod
    def build(cls) -> Grading:
        group = FinAbGroup(2, (3,))
        gamma = (group(1, 0, 0), group(0, 1, 0), group(-1, -1, 0))
        return typeIII_so_grading(group, cartan_grading(group, gamma), group(0, 0, 1))


FINE_TYPE_III = ("O-Z2^3Z3", "Os-Z2^3Z3", "Os-Z^2Z3")


def fine_typeIII(which: str) -> Grading:
    if which not in FINE_TYPE_III:
        raise PreconditionError(f"Unknown fine Type III grading {which!r}, expected one of {', '.join(FINE_TYPE_III)}")

    return NamedGrading.build_named(which)


@dataclass(frozen=True)
class FineGradingRow:
    name: str
    universal_group: FinAbGroup
    census: dict[int, int]

    def as_dict(self) -> dict:
        return {
            "grading": self.name,
            "universal_group": str(self.universal_group),
            "census": {str(dim): count for dim, count in sorted(self.census.items())},
        }


FINE_TABLES = {
    "G2-compact": (("O-Z2^3", "induced"),),
    "G2-split": (("Os-Z2^3", "induced"), ("Os-Z^2", "induced")),
    "so71": (("O-Z2^3Z3", "typeIII"),),
    "so53": (("Os-Z2^3Z3", "typeIII"), ("Os-Z^2Z3", "typeIII")),
}


def list_fine(algebra: str) -> list[FineGradingRow]:
    """Fine gradings of Der(O), Der(Os), so(7,1) and so(5,3) with their universal groups and censuses."""
    if algebra not in FINE_TABLES:
        raise PreconditionError(f"Unknown algebra {algebra!r}, expected one of {', '.join(FINE_TABLES)}")

    rows = []
    for name, route in FINE_TABLES[algebra]:
        grading = induced_grading_on_der(fine_cayley(name)) if route == "induced" else fine_typeIII(name)
        group, relabeled = grading_universal_group(grading)
        rows.append(FineGradingRow(name, group, dict(relabeled.census())))

    return rows
