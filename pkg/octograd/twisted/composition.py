"""
Twisted Compositions

TC(C̄, L) for a Cayley algebra C and L = F×K: the fixed points of x⊗ℓ⊗c ↦ x̄⊗ℓ⊗c̄ inside C⊗L⊗ℂ, with the quadratic
map β(X) = X*X of the cyclic composition on C̄⊗(L⊗ℂ) and Q(x⊗ℓ⊗c) = n(x)ℓ²⊗c².

C is rebased onto {1, e₁, …, e₇} with e_k the canonical basis of C⁰, and the carrier V gets the F-basis

    f_(0,j) = 1⊗ξʲ⊗1,    f_(k,j) = e_k⊗ξʲ⊗i    (k = 1..7, j = 0, 1, 2)

stored at index 3k + j. The cyclic automorphism acts by ρ(ξ⊗1) = ξ⊗ω, which gives

    f_(a,j) * f_(b,l) = (ē_a ē_b)⊗ξ^{j+l}⊗ω^{j+2l}·c_a·c_b    with c_0 = 1 and c_k = i.

A similitude rescales the structure to (λβ, μQ); it is again a twisted composition exactly when μ = λ^♯.
"""


import itertools
import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cache, cached_property
from typing import Any, Sequence

from tramp.optionals import Optional

from octograd.composition import SCAlgebra, para_hurwitz
from octograd.config import RunConfig, get_config, random_rational_vector
from octograd.errors import DimensionMismatch, PreconditionError
from octograd.gradings import BilinearLaw, GradedTarget, Grading, LinearLaw
from octograd.gradings.targets import AlgebraTarget
from octograd.linalg import Matrix, Subspace, Vector
from octograd.results import VerificationReport
from octograd.scalars import I, ONE, Scalar, coerce, div, omega_power, scalar_from_json, scalar_to_json
from octograd.twisted.etale import EtaleCubic, rational_or_real

logger = logging.getLogger(__name__)

CARRIER_DIM = 24
CAYLEY_DIM = 8


def carrier_index(k: int, j: int) -> int:
    return 3 * k + j % 3


def carrier_vector(index: int) -> Vector:
    return tuple(Fraction(int(i == index)) for i in range(CARRIER_DIM))


# ---------------------------- #
# Rebased Cayley algebras      #
# ---------------------------- #


@dataclass(frozen=True)
class CayleyFrame:
    """A Cayley algebra together with its copy in the basis {1, e₁, …, e₇}. `change` maps rebased coordinates to
    source coordinates."""

    source: SCAlgebra
    rebased: SCAlgebra
    change: Matrix
    inverse: Matrix

    def to_rebased(self, vector: Sequence[Any]) -> Vector:
        return self.inverse.apply(vector)

    def to_source(self, vector: Sequence[Any]) -> Vector:
        return self.change.apply(vector)

    def transport(self, grading: Grading) -> Grading:
        """A grading on the source algebra as a grading on the rebased one."""
        if not isinstance(grading.target, AlgebraTarget) or grading.target.algebra is not self.source:
            raise PreconditionError(f"Expected a grading on {self.source.name}, got one on {grading.target.name}")

        components = {
            degree: Subspace([self.to_rebased(x) for x in space.basis], CAYLEY_DIM)
            for degree, space in grading.components.items()
        }
        return Grading(grading.group, components, AlgebraTarget.of(self.rebased), grading.label, grading.parameters)

    def transport_back(self, grading: Grading) -> Grading:
        components = {
            degree: Subspace([self.to_source(x) for x in space.basis], CAYLEY_DIM)
            for degree, space in grading.components.items()
        }
        return Grading(grading.group, components, AlgebraTarget.of(self.source), grading.label, grading.parameters)


@cache
def cayley_frame(algebra: SCAlgebra) -> CayleyFrame:
    if algebra.dim != CAYLEY_DIM:
        raise PreconditionError(f"{algebra.name} is not a Cayley algebra")

    basis = [algebra.require_unit(), *algebra.trace_zero_subspace().basis]
    change = Matrix.from_columns(basis)
    return CayleyFrame(algebra, algebra.rebased(basis, name=algebra.name), change, change.inverse())


# ---------------------------- #
# Structure tables             #
# ---------------------------- #


@dataclass(frozen=True)
class _Tables:
    squares: tuple[dict[int, Any], ...]
    polar: tuple[tuple[dict[int, Any], ...], ...]
    gram: tuple[tuple[Fraction, ...], ...]


def _phase(k: int) -> Scalar:
    return ONE if k == 0 else I


def _ambient_product(para: SCAlgebra, u: int, w: int) -> dict[tuple[int, int], Scalar]:
    """f_u * f_w in C⊗L⊗ℂ, keyed by (Cayley index, power of ξ)."""
    (a, j), (b, l) = divmod(u, 3), divmod(w, 3)
    factor = omega_power(j + 2 * l) * _phase(a) * _phase(b)
    t = (j + l) % 3
    return {(m, t): factor * p for m, p in enumerate(para.mult[a][b]) if p}


def _to_carrier(ambient: dict[tuple[int, int], Scalar]) -> dict[int, Any]:
    out = {}
    for (m, t), z in ambient.items():
        inside, outside = (z.real_part(), z.imag_part()) if m == 0 else (z.imag_part(), z.real_part())
        if outside:
            raise PreconditionError(f"β leaves the fixed points at coordinate {(m, t)}")

        if inside:
            out[carrier_index(m, t)] = rational_or_real(inside)

    return out


def _merge(*parts: dict) -> dict:
    merged: dict = {}
    for part in parts:
        for key, value in part.items():
            merged[key] = merged[key] + value if key in merged else value

    return {key: value for key, value in merged.items() if value}


@cache
def _structure_tables(rebased: SCAlgebra) -> _Tables:
    para = para_hurwitz(rebased)
    squares = tuple(_to_carrier(_ambient_product(para, u, u)) for u in range(CARRIER_DIM))
    polar = [[{} for _ in range(CARRIER_DIM)] for _ in range(CARRIER_DIM)]
    for u, w in itertools.combinations_with_replacement(range(CARRIER_DIM), 2):
        if u == w:
            polar[u][u] = {m: 2 * c for m, c in squares[u].items()}
            continue

        polar[u][w] = polar[w][u] = _to_carrier(
            _merge(_ambient_product(para, u, w), _ambient_product(para, w, u))
        )

    norm = rebased.require_norm().gram
    gram = tuple(
        tuple(
            norm[a, b] if a == b == 0 else -norm[a, b] if a and b else Fraction(0)
            for b in range(CAYLEY_DIM)
        )
        for a in range(CAYLEY_DIM)
    )
    logger.debug("structure tables of TC(%s) computed", rebased.name)
    return _Tables(squares, tuple(tuple(row) for row in polar), gram)


def _l_element(value: Sequence[Any]) -> Vector:
    if len(value) != 3:
        raise DimensionMismatch(f"Elements of L have 3 coordinates, got {len(value)}")

    return tuple(coerce(c) for c in value)


# ---------------------------- #
# Twisted compositions         #
# ---------------------------- #


class TwistedComposition:
    """(V, L, λβ, μQ) on the carrier of TC(C̄, L); λ = μ = 1 is TC(C̄, L) itself."""

    dim = CARRIER_DIM

    def __init__(self, cayley: SCAlgebra, parameter: Sequence[Any] | None = None, multiplier: Sequence[Any] | None = None):
        self.frame = cayley_frame(cayley)
        self.etale = EtaleCubic.twisted()
        self.parameter = self.etale.one() if parameter is None else _l_element(parameter)
        self.multiplier = self.etale.sharp(self.parameter) if multiplier is None else _l_element(multiplier)
        self._tables = _structure_tables(self.frame.rebased)

    @property
    def cayley(self) -> SCAlgebra:
        return self.frame.source

    @property
    def gram(self) -> tuple[tuple[Fraction, ...], ...]:
        """b_Q(f_(a,0), f_(b,0)) before the multiplier: 2 on 1⊗1, −n(e_a, e_b) on C⁰⊗i."""
        return self._tables.gram

    @property
    def is_standard(self) -> bool:
        one = self.etale.one()
        return self.parameter == one and self.multiplier == one

    @property
    def name(self) -> str:
        if self.is_standard:
            return f"TC({self.cayley.name})"

        return f"TC({self.cayley.name}) with λ={_format(self.parameter)}, μ={_format(self.multiplier)}"

    def __repr__(self):
        return f"<TwistedComposition {self.name}>"

    def basis_names(self) -> list[str]:
        powers = ("1", "ξ", "ξ²")
        return [
            f"1⊗{powers[j]}⊗1" if k == 0 else f"e{k}⊗{powers[j]}⊗i" for k in range(CAYLEY_DIM) for j in range(3)
        ]

    def epsilon(self) -> Vector:
        """ε = 1⊗1⊗1."""
        return carrier_vector(0)

    # ---------------------------- #
    # L-module structure           #
    # ---------------------------- #

    def act(self, ell: Sequence[Any], v: Sequence[Any]) -> Vector:
        out = []
        for k in range(CAYLEY_DIM):
            for t in range(3):
                out.append(sum((ell[s] * v[carrier_index(k, t - s)] for s in range(3) if ell[s]), Fraction(0)))

        return tuple(out)

    def action_matrix(self, ell: Sequence[Any]) -> Matrix:
        return Matrix.from_columns([self.act(ell, carrier_vector(i)) for i in range(CARRIER_DIM)])

    def xi_matrix(self) -> Matrix:
        return self.action_matrix(self.etale.xi())

    # ---------------------------- #
    # β and Q                      #
    # ---------------------------- #

    def _beta(self, v: Sequence[Any]) -> list[Any]:
        out = [Fraction(0)] * CARRIER_DIM
        support = [(u, a) for u, a in enumerate(v) if a]
        for index, (u, a) in enumerate(support):
            for m, c in self._tables.squares[u].items():
                out[m] += a * a * c

            for w, b in support[index + 1:]:
                coefficient = a * b
                for m, c in self._tables.polar[u][w].items():
                    out[m] += coefficient * c

        return out

    def _polar(self, x: Sequence[Any], y: Sequence[Any]) -> list[Any]:
        out = [Fraction(0)] * CARRIER_DIM
        y_support = [(w, b) for w, b in enumerate(y) if b]
        for u, a in enumerate(x):
            if a:
                row = self._tables.polar[u]
                for w, b in y_support:
                    coefficient = a * b
                    for m, c in row[w].items():
                        out[m] += coefficient * c

        return out

    def beta(self, v: Sequence[Any]) -> Vector:
        return self.act(self.parameter, self._beta(v))

    def beta_polar(self, x: Sequence[Any], y: Sequence[Any]) -> Vector:
        """β(x, y) = β(x + y) − β(x) − β(y)."""
        return self.act(self.parameter, self._polar(x, y))

    def polar_q(self, x: Sequence[Any], y: Sequence[Any]) -> Vector:
        """b_Q(x, y) ∈ L in the coordinates {1, ξ, ξ²}."""
        gram = self._tables.gram
        out = [Fraction(0)] * 3
        y_support = [(w, b) for w, b in enumerate(y) if b]
        for u, a in enumerate(x):
            if not a:
                continue

            k, j = divmod(u, 3)
            for w, b in y_support:
                value = gram[k][w // 3]
                if value:
                    out[(j + w) % 3] += a * b * value

        return self.etale.multiply(self.multiplier, out)

    def quadratic(self, v: Sequence[Any]) -> Vector:
        return tuple(div(c, 2) for c in self.polar_q(v, v))

    def norm(self, v: Sequence[Any]) -> Vector:
        """N_V(v) = b_Q(v, β(v)), an element of L that lies in F."""
        return self.polar_q(v, self.beta(v))

    @cached_property
    def trace_gram(self) -> Matrix:
        """Gram matrix of the F-valued form T_L(b_Q(x, y))."""
        basis = [carrier_vector(i) for i in range(CARRIER_DIM)]
        return Matrix([[self.etale.trace(self.polar_q(x, y)) for y in basis] for x in basis])

    def to_json(self) -> dict:
        basis = [carrier_vector(i) for i in range(CARRIER_DIM)]
        return {
            "cayley": self.cayley.to_json(),
            "parameter": [scalar_to_json(c) for c in self.parameter],
            "multiplier": [scalar_to_json(c) for c in self.multiplier],
            "basis_names": self.basis_names(),
            "beta": [[[scalar_to_json(c) for c in self.beta_polar(x, y)] for y in basis] for x in basis],
            "gram_q": [
                [[scalar_to_json(self.polar_q(x, y)[t]) for y in basis] for x in basis] for t in range(3)
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "TwistedComposition":
        return cls(
            SCAlgebra.from_json(data["cayley"]),
            [scalar_from_json(c) for c in data["parameter"]],
            [scalar_from_json(c) for c in data["multiplier"]],
        )


def _format(ell: Sequence[Any]) -> str:
    return "(" + ", ".join(str(c) for c in ell) + ")"


@cache
def tc_hurwitz(cayley: SCAlgebra) -> TwistedComposition:
    """TC(C̄, F×K)."""
    twisted = TwistedComposition(cayley)
    logger.debug("built %r", twisted)
    return twisted


def similitude(twisted: TwistedComposition, parameter: Sequence[Any], multiplier: Sequence[Any] | None = None):
    """(V, λβ, μQ); μ defaults to λ^♯, the only multiplier giving a twisted composition."""
    L = twisted.etale
    parameter = _l_element(parameter)
    multiplier = L.sharp(parameter) if multiplier is None else _l_element(multiplier)
    if not L.norm(parameter):
        raise PreconditionError(f"λ = {_format(parameter)} is not invertible in L")

    return TwistedComposition(
        twisted.cayley, L.multiply(twisted.parameter, parameter), L.multiply(twisted.multiplier, multiplier)
    )


def verify_twisted_axioms(
    twisted: TwistedComposition,
    parameter: Sequence[Any] | None = None,
    multiplier: Sequence[Any] | None = None,
    rng: random.Random | None = None,
    config: RunConfig | None = None,
) -> VerificationReport:
    """β(ℓv) = ℓ^♯β(v), Q(β(v)) = Q(v)^♯ and N_V(v) ∈ F on random rational samples, for (β, Q) or for the
    similitude (λβ, μQ) when λ is given."""
    if parameter is None and multiplier is not None:
        raise PreconditionError("A multiplier μ needs a parameter λ")

    config = config or get_config()
    rng = rng or config.rng()
    subject = twisted if parameter is None else similitude(twisted, parameter, multiplier)
    L = subject.etale
    report = VerificationReport(f"twisted composition axioms of {subject.name}")
    checks: dict[str, list[int]] = {"β semilinear": [], "Q(β(v)) = Q(v)^♯": [], "N_V(v) in F": []}
    for sample in range(config.samples):
        v = random_rational_vector(rng, CARRIER_DIM, config)
        ell = random_rational_vector(rng, 3, config)
        beta = subject.beta(v)
        if subject.beta(subject.act(ell, v)) != subject.act(L.sharp(ell), beta):
            checks["β semilinear"].append(sample)

        if subject.quadratic(beta) != L.sharp(subject.quadratic(v)):
            checks["Q(β(v)) = Q(v)^♯"].append(sample)

        if not L.in_ground_field(subject.polar_q(v, beta)):
            checks["N_V(v) in F"].append(sample)

    for name, failures in checks.items():
        if failures:
            report.failed(name, failures[0], f"{len(failures)} of {config.samples} samples fail")
        else:
            report.passed(name, config.samples)

    if subject.is_standard:
        epsilon = subject.epsilon()
        if subject.beta(epsilon) == epsilon:
            report.passed("β(ε) = ε")
        else:
            report.failed("β(ε) = ε", subject.beta(epsilon))

        if subject.quadratic(epsilon) == L.one():
            report.passed("Q(ε) = 1")
        else:
            report.failed("Q(ε) = 1", subject.quadratic(epsilon))

    for failure in report.failures:
        logger.info("%s: %s failed with witness %r", report.subject, failure.name, failure.witness)

    return report


# ---------------------------- #
# Graded target                #
# ---------------------------- #


class TwistedTarget(GradedTarget, target_kind="twisted"):
    """A twisted composition as a graded object: β is self-valued, b_Q takes values in L graded by deg ξ = h, and ξ
    shifts degrees by h. The degree h is read from the grading's parameters."""

    def __init__(self, twisted: TwistedComposition):
        self.twisted = twisted

    @classmethod
    @cache
    def of(cls, twisted: TwistedComposition) -> "TwistedTarget":
        return cls(twisted)

    @property
    def dim(self) -> int:
        return self.twisted.dim

    @property
    def name(self) -> str:
        return self.twisted.name

    def laws(self, grading: Grading) -> list[BilinearLaw | LinearLaw]:
        h = grading.parameters.get("h", grading.group.zero)
        values: dict = {}
        for j in range(3):
            line = Subspace.span([tuple(Fraction(int(i == j)) for i in range(3))])
            degree = h * j
            values[degree] = values[degree] + line if degree in values else line

        return [
            BilinearLaw("beta", self.twisted.beta_polar, symmetric=True),
            BilinearLaw("b_Q", self.twisted.polar_q, values, symmetric=True),
            LinearLaw("xi action", self.twisted.xi_matrix(), h),
        ]

    def form(self) -> Optional[Matrix]:
        return Optional.Some(self.twisted.trace_gram)

    def to_json(self) -> dict:
        return {"twisted": self.twisted.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "TwistedTarget":
        return cls(TwistedComposition.from_json(data["twisted"]))
