"""
Albert Algebras from Twisted Compositions

J = L ⊕ V with the cubic norm, adjoint and trace form

    N(ℓ, v) = N_L(ℓ) + b_Q(v, β(v)) − T_L(ℓ·Q(v))
    (ℓ, v)^♯ = (ℓ^♯ − Q(v), β(v) − ℓ·v)
    T((ℓ, v), (ℓ′, v′)) = T_L(ℓℓ′) + T_L(b_Q(v, v′))

The checks are the cubic-form identities that make J an Albert algebra; nothing here is graded.
"""


import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

from octograd.config import RunConfig, get_config, random_rational_vector
from octograd.errors import DimensionMismatch
from octograd.linalg import Vector
from octograd.results import VerificationReport
from octograd.twisted.composition import CARRIER_DIM, TwistedComposition

logger = logging.getLogger(__name__)

ALBERT_DIM = 3 + CARRIER_DIM


@dataclass(frozen=True)
class AlbertAlgebra:
    twisted: TwistedComposition

    @property
    def dim(self) -> int:
        return ALBERT_DIM

    @property
    def name(self) -> str:
        return f"J({self.twisted.name})"

    def split(self, x: Sequence[Any]) -> tuple[Vector, Vector]:
        if len(x) != ALBERT_DIM:
            raise DimensionMismatch(f"Elements of {self.name} have {ALBERT_DIM} coordinates, got {len(x)}")

        return tuple(x[:3]), tuple(x[3:])

    @staticmethod
    def join(ell: Sequence[Any], v: Sequence[Any]) -> Vector:
        return (*ell, *v)

    def unit(self) -> Vector:
        return self.join(self.twisted.etale.one(), (Fraction(0),) * CARRIER_DIM)

    def epsilon(self) -> Vector:
        return self.join(self.twisted.etale.zero(), self.twisted.epsilon())

    def norm(self, x: Sequence[Any]) -> Any:
        L, V = self.twisted.etale, self.twisted
        ell, v = self.split(x)
        return L.norm(ell) + L.ground_value(V.norm(v)) - L.trace(L.multiply(ell, V.quadratic(v)))

    def sharp(self, x: Sequence[Any]) -> Vector:
        L, V = self.twisted.etale, self.twisted
        ell, v = self.split(x)
        return self.join(
            L.sub(L.sharp(ell), V.quadratic(v)),
            tuple(a - b for a, b in zip(V.beta(v), V.act(ell, v))),
        )

    def sharp_polar(self, x: Sequence[Any], y: Sequence[Any]) -> Vector:
        """x × y = (x + y)^♯ − x^♯ − y^♯."""
        total = self.sharp(tuple(a + b for a, b in zip(x, y)))
        return tuple(s - a - b for s, a, b in zip(total, self.sharp(x), self.sharp(y)))

    def trace_form(self, x: Sequence[Any], y: Sequence[Any]) -> Any:
        L, V = self.twisted.etale, self.twisted
        (ell, v), (other, w) = self.split(x), self.split(y)
        return L.trace(L.multiply(ell, other)) + L.trace(V.polar_q(v, w))

    def trace(self, x: Sequence[Any]) -> Any:
        return self.trace_form(self.unit(), x)


def albert(twisted: TwistedComposition) -> AlbertAlgebra:
    return AlbertAlgebra(twisted)


def verify_albert(
    algebra: AlbertAlgebra,
    rng: random.Random | None = None,
    config: RunConfig | None = None,
    samples: int | None = None,
) -> VerificationReport:
    """N(1) = 1, ε^♯ = −1 + ε and the adjoint identity (x^♯)^♯ = N(x)·x on random samples."""
    config = config or get_config()
    rng = rng or config.rng()
    samples = config.samples if samples is None else samples
    report = VerificationReport(f"cubic norm structure of {algebra.name}")

    one, epsilon = algebra.unit(), algebra.epsilon()
    if algebra.norm(one) == 1:
        report.passed("N(1) = 1")
    else:
        report.failed("N(1) = 1", algebra.norm(one))

    expected = tuple(e - u for e, u in zip(epsilon, one))
    if algebra.sharp(epsilon) == expected:
        report.passed("ε^♯ = −1 + ε")
    else:
        report.failed("ε^♯ = −1 + ε", algebra.sharp(epsilon))

    failures = []
    for sample in range(samples):
        x = random_rational_vector(rng, ALBERT_DIM, config)
        norm = algebra.norm(x)
        if algebra.sharp(algebra.sharp(x)) != tuple(norm * c for c in x):
            failures.append(sample)

    if failures:
        report.failed("adjoint identity", failures[0], f"{len(failures)} of {samples} samples fail")
    else:
        report.passed("adjoint identity", samples)

    for failure in report.failures:
        logger.info("%s: %s failed with witness %r", report.subject, failure.name, failure.witness)

    return report
