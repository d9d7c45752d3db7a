"""
Cyclic Compositions

A symmetric composition algebra (S, ⋆, n) gives a cyclic composition on S×S×S over F×F×F with

    x * y = (x₂⋆y₃, x₃⋆y₁, x₁⋆y₂),    Q(x) = (n(x₁), n(x₂), n(x₃)),

which is ρ-semilinear in x and ρ²-semilinear in y and satisfies Q(x*y) = ρ(Q(x))ρ²(Q(y)).
"""


import logging
import random
from typing import Any, Sequence

from octograd.composition import SCAlgebra, is_symmetric_composition
from octograd.config import RunConfig, get_config, random_rational_vector
from octograd.errors import PreconditionError
from octograd.linalg import Vector
from octograd.results import VerificationReport
from octograd.twisted.etale import EtaleCubic

logger = logging.getLogger(__name__)


class CyclicComposition:
    def __init__(self, symmetric: SCAlgebra):
        self.symmetric = symmetric
        self.etale = EtaleCubic.split()
        self.slot_dim = symmetric.dim
        self.dim = 3 * symmetric.dim

    def __repr__(self):
        return f"<CyclicComposition over {self.symmetric.name}>"

    def slots(self, x: Sequence[Any]) -> tuple[Vector, Vector, Vector]:
        n = self.slot_dim
        return tuple(tuple(x[s * n: (s + 1) * n]) for s in range(3))

    @staticmethod
    def join(slots: Sequence[Sequence[Any]]) -> Vector:
        return tuple(c for slot in slots for c in slot)

    def product(self, x: Sequence[Any], y: Sequence[Any]) -> Vector:
        (x1, x2, x3), (y1, y2, y3) = self.slots(x), self.slots(y)
        star = self.symmetric.multiply
        return self.join((star(x2, y3), star(x3, y1), star(x1, y2)))

    def quadratic(self, x: Sequence[Any]) -> Vector:
        return tuple(self.symmetric.norm_of(slot) for slot in self.slots(x))

    def polar(self, x: Sequence[Any], y: Sequence[Any]) -> Vector:
        return tuple(self.symmetric.polar(a, b) for a, b in zip(self.slots(x), self.slots(y)))

    def act(self, ell: Sequence[Any], x: Sequence[Any]) -> Vector:
        return self.join(tuple(tuple(c * a for a in slot) for c, slot in zip(ell, self.slots(x))))


def cyclic_from_symmetric(symmetric: SCAlgebra) -> CyclicComposition:
    check = is_symmetric_composition(symmetric)
    if not check:
        raise PreconditionError(f"{symmetric.name} is not a symmetric composition algebra: {check!r}")

    cyclic = CyclicComposition(symmetric)
    logger.debug("built %r", cyclic)
    return cyclic


def verify_cyclic_axioms(
    cyclic: CyclicComposition, rng: random.Random | None = None, config: RunConfig | None = None
) -> VerificationReport:
    """Semilinearity, Q(x*y) = ρ(Q(x))ρ²(Q(y)), (x*y)*x = ρ²(Q(x))y, x*(y*x) = ρ(Q(x))y and the cyclicity of b_Q
    on random rational samples."""
    config = config or get_config()
    rng = rng or config.rng()
    report = VerificationReport(f"cyclic composition over {cyclic.symmetric.name}")
    L = cyclic.etale
    checks = {
        "semilinearity": [],
        "Q multiplicative": [],
        "left identity": [],
        "right identity": [],
        "b_Q cyclic": [],
    }
    for sample in range(config.samples):
        x, y, z = (random_rational_vector(rng, cyclic.dim, config) for _ in range(3))
        ell = random_rational_vector(rng, 3, config)
        xy = cyclic.product(x, y)

        if cyclic.product(cyclic.act(ell, x), y) != cyclic.act(L.rho(ell), xy) or cyclic.product(
            x, cyclic.act(ell, y)
        ) != cyclic.act(L.rho2(ell), xy):
            checks["semilinearity"].append(sample)

        if cyclic.quadratic(xy) != L.multiply(L.rho(cyclic.quadratic(x)), L.rho2(cyclic.quadratic(y))):
            checks["Q multiplicative"].append(sample)

        if cyclic.product(xy, x) != cyclic.act(L.rho2(cyclic.quadratic(x)), y):
            checks["left identity"].append(sample)

        if cyclic.product(x, cyclic.product(y, x)) != cyclic.act(L.rho(cyclic.quadratic(x)), y):
            checks["right identity"].append(sample)

        first = cyclic.polar(xy, z)
        if first != L.rho(cyclic.polar(cyclic.product(y, z), x)) or first != L.rho2(
            cyclic.polar(cyclic.product(z, x), y)
        ):
            checks["b_Q cyclic"].append(sample)

    for name, failures in checks.items():
        if failures:
            report.failed(name, failures[0], f"{len(failures)} of {config.samples} samples fail")
        else:
            report.passed(name, config.samples)

    return report
