from functools import cache

from tramp.optionals import Optional

from octograd.composition import SCAlgebra
from octograd.gradings.grading import BilinearLaw, GradedTarget, Grading, Law, LinearLaw
from octograd.linalg import Matrix, Subspace


class AlgebraTarget(GradedTarget, target_kind="algebra"):
    """An SCAlgebra as a graded object: the product, the polar form of the norm (values of degree e) and the standard
    involution (degree preserving) must be compatible."""

    def __init__(self, algebra: SCAlgebra):
        self.algebra = algebra

    @classmethod
    @cache
    def of(cls, algebra: SCAlgebra) -> "AlgebraTarget":
        """Shared target per algebra, so gradings of the same algebra compare equal."""
        return cls(algebra)

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def name(self) -> str:
        return self.algebra.name

    def laws(self, grading: Grading) -> list[Law]:
        laws: list[Law] = [BilinearLaw("product", self.algebra.multiply)]
        if self.algebra.has_norm:
            laws.append(
                BilinearLaw(
                    "polar form",
                    lambda x, y: (self.algebra.polar(x, y),),
                    {grading.group.zero: Subspace.full(1)},
                    symmetric=True,
                )
            )
            if self.algebra.is_unital:
                laws.append(LinearLaw("involution", self.algebra.involution_matrix()))

        return laws

    def form(self) -> Optional[Matrix]:
        match self.algebra.norm:
            case Optional.Some(norm):
                return Optional.Some(norm.gram)
            case _:
                return Optional.Nothing()

    def to_json(self) -> dict:
        return {"algebra": self.algebra.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "AlgebraTarget":
        return cls(SCAlgebra.from_json(data["algebra"]))
