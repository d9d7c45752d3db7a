from octograd.composition.algebra import DoublingChain, QuadForm, SCAlgebra
from octograd.composition.hurwitz import (
    cayley_dickson,
    ground_field,
    hurwitz_algebra,
    is_symmetric_composition,
    para_hurwitz,
    split_cayley_good_basis,
    standard_involution,
)
from octograd.composition.registry import NamedAlgebra, algebra_names, find_algebra, get_algebra

__all__ = [
    "DoublingChain",
    "NamedAlgebra",
    "QuadForm",
    "SCAlgebra",
    "algebra_names",
    "cayley_dickson",
    "find_algebra",
    "get_algebra",
    "ground_field",
    "hurwitz_algebra",
    "is_symmetric_composition",
    "para_hurwitz",
    "split_cayley_good_basis",
    "standard_involution",
]
