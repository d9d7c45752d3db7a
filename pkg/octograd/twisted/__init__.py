from octograd.twisted.albert import AlbertAlgebra, albert, verify_albert
from octograd.twisted.composition import (
    CayleyFrame,
    TwistedComposition,
    TwistedTarget,
    cayley_frame,
    similitude,
    tc_hurwitz,
    verify_twisted_axioms,
)
from octograd.twisted.cyclic import CyclicComposition, cyclic_from_symmetric, verify_cyclic_axioms
from octograd.twisted.etale import EtaleCubic
from octograd.twisted.gradings import (
    HSquareWitness,
    TypeIIILabel,
    cayley_grading,
    h_square_isomorphism,
    identity_component_dim,
    minimal_typeIII_instances,
    recover_cayley_grading,
    twist_by_center,
    typeIII_grading,
    typeIII_iso_decision,
)

__all__ = [
    "AlbertAlgebra",
    "CayleyFrame",
    "CyclicComposition",
    "EtaleCubic",
    "HSquareWitness",
    "TwistedComposition",
    "TwistedTarget",
    "TypeIIILabel",
    "albert",
    "cayley_frame",
    "cayley_grading",
    "cyclic_from_symmetric",
    "h_square_isomorphism",
    "identity_component_dim",
    "minimal_typeIII_instances",
    "recover_cayley_grading",
    "similitude",
    "tc_hurwitz",
    "twist_by_center",
    "typeIII_grading",
    "typeIII_iso_decision",
    "verify_albert",
    "verify_cyclic_axioms",
    "verify_twisted_axioms",
]
