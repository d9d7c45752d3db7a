from octograd.errors import (
    CodecError,
    DimensionMismatch,
    FieldError,
    GroupError,
    OctogradError,
    PreconditionError,
)
from octograd.config import RunConfig, get_config, use_config
from octograd.results import CheckResult, VerificationReport
from octograd.groups import FinAbGroup, GroupElem, GroupHom
from octograd.composition import SCAlgebra, get_algebra, hurwitz_algebra, para_hurwitz
from octograd.gradings import (
    Grading,
    cartan_grading,
    cayley_cd_grading,
    fine_cayley,
    grading_universal_group,
    induce,
    verify_grading,
)
from octograd.lie import LinearLieAlg, derivations, induced_grading_on_der, so_of_form, triality_algebra
from octograd.twisted import (
    TwistedComposition,
    TypeIIILabel,
    albert,
    cayley_grading,
    tc_hurwitz,
    typeIII_grading,
    verify_twisted_axioms,
)
from octograd.d4 import der_of_twisted, fine_typeIII, so_tilde_v0, typeIII_so_grading
