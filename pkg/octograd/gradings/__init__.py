from octograd.gradings.cayley import (
    admissible,
    admissible_characters,
    cartan_grading,
    cartan_z2_grading,
    cayley_cd_grading,
    cayley_grading_from_label,
    cayley_kind,
    cd_grading,
    fine_cayley,
    trivial_cayley_grading,
)
from octograd.gradings.grading import (
    BilinearLaw,
    GradedTarget,
    Grading,
    LinearLaw,
    fingerprint,
    grading_relations,
    grading_universal_group,
    induce,
    induced_by_universal,
    refines,
    target_from_json,
    target_to_json,
    trivial_grading,
    universal_projection,
    verify_grading,
)
from octograd.gradings.labels import (
    CartanTriple,
    FullType,
    GradingLabel,
    QuadraticType,
    QuaternionType,
    TrivialLabel,
    iso_decision,
    label_from_json,
    label_to_json,
)
from octograd.gradings.registry import NamedGrading, grading_names
from octograd.gradings.targets import AlgebraTarget
