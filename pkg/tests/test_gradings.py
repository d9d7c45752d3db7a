import pytest

from octograd.composition import get_algebra
from octograd.errors import PreconditionError
from octograd.gradings import (
    CartanTriple,
    Grading,
    QuadraticType,
    admissible,
    admissible_characters,
    cartan_grading,
    cartan_z2_grading,
    cayley_cd_grading,
    fine_cayley,
    fingerprint,
    grading_universal_group,
    induce,
    induced_by_universal,
    iso_decision,
    label_from_json,
    label_to_json,
    refines,
    trivial_grading,
    verify_grading,
)
from octograd.gradings.targets import AlgebraTarget
from octograd.groups import Character, FinAbGroup, GroupHom
from octograd.linalg import Inertia, Subspace

Z2 = FinAbGroup.free(2)
Z2_CUBED = FinAbGroup(0, (2, 2, 2))


@pytest.fixture(scope="module")
def cartan():
    return cartan_z2_grading()


def test_cartan_grading_passes(cartan):
    report = verify_grading(cartan)
    assert report, report.as_dict()
    assert len(cartan.components) == 7
    assert cartan.census() == {2: 1, 1: 6}


def test_corrupted_grading_fails_with_witness(cartan):
    components = dict(cartan.components)
    e1, u1 = (tuple(int(i == k) for i in range(8)) for k in (0, 2))
    e2 = tuple(int(i == 1) for i in range(8))
    components[Z2(0, 0)] = Subspace.span([u1, e2])
    components[Z2(1, 0)] = Subspace.span([e1])
    corrupted = Grading(Z2, components, cartan.target)
    report = verify_grading(corrupted)
    assert not report
    failure = report.failures[0]
    assert failure.name == "product"
    assert len(failure.witness) == 4


def test_trivial_grading_passes_and_has_trivial_universal_group():
    grading = trivial_grading(AlgebraTarget.of(get_algebra("O")))
    assert verify_grading(grading)
    group, _ = grading_universal_group(grading)
    assert group == FinAbGroup()


def test_induce_along_identity_and_zero(cartan):
    assert induce(cartan, GroupHom.identity(Z2)) == cartan
    collapsed = induce(cartan, GroupHom.zero(Z2, FinAbGroup.cyclic(5)))
    assert len(collapsed.components) == 1
    assert verify_grading(collapsed)


def test_induce_to_z3_squared(cartan):
    target = FinAbGroup(0, (3, 3))
    induced = induce(cartan, GroupHom(Z2, target, (target(1, 0), target(0, 1))))
    # the seven Cartan degrees stay distinct modulo 3
    assert len(induced.components) == 7
    assert max(induced.dims().values()) <= 2
    assert verify_grading(induced)
    assert refines(cartan, induced)
    assert not refines(trivial_grading(cartan.target), cartan)


def test_cartan_universal_group(cartan):
    group, relabeled = grading_universal_group(cartan)
    assert group == FinAbGroup.free(2)
    assert verify_grading(relabeled)
    assert induced_by_universal(cartan) == cartan


@pytest.mark.parametrize("which", ["O-Z2^3", "Os-Z2^3"], ids=["division", "split"])
def test_fine_elementary_gradings(which):
    grading = fine_cayley(which)
    assert verify_grading(grading)
    assert grading.census() == {1: 8}
    group, _ = grading_universal_group(grading)
    assert group == Z2_CUBED
    assert induced_by_universal(grading) == grading


def test_cartan_triple_constructor():
    trivial = cartan_grading(Z2, (Z2.zero, Z2.zero, Z2.zero))
    assert len(trivial.components) == 1

    full = cartan_grading(Z2, (Z2(1, 0), Z2(0, 1), Z2(-1, -1)))
    assert len(full.components) == 7
    u3 = tuple(int(i == 4) for i in range(8))
    assert full.degree_of(u3).value_or(None) == Z2(-1, -1)

    with pytest.raises(PreconditionError):
        cartan_grading(Z2, (Z2(1, 0), Z2(0, 1), Z2(1, 1)))


def test_quaternion_type_on_division_octonions():
    group = FinAbGroup.cyclic(2)
    grading = cayley_cd_grading("O", group, (group(1),))
    assert verify_grading(grading)
    prints = fingerprint(grading)
    assert prints[group.zero] == (4, Inertia(4, 0, 0))
    assert prints[group(1)] == (4, Inertia(4, 0, 0))


def test_trivial_fingerprint_on_octonions():
    grading = trivial_grading(AlgebraTarget.of(get_algebra("O")))
    assert fingerprint(grading) == {FinAbGroup().zero: (8, Inertia(8, 0, 0))}


def test_cartan_fingerprint_has_isotropic_lines(cartan):
    assert fingerprint(cartan)[Z2(1, 0)] == (1, Inertia(0, 0, 1))


def test_admissible_characters():
    basis = Z2_CUBED.gens
    assert admissible(Character(basis, (1, 1, 1)), "O")
    assert not admissible(Character(basis, (1, 1, 1)), "Os")
    assert len(admissible_characters(basis, "Os")) == 7
    assert len(admissible_characters(basis, "O")) == 1

    four = FinAbGroup(0, (2, 2))
    split_four = admissible_characters(four.gens, "Os")
    assert len(split_four) == 3
    assert all(not mu.is_trivial for mu in split_four)


def test_non_admissible_mu_is_rejected():
    with pytest.raises(PreconditionError):
        cayley_cd_grading("Os", Z2_CUBED, Z2_CUBED.gens, Character(Z2_CUBED.gens, (1, 1, 1)))


def test_split_mu_matches_block_norms():
    mu = Character(Z2_CUBED.gens, (1, -1, -1))
    grading = cayley_cd_grading("Os", Z2_CUBED, Z2_CUBED.gens, mu)
    assert verify_grading(grading)
    for degree, (dim, inertia) in fingerprint(grading).items():
        expected = Inertia(1, 0, 0) if mu(degree) > 0 else Inertia(0, 1, 0)
        assert (dim, inertia) == (1, expected)


def test_quadratic_type_census():
    four = FinAbGroup(0, (2, 2))
    grading = cayley_cd_grading("O", four, four.gens)
    assert verify_grading(grading)
    assert grading.census() == {2: 4}
    assert isinstance(grading.label, QuadraticType)


def test_cartan_iso_decision():
    a, b = Z2(1, 0), Z2(0, 1)
    first = CartanTriple((a, b, -(a + b)))
    second = CartanTriple((-b, -a, a + b))
    assert iso_decision(first, second)
    assert iso_decision(first, first)
    assert not iso_decision(first, CartanTriple((a, a, -(a + a))))


def test_iso_decision_is_sound_for_fingerprints():
    a, b = Z2(1, 0), Z2(0, 1)
    first = cartan_grading(Z2, (a, b, -(a + b)))
    second = cartan_grading(Z2, (-b, -a, a + b))
    assert iso_decision(first.label, second.label)
    assert sorted(
        (d, i.as_tuple()) for d, i in fingerprint(first).values()
    ) == sorted((d, i.as_tuple()) for d, i in fingerprint(second).values())


def test_cd_labels_with_different_t_are_not_isomorphic():
    group = FinAbGroup(0, (2, 2, 2))
    t1, t2, t3 = group.gens
    first = QuadraticType("O", Character((t1, t2), (1, 1)))
    second = QuadraticType("O", Character((t1, t3), (1, 1)))
    assert not iso_decision(first, second)
    assert iso_decision(first, QuadraticType("O", Character((t2, t1), (1, 1))))


def test_trivial_cartan_triple_is_the_trivial_label():
    zero = Z2.zero
    trivial = cartan_grading(Z2, (zero, zero, zero))
    assert iso_decision(trivial.label, CartanTriple((zero, zero, zero)))


def test_labels_over_different_groups():
    with pytest.raises(PreconditionError):
        iso_decision(CartanTriple((Z2.zero,) * 3), CartanTriple((Z2_CUBED.zero,) * 3))


def test_label_json():
    label = QuadraticType("Os", Character(FinAbGroup(0, (2, 2)).gens, (1, -1)))
    assert label_from_json(label_to_json(label)) == label


def test_unknown_fine_grading():
    with pytest.raises(PreconditionError):
        fine_cayley("nope")
