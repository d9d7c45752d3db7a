from fractions import Fraction

import pytest

from octograd.composition import get_algebra, para_hurwitz
from octograd.config import RunConfig
from octograd.errors import PreconditionError
from octograd.gradings import CartanTriple, cayley_cd_grading, trivial_cayley_grading, verify_grading
from octograd.gradings.cayley import elementary_group
from octograd.groups import FinAbGroup
from octograd.twisted import (
    EtaleCubic,
    TypeIIILabel,
    albert,
    cayley_grading,
    cyclic_from_symmetric,
    h_square_isomorphism,
    identity_component_dim,
    minimal_typeIII_instances,
    recover_cayley_grading,
    similitude,
    tc_hurwitz,
    twist_by_center,
    typeIII_grading,
    typeIII_iso_decision,
    verify_albert,
    verify_cyclic_axioms,
    verify_twisted_axioms,
)
from octograd.twisted.composition import carrier_index, carrier_vector

FEW = RunConfig(seed=7, samples=6)
L = EtaleCubic.twisted()


@pytest.fixture(scope="module")
def tc_o():
    return tc_hurwitz(get_algebra("O"))


@pytest.fixture(scope="module")
def tc_os():
    return tc_hurwitz(get_algebra("Os"))


@pytest.fixture(scope="module")
def instances():
    return minimal_typeIII_instances()


@pytest.fixture(scope="module")
def trivial_z3():
    group = FinAbGroup.cyclic(3)
    return cayley_grading(group, trivial_cayley_grading(get_algebra("O"), group), group(1))


def test_etale_center_twist_is_its_own_adjoint():
    a = L.center_twist()
    assert L.multiply(a, a) == L.one()
    assert L.sharp(a) == a
    assert L.to_pair(a)[0] == 1


def test_xi_adjoint_is_xi_squared():
    xi = L.xi()
    assert L.sharp(xi) == L.multiply(xi, xi)
    assert L.norm(xi) == 1


def test_cyclic_composition_axioms():
    cyclic = cyclic_from_symmetric(para_hurwitz(get_algebra("O")))
    report = verify_cyclic_axioms(cyclic, config=FEW)
    assert report, report.as_dict()


def test_cyclic_product_of_first_and_second_slot_lands_in_third():
    cyclic = cyclic_from_symmetric(para_hurwitz(get_algebra("O")))
    one = tuple(Fraction(int(i == 0)) for i in range(8))
    zero = (Fraction(0),) * 8
    first, second, third = cyclic.slots(cyclic.product(cyclic.join((one, zero, zero)), cyclic.join((zero, one, zero))))
    assert not any(first) and not any(second)
    assert any(third)


def test_cyclic_needs_a_symmetric_composition():
    with pytest.raises(PreconditionError):
        cyclic_from_symmetric(get_algebra("O"))


@pytest.mark.parametrize("name", ["tc_o", "tc_os"], ids=["O", "Os"])
def test_twisted_hurwitz_axioms(name, request):
    twisted = request.getfixturevalue(name)
    report = verify_twisted_axioms(twisted, config=FEW)
    assert report, report.as_dict()
    assert {check.name for check in report} >= {"β(ε) = ε", "Q(ε) = 1"}
    assert twisted.dim == 24


def test_epsilon_is_fixed_by_beta_and_has_unit_norm(tc_o):
    epsilon = tc_o.epsilon()
    assert tc_o.beta(epsilon) == epsilon
    assert tc_o.quadratic(epsilon) == L.one()


def test_similitude_with_adjoint_multiplier_passes(tc_o):
    report = verify_twisted_axioms(tc_o, L.from_pair(2, 1), config=FEW)
    assert report, report.as_dict()


def test_similitude_with_square_multiplier_fails(tc_o):
    lam = L.from_pair(2, 1)
    report = verify_twisted_axioms(tc_o, lam, L.multiply(lam, lam), config=FEW)
    assert not report
    assert "Q(β(v)) = Q(v)^♯" in {failure.name for failure in report.failures}


def test_similitude_of_xi_defaults_to_xi_squared(tc_o):
    scaled = similitude(tc_o, L.xi())
    assert scaled.multiplier == L.multiply(L.xi(), L.xi())
    assert not scaled.is_standard


def test_similitude_needs_an_invertible_parameter(tc_o):
    with pytest.raises(PreconditionError):
        similitude(tc_o, L.from_pair(0, 1))


def test_multiplier_without_parameter_is_rejected(tc_o):
    with pytest.raises(PreconditionError):
        verify_twisted_axioms(tc_o, None, L.one(), config=FEW)


@pytest.mark.parametrize("name", ["tc_o", "tc_os"], ids=["O", "Os"])
def test_albert_structure(name, request):
    algebra = albert(request.getfixturevalue(name))
    report = verify_albert(algebra, config=FEW, samples=4)
    assert report, report.as_dict()
    assert algebra.dim == 27
    assert algebra.norm(algebra.unit()) == 1


def test_trivial_cayley_grading_lives_on_powers_of_h(trivial_z3):
    group = trivial_z3.group
    assert trivial_z3.dims() == {group(0): 8, group(1): 8, group(2): 8}
    report = verify_grading(trivial_z3)
    assert report, report.as_dict()


def test_fine_cayley_grading_has_one_dimensional_components():
    group, images = FinAbGroup.from_factors(0, (2, 2, 2, 3))
    gamma_c = cayley_cd_grading("O", group, images[:3])
    grading = cayley_grading(group, gamma_c, images[3])
    assert grading.census() == {1: 24}
    assert images[3] in grading.support and images[3] * 2 in grading.support


def test_cayley_grading_needs_order_three():
    group, basis = elementary_group(1)
    with pytest.raises(PreconditionError):
        cayley_grading(group, cayley_cd_grading("O", group, basis), basis[0])


def test_twist_by_center_is_an_involution(trivial_z3):
    twisted = twist_by_center(trivial_z3)
    assert twisted.dims() == trivial_z3.dims()
    assert twisted.components != trivial_z3.components
    assert twist_by_center(twisted).components == trivial_z3.components
    report = verify_grading(twisted)
    assert report, report.as_dict()


def test_h_square_isomorphism(trivial_z3):
    witness = h_square_isomorphism(trivial_z3)
    assert witness.report, witness.report.as_dict()
    phi = witness.matrix
    assert phi.apply(carrier_vector(0)) == carrier_vector(0)
    assert phi.apply(carrier_vector(carrier_index(0, 1))) == carrier_vector(carrier_index(0, 2))
    assert witness.target.parameters["h"] == trivial_z3.parameters["h"] * 2


def test_recover_rejects_a_twisted_grading(trivial_z3):
    assert recover_cayley_grading(trivial_z3).dims() == {trivial_z3.group.zero: 8}
    with pytest.raises(PreconditionError):
        recover_cayley_grading(twist_by_center(trivial_z3))


@pytest.mark.parametrize(
    "item", ["1.a", "1.b", "2.a", "2.b", "2.c", "4.a", "4.b", "4.c", "8.a", "8.b", "8.c"]
)
def test_minimal_instances_verify_with_their_identity_dim(item, instances):
    label = instances[item]
    assert label.item == item
    grading = typeIII_grading(label)
    report = verify_grading(grading)
    assert report, report.as_dict()
    assert identity_component_dim(grading) == (int(item[0]), item)


def test_iso_with_h_and_h_squared(instances):
    label = instances["1.a"]
    assert typeIII_iso_decision(label, TypeIIILabel(label.cayley, label.h * 2))


def test_iso_across_items_is_false(instances):
    assert not typeIII_iso_decision(instances["4.a"], instances["4.b"])


def test_iso_of_cartan_shift_by_h(instances):
    label = instances["2.c"]
    shifted = TypeIIILabel(type(label.cayley)(tuple(g + label.h for g in label.cayley.gamma)), label.h)
    assert shifted.item == "2.c"
    assert typeIII_iso_decision(label, shifted)


def test_iso_is_reflexive_and_symmetric_on_the_z6_pool(instances):
    pool = [instances["4.a"], instances["4.b"], TypeIIILabel(instances["4.a"].cayley, instances["4.a"].h * 2)]
    for first in pool:
        assert typeIII_iso_decision(first, first)
        for second in pool:
            assert typeIII_iso_decision(first, second) == typeIII_iso_decision(second, first)


def test_label_rejects_h_of_wrong_order():
    group = FinAbGroup.cyclic(6)
    with pytest.raises(PreconditionError):
        TypeIIILabel(minimal_typeIII_instances()["4.a"].cayley, group(3))


def cartan_label_pool() -> list[TypeIIILabel]:
    """Cartan labels of items 2.c and 4.c on Z²×Z3, with h and h² as the degree of ξ."""
    group = FinAbGroup(2, (3,))
    x, y, h = group(1, 0, 0), group(0, 1, 0), group(0, 0, 1)

    def label(g1, g2, xi):
        return TypeIIILabel(CartanTriple((g1, g2, -(g1 + g2))), xi)

    pool = []
    for xi in (h, h * 2):
        for i in range(3):
            for j in range(3):
                pool.append(label(x + h * i, y + h * j, xi))
                pool.append(label(h * i, x + h * j, xi))
                pool.append(label(h * i, y + h * j, xi))

    return pool


def test_iso_is_an_equivalence_on_the_cartan_pool():
    pool = cartan_label_pool()
    assert len(pool) == 54
    assert {label.item for label in pool} == {"2.c", "4.c"}

    related = [[typeIII_iso_decision(first, second) for second in pool] for first in pool]
    assert sum(map(sum, related)) > len(pool)
    n = len(pool)
    for a in range(n):
        assert related[a][a]
        for b in range(n):
            assert related[a][b] == related[b][a]
            if related[a][b]:
                assert all(related[a][c] for c in range(n) if related[b][c])
