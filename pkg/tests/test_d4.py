from fractions import Fraction

import pytest

from octograd.composition import get_algebra
from octograd.d4 import (
    census,
    census_csv,
    census_json,
    der_of_twisted,
    fine_typeIII,
    list_fine,
    so_tilde_v0,
    typeIII_so_grading,
    verify_der_of_twisted,
    verify_model,
)
from octograd.errors import PreconditionError
from octograd.gradings import (
    cartan_grading,
    grading_universal_group,
    trivial_cayley_grading,
    trivial_grading,
    verify_grading,
)
from octograd.groups import FinAbGroup
from octograd.lie import LieTarget
from octograd.linalg import Inertia
from octograd.scalars import SQRT3
from octograd.twisted import TypeIIILabel, tc_hurwitz


@pytest.fixture(scope="module")
def model_o():
    return so_tilde_v0(get_algebra("O"))


@pytest.fixture(scope="module")
def model_os():
    return so_tilde_v0(get_algebra("Os"))


@pytest.fixture(scope="module")
def fine_o():
    return fine_typeIII("O-Z2^3Z3")


@pytest.mark.parametrize(
    "name, inertia",
    [("model_o", Inertia(1, 7, 0)), ("model_os", Inertia(5, 3, 0))],
    ids=["so(7,1)", "so(5,3)"],
)
def test_model_realizes_so_of_its_form(name, inertia, request):
    model = request.getfixturevalue(name)
    assert model.form_inertia() == inertia
    assert model.lie.dim == 28
    report = verify_model(model)
    assert report, report.as_dict()


def test_a_plus_sends_unit_to_twice_root_three_x(model_o):
    x = tuple(Fraction(int(i == 3)) for i in range(8))
    a_plus = model_o.a_operator(x, 1)
    a_minus = model_o.a_operator(x, -1)
    for k in range(8):
        expected = 2 * SQRT3 if k == 3 else 0
        assert a_plus[k, 0] == expected
        assert a_minus[k, 0] == -expected


def test_a_operator_needs_a_traceless_argument(model_o):
    with pytest.raises(PreconditionError):
        model_o.a_operator((1,) + (0,) * 7, 1)


def test_trivial_gamma_c_lands_on_powers_of_h():
    group = FinAbGroup.cyclic(3)
    grading = typeIII_so_grading(group, trivial_cayley_grading(get_algebra("O"), group), group(1))
    assert grading.dims() == {group(0): 14, group(1): 7, group(2): 7}
    assert isinstance(grading.label, TypeIIILabel)
    report = verify_grading(grading)
    assert report, report.as_dict()


def test_fine_division_grading(fine_o):
    report = verify_grading(fine_o)
    assert report, report.as_dict()
    assert fine_o.census() == {1: 14, 2: 7}
    group, _ = grading_universal_group(fine_o)
    assert group == FinAbGroup(0, (2, 2, 6))


def test_fine_split_elementary_grading():
    grading = fine_typeIII("Os-Z2^3Z3")
    assert grading.census() == {1: 14, 2: 7}


def test_fine_cartan_grading():
    grading = fine_typeIII("Os-Z^2Z3")
    report = verify_grading(grading)
    assert report, report.as_dict()
    assert grading.census() == {1: 26, 2: 1}
    group, _ = grading_universal_group(grading)
    assert group == FinAbGroup(2, (3,))


def test_unknown_fine_grading():
    with pytest.raises(PreconditionError):
        fine_typeIII("O-Z^2Z3")


def test_typeIII_so_needs_order_three():
    group = FinAbGroup(2, (3,))
    gamma = (group(1, 0, 0), group(0, 1, 0), group(-1, -1, 0))
    with pytest.raises(PreconditionError):
        typeIII_so_grading(group, cartan_grading(group, gamma), group(1, 0, 0))


@pytest.mark.parametrize("algebra", ["O", "Os"])
def test_der_of_twisted_projects_onto_the_model(algebra):
    twisted = tc_hurwitz(get_algebra(algebra))
    der = der_of_twisted(twisted)
    assert der.dim == 28
    report = verify_der_of_twisted(twisted, der)
    assert report, report.as_dict()


def test_census_of_fine_grading(fine_o):
    rows = census(fine_o)
    assert sum(row.dim for row in rows) == 28
    assert sorted(row.dim for row in rows) == [1] * 14 + [2] * 7
    assert all(row.inertia.dim == row.dim for row in rows)


@pytest.mark.parametrize(
    "name, inertia",
    [("model_o", Inertia(7, 21, 0)), ("model_os", Inertia(15, 13, 0))],
    ids=["so(7,1)", "so(5,3)"],
)
def test_census_of_trivial_grading_is_the_killing_inertia(name, inertia, request):
    lie = request.getfixturevalue(name).lie
    (row,) = census(trivial_grading(LieTarget.of(lie)))
    assert row.dim == 28
    assert row.inertia == inertia


def test_census_csv_and_json(model_o):
    rows = census(trivial_grading(LieTarget.of(model_o.lie)))
    lines = census_csv(rows).splitlines()
    assert lines[0] == "degree,dim,p,q,r"
    assert lines[1].endswith(",28,7,21,0")
    assert census_json(rows)[0]["dim"] == 28


@pytest.mark.parametrize(
    "algebra, name, group, counts",
    [
        ("G2-compact", "O-Z2^3", FinAbGroup(0, (2, 2, 2)), {2: 7}),
        ("so71", "O-Z2^3Z3", FinAbGroup(0, (2, 2, 6)), {1: 14, 2: 7}),
    ],
    ids=["G2-compact", "so71"],
)
def test_list_fine(algebra, name, group, counts):
    (row,) = list_fine(algebra)
    assert row.name == name
    assert row.universal_group == group
    assert row.census == counts
    assert row.as_dict()["universal_group"] == str(group)


def test_list_fine_split_forms():
    names = {row.name for row in list_fine("so53")}
    assert names == {"Os-Z2^3Z3", "Os-Z^2Z3"}
    with pytest.raises(PreconditionError):
        list_fine("so62")
