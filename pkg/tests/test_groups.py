import itertools

import pytest

from octograd.errors import GroupError
from octograd.groups import (
    Character,
    FinAbGroup,
    GroupElem,
    GroupHom,
    characters,
    presented_group,
    subgroup_generated,
    universal_group,
    universal_presentation,
)


def test_from_factors_is_in_invariant_factor_form():
    group, images = FinAbGroup.from_factors(0, (2, 2, 2, 3))
    assert group == FinAbGroup(0, (2, 2, 6))
    assert group.order == 24
    assert [image.order for image in images] == [2, 2, 2, 3]
    assert subgroup_generated(images).order == 24


def test_invalid_invariant_factors():
    with pytest.raises(GroupError):
        FinAbGroup(0, (3, 2))

    with pytest.raises(GroupError):
        FinAbGroup(-1)


def test_element_arithmetic_and_orders():
    group = FinAbGroup(1, (6,))
    x = group(2, 4)
    assert x + x == group(4, 2)
    assert -x == group(-2, 2)
    assert x.order is None
    assert group(0, 4).order == 3
    assert group.zero.is_identity
    assert str(x) == "2;4"


def test_parse():
    group = FinAbGroup(2, (3,))
    assert group.parse("1,-1;2") == group(1, -1, 2)
    assert group.parse("e") == group.zero
    assert FinAbGroup.cyclic(6).parse("5") == FinAbGroup.cyclic(6)(5)
    with pytest.raises(GroupError):
        group.parse("1,2")


def test_elements_of_finite_group():
    group = FinAbGroup(0, (2, 4))
    assert len(set(group.elements())) == 8
    with pytest.raises(GroupError):
        list(FinAbGroup.free(1).elements())


def test_elements_of_different_groups_do_not_mix():
    with pytest.raises(GroupError):
        FinAbGroup.cyclic(2)(1) + FinAbGroup.cyclic(3)(1)


def test_product_inclusions():
    group, left, right = FinAbGroup.cyclic(2).product(FinAbGroup.cyclic(3))
    assert group == FinAbGroup.cyclic(6)
    assert (left(FinAbGroup.cyclic(2)(1)) + right(FinAbGroup.cyclic(3)(1))).order == 6


def test_homomorphisms():
    z6 = FinAbGroup.cyclic(6)
    z3 = FinAbGroup.cyclic(3)
    reduction = GroupHom(z6, z3, (z3(1),))
    assert reduction(z6(5)) == z3(2)
    assert reduction.in_kernel(z6(3))
    assert reduction.compose(GroupHom.identity(z6)) == reduction
    with pytest.raises(GroupError):
        GroupHom(z3, z6, (z6(1),))


def test_subgroups_are_canonical():
    group = FinAbGroup(1, (4,))
    first = subgroup_generated([group(2, 0), group(0, 2)])
    second = subgroup_generated([group(2, 2), group(0, 2), group(4, 0)])
    assert first == second
    assert group(2, 2) in first
    assert group(1, 0) not in first
    assert not first.is_finite


def test_characters():
    group = FinAbGroup(0, (2, 2))
    basis = group.gens
    all_characters = characters(basis)
    assert len(all_characters) == 4
    assert all_characters[0].is_trivial
    mu = Character(basis, (1, -1))
    assert mu(group(1, 1)) == -1
    assert mu == Character((group(1, 1), group(1, 0)), (-1, 1))
    with pytest.raises(GroupError):
        Character((group(1, 0), group(1, 0)), (1, -1))


def test_presented_group():
    group, images = presented_group(2, [[2, 0], [0, 3]])
    assert group == FinAbGroup.cyclic(6)
    assert images[0].order == 2 and images[1].order == 3


def test_universal_group_of_a_cyclic_support():
    relations = [("a", "a", "b"), ("a", "b", "c"), ("a", "c", None)]
    group, images = universal_group(["a", "b", "c"], relations)
    assert group == FinAbGroup.cyclic(4)
    assert images["a"].order == 4
    presentation = universal_presentation(["a", "b", "c"], relations)
    z4 = FinAbGroup.cyclic(4)
    hom = presentation.hom_to({"a": z4(3), "b": z4(2), "c": z4(1)}, z4)
    assert hom(presentation.images["a"]) == z4(3)


def test_universal_group_does_not_depend_on_relation_order():
    support = ["a", "b", "c", "d"]
    relations = [("a", "a", "b"), ("a", "b", "c"), ("a", "c", None), ("d", "d", "a")]
    expected_group, expected_images = universal_group(support, relations)
    assert expected_group == FinAbGroup.cyclic(8)
    assert expected_images["d"].order == 8 and expected_images["a"].order == 4

    for order in itertools.permutations(relations):
        group, images = universal_group(support, order)
        assert group == expected_group
        assert images == expected_images


def test_json():
    group = FinAbGroup(1, (2, 6))
    x = group(3, 1, 5)
    assert FinAbGroup.from_json(group.to_json()) == group
    assert GroupElem.from_json(group, x.to_json()) == x
