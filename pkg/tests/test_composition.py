import random
from fractions import Fraction

import pytest

from octograd.composition import (
    SCAlgebra,
    cayley_dickson,
    find_algebra,
    get_algebra,
    ground_field,
    hurwitz_algebra,
    is_symmetric_composition,
    para_hurwitz,
    split_cayley_good_basis,
    standard_involution,
)
from octograd.composition.algebra import basis_vector, scale
from octograd.config import random_rational_vector
from octograd.errors import PreconditionError
from octograd.linalg import Matrix

HURWITZ_NAMES = ["F", "C", "Cs", "H", "Hs", "O", "Os", "split-cayley"]


def e(i: int, dim: int = 8):
    return basis_vector(dim, i)


@pytest.mark.parametrize("name", HURWITZ_NAMES, ids=HURWITZ_NAMES)
def test_composition_law_on_basis_tuples(name):
    assert get_algebra(name).composition_witness() is None


@pytest.mark.parametrize(
    "name, inertia",
    [("O", (8, 0, 0)), ("Os", (4, 4, 0)), ("split-cayley", (4, 4, 0)), ("H", (4, 0, 0)), ("Cs", (1, 1, 0))],
    ids=["O", "Os", "good-basis", "H", "Cs"],
)
def test_norm_inertia(name, inertia):
    algebra = get_algebra(name)
    assert algebra.norm_inertia().as_tuple() == inertia
    assert algebra.is_division == (inertia[1] == 0)


def test_quaternions_are_associative_octonions_are_not():
    assert get_algebra("H").is_associative
    assert get_algebra("Hs").is_associative
    assert get_algebra("O").associativity_witness() is not None


@pytest.mark.parametrize("name", ["O", "Os", "split-cayley"], ids=["O", "Os", "good-basis"])
def test_cayley_algebras_are_alternative(name):
    algebra = get_algebra(name)
    rng = random.Random(7)
    samples = [(random_rational_vector(rng, 8), random_rational_vector(rng, 8)) for _ in range(20)]
    assert algebra.alternativity_witness(samples) is None


def test_doubling_norm_of_u():
    for alpha in (Fraction(-1), Fraction(1), Fraction(3, 2)):
        algebra = cayley_dickson(ground_field(), alpha)
        assert algebra.norm_of(e(1, 2)) == -alpha
        assert algebra.multiply(e(1, 2), e(1, 2)) == (alpha, 0)


def test_doubling_records_chain():
    algebra = hurwitz_algebra(-1, 1, -1)
    chain = algebra.require_chain()
    assert chain.base_dim == 1
    assert chain.alphas == (-1, 1, -1)


def test_doubling_preconditions():
    with pytest.raises(PreconditionError):
        cayley_dickson(ground_field(), 0)

    with pytest.raises(PreconditionError):
        cayley_dickson(get_algebra("O"), -1)


def test_good_basis_table():
    algebra = split_cayley_good_basis()
    e1, e2, u1, u2, u3, v1, v2, v3 = (e(i) for i in range(8))
    assert algebra.multiply(u1, u2) == v3
    assert algebra.multiply(u2, u1) == scale(-1, v3)
    assert algebra.multiply(u1, v1) == scale(-1, e1)
    assert algebra.multiply(v1, u1) == scale(-1, e2)
    assert algebra.multiply(e1, u3) == u3
    assert algebra.multiply(u3, e1) == (0,) * 8
    assert algebra.polar(e1, e2) == 1
    assert algebra.require_unit() == (1, 1, 0, 0, 0, 0, 0, 0)


def test_standard_involution_on_good_basis():
    algebra = split_cayley_good_basis()
    involution = standard_involution(algebra)
    assert involution.apply(e(0)) == e(1)
    assert involution.apply(e(2)) == scale(-1, e(2))
    assert involution.apply(algebra.require_unit()) == algebra.require_unit()
    assert involution @ involution == Matrix.identity(8)


@pytest.mark.parametrize("name", ["O", "Os", "H"], ids=["O", "Os", "H"])
def test_x_times_conjugate_is_norm(name):
    algebra = get_algebra(name)
    rng = random.Random(3)
    for _ in range(10):
        x = random_rational_vector(rng, algebra.dim)
        assert algebra.multiply(x, algebra.conjugate(x)) == scale(algebra.norm_of(x), algebra.require_unit())


@pytest.mark.parametrize("name", ["O", "Os"], ids=["O", "Os"])
def test_para_hurwitz_identity(name):
    algebra = para_hurwitz(get_algebra(name))
    rng = random.Random(11)
    for _ in range(100):
        x, y = random_rational_vector(rng, 8), random_rational_vector(rng, 8)
        assert algebra.multiply(algebra.multiply(x, y), x) == scale(algebra.norm_of(x), y)


def test_para_unit():
    algebra = para_hurwitz(get_algebra("O"))
    unit = algebra.para_unit.value_or(None)
    assert algebra.multiply(unit, unit) == unit
    for i in range(1, 8):
        assert algebra.multiply(unit, e(i)) == scale(-1, e(i))
        assert algebra.multiply(e(i), unit) == scale(-1, e(i))


def test_symmetric_composition_predicate():
    assert is_symmetric_composition(para_hurwitz(get_algebra("O")))
    assert is_symmetric_composition(ground_field())

    result = is_symmetric_composition(get_algebra("O"))
    assert not result
    assert len(result.witness) == 3


def test_trace_zero_subspace():
    algebra = get_algebra("O")
    traceless = algebra.trace_zero_subspace()
    assert traceless.dim == 7
    assert algebra.require_unit() not in traceless


def test_rebased_algebra_keeps_norm_and_unit():
    algebra = get_algebra("Os")
    basis = [e(0), *(tuple(a + b for a, b in zip(e(i), e(i + 1))) for i in range(1, 7)), e(7)]
    rebased = algebra.rebased(basis)
    assert rebased.require_unit() == e(0)
    assert rebased.composition_witness() is None
    assert rebased.norm_inertia() == algebra.norm_inertia()


def test_quad_form_consistency():
    assert get_algebra("split-cayley").require_norm().check_consistency()


def test_registry():
    assert get_algebra("O") is get_algebra("O")
    assert find_algebra("nope").value_or(None) is None
    with pytest.raises(KeyError):
        get_algebra("nope")


def test_algebra_json():
    algebra = get_algebra("Os")
    loaded = SCAlgebra.from_json(algebra.to_json())
    assert loaded.mult == algebra.mult
    assert loaded.require_norm().gram == algebra.require_norm().gram
    assert loaded.require_chain() == algebra.require_chain()
