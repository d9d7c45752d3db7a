import random
from fractions import Fraction

import pytest
import sympy
from sympy import QQ
from sympy.matrices.normalforms import smith_normal_form as sympy_smith_normal_form

from octograd.errors import DimensionMismatch, FieldError, PreconditionError
from octograd.linalg import (
    Inertia,
    Matrix,
    Subspace,
    congruence_diagonalize,
    determinant,
    gram_restriction,
    hermite_normal_form,
    inertia_of,
    kernel,
    kernel_of_rows,
    rref,
    smith_normal_form,
)
from octograd.linalg import subspace as subspace_module
from octograd.linalg.domains import QQ_SQRT3, from_domain, to_domain
from octograd.scalars import SQRT3, RealScalar


def random_int_matrix(rng: random.Random, nrows: int, ncols: int, bound: int = 6) -> list[list[int]]:
    return [[rng.randint(-bound, bound) for _ in range(ncols)] for _ in range(nrows)]


def diagonal_of(matrix: Matrix) -> list[int]:
    return [matrix[i, i] for i in range(min(matrix.shape))]


@pytest.mark.parametrize(
    "rows, expected",
    [([[2, 0], [0, 3]], [1, 6]), ([[2, 4], [4, 8]], [2, 0]), ([[0, 0], [0, 0]], [0, 0])],
    ids=["coprime", "rank-one", "zero"],
)
def test_smith_normal_form_examples(rows, expected):
    smith, u, v = smith_normal_form(rows)
    assert diagonal_of(smith) == expected
    assert u @ Matrix(rows) @ v == smith


@pytest.mark.parametrize("seed", range(8))
def test_smith_normal_form_against_sympy(seed):
    rng = random.Random(seed)
    rows = random_int_matrix(rng, 3, 4)
    smith, u, v = smith_normal_form(rows)
    assert u @ Matrix(rows) @ v == smith
    assert abs(determinant(u)) == 1 and abs(determinant(v)) == 1

    oracle = sympy_smith_normal_form(sympy.Matrix(rows), domain=sympy.ZZ)
    expected = [abs(int(oracle[i, i])) for i in range(3)]
    assert sorted(diagonal_of(smith), key=lambda d: (d == 0, d)) == sorted(expected, key=lambda d: (d == 0, d))
    diagonal = diagonal_of(smith)
    for a, b in zip(diagonal, diagonal[1:]):
        assert b == 0 or (a and b % a == 0)


@pytest.mark.parametrize("seed", range(6))
def test_rank_and_determinant_against_sympy(seed):
    rng = random.Random(100 + seed)
    rows = random_int_matrix(rng, 4, 4, bound=3)
    if seed % 2:
        rows[3] = [a + b for a, b in zip(rows[0], rows[1])]

    oracle = sympy.Matrix(rows)
    assert Matrix(rows).rank() == oracle.rank()
    assert determinant(Matrix(rows)) == oracle.det()


def test_hermite_normal_form_is_canonical():
    first = hermite_normal_form([[2, 4], [0, 6]], 2)
    second = hermite_normal_form([[2, 10], [2, 4], [4, 14]], 2)
    assert first == second == [[2, 4], [0, 6]]


def test_inverse_and_kernel():
    m = Matrix([[1, 2], [3, 4]])
    assert m @ m.inverse() == Matrix.identity(2)
    singular = Matrix([[1, 2, 3], [2, 4, 6]])
    space = kernel(singular)
    assert space.dim == 2
    assert all(not any(singular.apply(v)) for v in space.basis)
    with pytest.raises(PreconditionError):
        Matrix([[1, 2], [2, 4]]).inverse()


def test_mismatched_shapes():
    with pytest.raises(DimensionMismatch):
        Matrix([[1, 2], [3]])
    with pytest.raises(DimensionMismatch):
        Matrix.identity(2) @ Matrix.identity(3)


def test_subspace_lattice_operations():
    xy = Subspace.span([(1, 0, 0), (0, 1, 0)])
    yz = Subspace.span([(0, 1, 0), (0, 0, 1)])
    assert (xy & yz) == Subspace.span([(0, 2, 0)])
    assert (xy + yz) == Subspace.full(3)
    assert (1, 1, 0) in xy and (1, 1, 1) not in xy
    assert xy.coordinates((3, 4, 0)) == (3, 4)
    assert Subspace.zero(3) <= xy


def test_subspace_over_root_three():
    space = Subspace.span([(SQRT3, 1), (3, SQRT3)])
    assert space.dim == 1
    assert (1, SQRT3 * Fraction(1, 3)) in space


@pytest.mark.parametrize(
    "gram, inertia",
    [
        ([[2, 0, 0], [0, -1, 0], [0, 0, 0]], Inertia(1, 1, 1)),
        ([[0, 1], [1, 0]], Inertia(1, 1, 0)),
        ([[1, 2], [2, 1]], Inertia(1, 1, 0)),
        ([[2, 1], [1, 2]], Inertia(2, 0, 0)),
    ],
    ids=["diagonal", "hyperbolic", "indefinite", "definite"],
)
def test_inertia(gram, inertia):
    assert inertia_of(Matrix(gram)) == inertia


def test_inertia_over_root_three():
    gram = Matrix([[1, SQRT3], [SQRT3, 2]])
    assert inertia_of(gram) == Inertia(1, 1, 0)
    assert inertia_of(Matrix([[RealScalar(2, 1), 0], [0, RealScalar(-2, 1)]])) == Inertia(1, 1, 0)


def test_congruence_diagonalize_and_restriction():
    gram = Matrix([[0, 1, 0], [1, 0, 0], [0, 0, 3]])
    assert len(congruence_diagonalize(gram)) == 3
    restricted = gram_restriction(gram, [(1, 1, 0), (0, 0, 1)])
    assert restricted == Matrix([[2, 0], [0, 3]])


def random_unimodular(rng: random.Random, n: int) -> Matrix:
    rows = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(3 * n):
        i, j = rng.sample(range(n), 2)
        factor = rng.choice([-2, -1, 1, 2])
        rows[i] = [a + factor * b for a, b in zip(rows[i], rows[j])]

    if rng.random() < 0.5:
        rows[0] = [-a for a in rows[0]]

    return Matrix(rows)


def random_gram(rng: random.Random, n: int, root_three: bool) -> Matrix:
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            entry = RealScalar(rng.randint(-3, 3), rng.randint(-2, 2)) if root_three else rng.randint(-3, 3)
            rows[i][j] = rows[j][i] = entry

    if rng.random() < 0.3:
        rows[-1] = [0] * n
        for row in rows:
            row[-1] = 0

    return Matrix(rows)


@pytest.mark.parametrize("root_three", [False, True], ids=["rational", "root-three"])
@pytest.mark.parametrize("seed", range(12))
def test_inertia_is_a_congruence_invariant(seed, root_three):
    rng = random.Random(200 + seed)
    gram = random_gram(rng, 4, root_three)
    p = random_unimodular(rng, 4)
    assert abs(determinant(p)) == 1

    inertia = inertia_of(gram)
    assert inertia.dim == 4
    assert inertia_of(p @ gram @ p.T) == inertia
    assert inertia_of(-gram) == inertia.negated()


@pytest.mark.parametrize("root_three", [False, True], ids=["rational", "root-three"])
@pytest.mark.parametrize("seed", range(10))
def test_dimension_of_sum_and_intersection(seed, root_three):
    rng = random.Random(300 + seed)

    def vectors(count):
        if root_three:
            return [[RealScalar(rng.randint(-2, 2), rng.randint(-1, 1)) for _ in range(6)] for _ in range(count)]

        return random_int_matrix(rng, count, 6, bound=2)

    shared = vectors(rng.randint(0, 2))
    first = Subspace.span(shared + vectors(rng.randint(1, 3)), 6)
    second = Subspace.span(shared + vectors(rng.randint(1, 3)), 6)

    total, common = first + second, first & second
    assert total.dim + common.dim == first.dim + second.dim
    assert common <= first and common <= second
    assert first <= total and second <= total
    assert all(v in first and v in second for v in common.basis)


def test_rref_over_root_three():
    rows, pivots = rref([[SQRT3, 3, 0], [1, SQRT3, 1]], 3)
    assert pivots == [0, 2]
    assert rows[0] == [1, SQRT3, 0]
    assert rows[1] == [0, 0, 1]


def test_rref_drops_dependent_rows():
    rows, pivots = rref([[2, 4, 6], [1, 2, 3], [0, 0, 0]], 3)
    assert rows == [[1, 2, 3]]
    assert pivots == [0]


def test_kernel_of_sparse_rows_switching_to_root_three(monkeypatch):
    monkeypatch.setattr(subspace_module, "CHUNK_ROWS", 1)
    rows = [{0: 1, 1: -1}, {}, [0, 0, 0, 0], {2: SQRT3, 3: -3}]
    space = kernel_of_rows(iter(rows), 4)
    assert space.dim == 2
    assert (1, 1, 0, 0) in space
    assert (0, 0, SQRT3, 1) in space
    assert (0, 0, 1, 1) not in space


def test_kernel_stops_once_every_unknown_is_pinned(monkeypatch):
    monkeypatch.setattr(subspace_module, "CHUNK_ROWS", 2)

    def rows():
        yield from ([1, 0], [0, 1])
        raise AssertionError("rows read past a full-rank chunk")

    assert kernel_of_rows(rows(), 2).is_zero()


def test_kernel_rejects_entries_beyond_the_width():
    with pytest.raises(DimensionMismatch):
        kernel_of_rows([{3: 1}], 2)


def test_inverse_over_root_three():
    m = Matrix([[SQRT3, 1], [1, SQRT3]])
    assert m @ m.inverse() == Matrix.identity(2)
    assert Matrix.zeros(0, 0).inverse() == Matrix.zeros(0, 0)


def test_smith_normal_form_has_nonnegative_diagonal():
    smith, u, v = smith_normal_form([[-4, 0], [0, 6]])
    assert diagonal_of(smith) == [2, 12]
    assert u @ Matrix([[-4, 0], [0, 6]]) @ v == smith


def test_integer_forms_reject_fractions():
    with pytest.raises(PreconditionError):
        hermite_normal_form([[Fraction(1, 2), 1]], 2)
    with pytest.raises(DimensionMismatch):
        determinant(Matrix([[1, 2, 3]]))


@pytest.mark.parametrize(
    "value, domain, expected",
    [
        (Fraction(3, 4), QQ, Fraction(3, 4)),
        (RealScalar(Fraction(1, 2), 2), QQ_SQRT3, RealScalar(Fraction(1, 2), 2)),
        (RealScalar(5, 0), QQ_SQRT3, Fraction(5)),
        (0, QQ_SQRT3, Fraction(0)),
    ],
    ids=["rational", "root-three", "rational-part", "zero"],
)
def test_domain_bridge(value, domain, expected):
    assert from_domain(to_domain(value, domain), domain) == expected


def test_irrational_value_is_not_rational():
    with pytest.raises(FieldError):
        to_domain(SQRT3, QQ)
