"""
Hurwitz Algebras

Constructors for the unital composition algebras (iterated Cayley-Dickson doubling and the good basis of the split
Cayley algebra), the standard involution, para-Hurwitz products and the symmetric composition predicate.
"""


import logging
from fractions import Fraction
from typing import Any

from octograd.composition.algebra import DoublingChain, QuadForm, SCAlgebra, add, basis_vector, scale, zero_vector
from octograd.errors import PreconditionError
from octograd.linalg import Matrix
from octograd.results import CheckFailed, CheckPassed, CheckResult
from octograd.scalars import coerce

logger = logging.getLogger(__name__)


def ground_field() -> SCAlgebra:
    """F itself: n(x) = x², so the polar form has Gram [2]."""
    return SCAlgebra(
        "F", [[[1]]], unit=[1], norm=QuadForm(Matrix([[Fraction(2)]])), chain=DoublingChain(1)
    )


def cayley_dickson(algebra: SCAlgebra, alpha: Any, name: str | None = None) -> SCAlgebra:
    """CD(A, α) on A ⊕ Au with (a+bu)(c+du) = (ac + α d̄b) + (da + bc̄)u and n(a+bu) = n(a) − α n(b)."""
    alpha = coerce(alpha)
    if not alpha:
        raise PreconditionError("Cayley-Dickson parameter must be nonzero")

    if algebra.dim not in (1, 2, 4):
        raise PreconditionError(f"Cayley-Dickson doubling needs dim A in (1, 2, 4), got {algebra.dim}")

    norm = algebra.require_norm()
    algebra.require_unit()
    if not norm.is_nondegenerate:
        raise PreconditionError(f"{algebra.name} has a degenerate norm")

    if algebra.composition_witness() is not None or not algebra.is_associative:
        raise PreconditionError(f"{algebra.name} is not an associative Hurwitz algebra")

    d = algebra.dim

    def split(vector):
        return vector[:d], vector[d:]

    def product(x, y):
        a, b = split(x)
        c, dd = split(y)
        first = add(algebra.multiply(a, c), scale(alpha, algebra.multiply(algebra.conjugate(dd), b)))
        second = add(algebra.multiply(dd, a), algebra.multiply(b, algebra.conjugate(c)))
        return (*first, *second)

    basis = [basis_vector(2 * d, i) for i in range(2 * d)]
    mult = [[product(x, y) for y in basis] for x in basis]
    gram = norm.gram
    doubled = Matrix(
        [
            *((*gram.rows[i], *zero_vector(d)) for i in range(d)),
            *((*zero_vector(d), *(-alpha * x for x in gram.rows[i])) for i in range(d)),
        ]
    )
    unit = algebra.require_unit()
    chain = algebra.chain.value_or(None) or DoublingChain(d)
    result = SCAlgebra(
        name or f"CD({algebra.name}, {alpha})",
        mult,
        unit=(*unit, *zero_vector(d)),
        norm=QuadForm(doubled),
        chain=chain.extended(alpha),
    )
    logger.debug("built %s with norm inertia %s", result.name, result.norm_inertia())
    return result


def hurwitz_algebra(*alphas: Any, name: str | None = None) -> SCAlgebra:
    """CD(F, α₁, …, α_k)."""
    algebra = ground_field()
    for alpha in alphas:
        algebra = cayley_dickson(algebra, alpha)

    if name:
        algebra.name = name

    return algebra


def split_cayley_good_basis() -> SCAlgebra:
    """The split Cayley algebra on {e₁, e₂, u₁, u₂, u₃, v₁, v₂, v₃}."""
    e1, e2 = 0, 1
    u = (2, 3, 4)
    v = (5, 6, 7)
    table: dict[tuple[int, int], tuple[int, int]] = {
        (e1, e1): (e1, 1),
        (e2, e2): (e2, 1),
    }
    for j in range(3):
        table[e1, u[j]] = table[u[j], e2] = (u[j], 1)
        table[e2, v[j]] = table[v[j], e1] = (v[j], 1)
        table[u[j], v[j]] = (e1, -1)
        table[v[j], u[j]] = (e2, -1)
        for k in range(3):
            if k != j:
                l = 3 - j - k
                sign = levi_civita(j, k, l)
                table[u[j], u[k]] = (v[l], sign)
                table[v[j], v[k]] = (u[l], sign)

    mult = [[[0] * 8 for _ in range(8)] for _ in range(8)]
    for (i, j), (k, c) in table.items():
        mult[i][j][k] = c

    gram = [[0] * 8 for _ in range(8)]
    gram[e1][e2] = gram[e2][e1] = 1
    for j in range(3):
        gram[u[j]][v[j]] = gram[v[j]][u[j]] = 1

    return SCAlgebra(
        "split-cayley",
        mult,
        unit=[1, 1, 0, 0, 0, 0, 0, 0],
        norm=QuadForm(Matrix([[coerce(x) for x in row] for row in gram])),
    )


def levi_civita(j: int, k: int, l: int) -> int:
    if len({j, k, l}) < 3:
        return 0

    inversions = (j > k) + (j > l) + (k > l)
    return -1 if inversions % 2 else 1


def standard_involution(algebra: SCAlgebra) -> Matrix:
    """Matrix of x ↦ x̄ = n(x,1)1 − x."""
    return algebra.involution_matrix()


def para_hurwitz(algebra: SCAlgebra) -> SCAlgebra:
    """Same quadratic space with product x•y = x̄ȳ; the old unit becomes a para-unit."""
    unit = algebra.require_unit()
    norm = algebra.require_norm()
    if algebra.composition_witness() is not None:
        raise PreconditionError(f"{algebra.name} is not a Hurwitz algebra")

    conjugates = [algebra.conjugate(e) for e in algebra.basis()]
    mult = [[algebra.multiply(x, y) for y in conjugates] for x in conjugates]
    return SCAlgebra(f"para-{algebra.name}", mult, norm=norm, para_unit=unit)


def is_symmetric_composition(algebra: SCAlgebra) -> CheckResult[bool]:
    """Passes iff n(x⋆y) = n(x)n(y) and n(x⋆y, z) = n(x, y⋆z) on basis tuples; a failure carries the witness."""
    name = f"symmetric composition {algebra.name}"
    if not algebra.require_norm().is_nondegenerate:
        raise PreconditionError(f"{algebra.name} has a degenerate norm")

    match algebra.composition_witness():
        case None:
            pass
        case witness:
            return CheckFailed(name, witness, "composition law fails on basis 4-tuple")

    match algebra.associative_form_witness():
        case None:
            return CheckPassed(name, True)
        case witness:
            return CheckFailed(name, witness, "polar form is not associative on basis triple")
