"""
Integer Normal Forms

Hermite normal form (canonical lattice bases, used for subgroup generators) and Smith normal form with unimodular
transforms (used to present abelian groups in invariant-factor form). Both are sympy's over ZZ; entries come back as
Python ints.
"""


from typing import Any, Sequence

from sympy.polys.matrices.normalforms import hermite_normal_form as column_hermite_normal_form
from sympy.polys.matrices.normalforms import smith_normal_decomp

from octograd.errors import DimensionMismatch
from octograd.linalg.domains import integer_matrix
from octograd.linalg.matrix import Matrix


def _int_rows(matrix) -> list[list[int]]:
    return [[int(x) for x in row] for row in matrix.to_list()]


def _pivot(row: Sequence[int]) -> int:
    return next(j for j, x in enumerate(row) if x)


def hermite_normal_form(rows: Sequence[Sequence[Any]], ncols: int) -> list[list[int]]:
    """Row-style HNF of the lattice spanned by the rows: echelon form, positive pivots, entries above each pivot
    reduced into [0, pivot). Zero rows are dropped, so the result is the unique canonical basis of the lattice."""
    rows = [list(row) for row in rows if any(row)]
    if not rows:
        return []

    # sympy reduces the generators as columns from the last coordinate up, so the coordinates go in reversed
    columns = integer_matrix([row[::-1] for row in rows], ncols).transpose()
    lattice = [row[::-1] for row in _int_rows(column_hermite_normal_form(columns).transpose())]
    return sorted(lattice, key=_pivot)


def smith_normal_form(matrix: Matrix | Sequence[Sequence[Any]]) -> tuple[Matrix, Matrix, Matrix]:
    """Returns (S, U, V) with U·A·V = S, S diagonal with each diagonal entry dividing the next, U and V unimodular."""
    rows = matrix.rows if isinstance(matrix, Matrix) else [list(row) for row in matrix]
    ncols = matrix.ncols if isinstance(matrix, Matrix) else (len(rows[0]) if rows else 0)
    nrows = len(rows)
    if not nrows or not ncols:
        return Matrix(rows, ncols), Matrix.identity(nrows), Matrix.identity(ncols)

    smith, u, v = (_int_rows(m) for m in smith_normal_decomp(integer_matrix(rows, ncols)))
    for i in range(min(nrows, ncols)):
        if smith[i][i] < 0:
            smith[i][i] = -smith[i][i]
            u[i] = [-x for x in u[i]]

    return Matrix(smith, ncols), Matrix(u, nrows), Matrix(v, ncols)


def determinant(matrix: Matrix) -> int:
    """Determinant of a square integer matrix, computed over ZZ by sympy."""
    if not matrix.is_square:
        raise DimensionMismatch(f"Determinant of a {matrix.nrows}x{matrix.ncols} matrix")

    if not matrix.nrows:
        return 1

    return int(integer_matrix(matrix.rows, matrix.ncols).det())
