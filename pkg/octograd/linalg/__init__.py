from octograd.linalg.matrix import Matrix, Vector, rref
from octograd.linalg.subspace import Subspace, kernel, kernel_of_rows
from octograd.linalg.integer import determinant, hermite_normal_form, smith_normal_form
from octograd.linalg.forms import Inertia, bilinear, congruence_diagonalize, gram_restriction, inertia_of
