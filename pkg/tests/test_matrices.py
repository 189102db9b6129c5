"""Exact matrices, triangular eigendecomposition and linear solve."""

import pytest

from biracah.errors import DegenerateSpectrum, Inconsistent, NotTriangular, Singular
from biracah.matrices import (
    ExactMatrix,
    back_substitute_unit_upper,
    mat_eig_triangular,
    mat_solve_linear,
)
from biracah.scalars import Scalar


def _m(rows):
    return ExactMatrix([[Scalar(e) if not isinstance(e, Scalar) else e for e in r] for r in rows])


def test_eig_2x2_oracle():
    m = _m([[1, 1], [0, 2]])
    diag, p = mat_eig_triangular(m)
    assert diag == [Scalar(1), Scalar(2)]
    assert p[0, 1] == Scalar(1)  # eigenvector (1, 1) for eigenvalue 2
    # m p = p diag
    d = ExactMatrix([[diag[0], Scalar(0)], [Scalar(0), diag[1]]])
    assert m @ p == p @ d


def test_eig_3x3_conjugation():
    m = _m([[0, 2, 3], [0, 5, 7], [0, 0, 11]])
    diag, p = mat_eig_triangular(m)
    d = ExactMatrix(
        [[diag[i] if i == j else Scalar(0) for j in range(3)] for i in range(3)]
    )
    assert m @ p == p @ d
    for j in range(3):
        assert p[j, j] == Scalar(1)


def test_eig_rejects_degenerate_and_non_triangular():
    with pytest.raises(DegenerateSpectrum):
        mat_eig_triangular(_m([[1, 1], [0, 1]]))
    with pytest.raises(NotTriangular):
        mat_eig_triangular(_m([[1, 0], [1, 2]]))


def test_back_substitution():
    p = _m([[1, 2], [0, 1]])
    y = back_substitute_unit_upper(p, [Scalar(5), Scalar(3)])
    assert y == [Scalar(-1), Scalar(3)]


def test_solve_linear_oracle():
    a = _m([[2, 1], [1, 3]])
    x = mat_solve_linear(a, [Scalar(5), Scalar(10)])
    assert x == [Scalar(1), Scalar(3)]


def test_solve_overdetermined():
    a = _m([[1, 0], [0, 1], [1, 1]])
    x = mat_solve_linear(a, [Scalar(2), Scalar(3), Scalar(5)])
    assert x == [Scalar(2), Scalar(3)]
    with pytest.raises(Inconsistent):
        mat_solve_linear(a, [Scalar(2), Scalar(3), Scalar(6)])


def test_solve_singular():
    a = _m([[1, 2], [2, 4]])
    with pytest.raises(Singular):
        mat_solve_linear(a, [Scalar(1), Scalar(2)])
