"""Exact bispectral matrix pairs for both realizations."""

import random

import pytest

from biracah.bispectral import (
    bispectral_matrices,
    bispectral_suite,
    dump_matrix_csv,
    random_rational_params,
)
from biracah.errors import DegenerateSpectrum
from biracah.polynomials import ParamPoly
from biracah.scalars import Scalar

BI_PARAMS = {
    "rho1": ParamPoly.const(1),
    "rho2": ParamPoly.const(Scalar("3/2")),
    "r1": ParamPoly.const(Scalar("1/2")),
    "r2": ParamPoly.const(2),
}
RACAH_PARAMS = {
    name: ParamPoly.const(Scalar(val))
    for name, val in (
        ("alpha", "1/3"), ("beta", "1/5"), ("gamma", "1/7"), ("delta", "1/11")
    )
}


def test_bi_spectrum_oracle():
    result = bispectral_matrices("bi", 4, BI_PARAMS)
    spectrum = [s.re for s in result["spectrum"]]
    # h = rho1+rho2-r1-r2+1/2 = 1/2; eigenvalues alternate around it
    assert [str(s) for s in spectrum] == ["1/2", "-3/2", "5/2", "-7/2", "9/2", "-11/2"]


def test_racah_triangular_and_tridiagonal():
    result = bispectral_matrices("racah", 6, RACAH_PARAMS)
    tri, mult = result["triangular"], result["mult"]
    assert tri.is_upper_triangular()
    assert tri[0, 0].is_zero  # kappa1 annihilates constants
    for j in range(mult.cols):
        for i in range(mult.rows):
            if abs(i - j) > 1:
                assert mult[i, j].is_zero


def test_mult_has_nonzero_off_diagonals():
    result = bispectral_matrices("bi", 3, BI_PARAMS)
    mult = result["mult"]
    assert not mult[1, 0].is_zero  # the recurrence really couples neighbours


def test_eigendecomposition_conjugates():
    result = bispectral_matrices("bi", 3, BI_PARAMS)
    tri, p, diag = result["triangular"], result["eigenvectors"], result["spectrum"]
    n = tri.rows
    from biracah.matrices import ExactMatrix

    d = ExactMatrix(
        [[diag[i] if i == j else tri[0, 0] - tri[0, 0] for j in range(n)] for i in range(n)]
    )
    assert tri @ p == p @ d


def test_random_suite_both_families():
    rng = random.Random(5)
    for realization in ("racah", "bi"):
        done = bispectral_suite(realization, 6, rng, trials=3)
        assert len(done) == 3


def test_degenerate_spectrum_detected():
    # alpha + beta + 1 = -3 collides the eigenvalues n(n + alpha + beta + 1)
    # at n = 0 and n = 3
    bad = {
        "alpha": ParamPoly.const(-2),
        "beta": ParamPoly.const(-2),
        "gamma": ParamPoly.const(Scalar("1/7")),
        "delta": ParamPoly.const(Scalar("1/11")),
    }
    with pytest.raises(DegenerateSpectrum):
        bispectral_matrices("racah", 4, bad)


def test_csv_dump_format(tmp_path):
    result = bispectral_matrices("bi", 2, BI_PARAMS)
    path = tmp_path / "mult.csv"
    text = dump_matrix_csv(result["mult"], path, "eigenvectors")
    lines = text.strip().split("\n")
    assert lines[0] == "# rows=4 cols=3 basis=eigenvectors"
    assert len(lines) == 5
    first = lines[1].split(",")
    assert len(first) == 3
    # entries parse back as exact rationals
    for cell in first:
        Scalar(cell)
    assert path.read_text() == text
