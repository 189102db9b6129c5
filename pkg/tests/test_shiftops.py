"""Univariate shift/reflection operator calculus and the realizations."""

import pytest

from biracah.errors import NotPolynomialPreserving, NotScalar, NotSymmetric
from biracah.polynomials import ParamPoly
from biracah.scalars import Scalar
from biracah.shiftops import (
    ShiftReflectionOperator,
    anticommutator,
    apply_to_polynomial,
    bi_structure_polys,
    build_quadratic_combos,
    build_standard_bi,
    build_standard_racah,
    casimir_scalar,
    commutator,
    fit_structure_constants,
    racah_lambda,
    quadratic_embedding_operator_residuals,
    to_lambda_basis,
)

NUM_BI = {
    "rho1": ParamPoly.const(1),
    "rho2": ParamPoly.const(Scalar("3/2")),
    "r1": ParamPoly.const(Scalar("1/2")),
    "r2": ParamPoly.const(2),
}


def test_composition_rule():
    var = "v"
    t = ShiftReflectionOperator.shift(var, 1)
    r = ShiftReflectionOperator.reflection(var)
    vpoly = ShiftReflectionOperator.multiplication(var, ParamPoly.var(var))
    # R v R = -v
    assert r * vpoly * r == -vpoly
    # T v T^-1 = v + 1
    tinv = ShiftReflectionOperator.shift(var, -1)
    assert t * vpoly * tinv == vpoly + 1
    # R T R = T^-1
    assert r * t * r == tinv


def test_racah_fit_constants():
    fitted = fit_structure_constants("racah")
    assert fitted["a1"] == ParamPoly.const(-2)
    assert fitted["a2"] == ParamPoly.const(-2)
    # the remaining constants are symmetric polynomials of the parameters
    for name in ("c1", "c2", "d", "e1", "e2"):
        assert not fitted[name].is_zero


def test_bi_fit_recovers_printed_constants():
    fitted = fit_structure_constants("bi")
    printed = bi_structure_polys()
    for name in ("wX", "wY", "wZ"):
        assert fitted[name] == printed[name]


def test_bi_casimir_scalar_values():
    printed = bi_structure_polys()
    assert casimir_scalar("bi") == printed["u"]
    numeric = casimir_scalar("bi", build_standard_bi(NUM_BI))
    assert numeric == ParamPoly.const(Scalar("59/4"))


def test_racah_casimir_is_scalar():
    value = casimir_scalar("racah")
    assert value.degree_in("x") == 0


def test_operator_embedding_residuals_numeric():
    res = quadratic_embedding_operator_residuals(params=NUM_BI)
    bad = {k: str(v) for k, v in res.items() if not v.is_zero}
    assert not bad, bad


def test_apply_to_polynomial():
    ops = build_standard_racah()
    lam = racah_lambda()
    image = apply_to_polynomial(ops["kappa1"], ParamPoly.const(1))
    assert image.is_zero  # kappa1 annihilates constants
    image = apply_to_polynomial(ops["kappa1"], lam)
    coeffs = to_lambda_basis(image)
    assert len(coeffs) == 2  # degree is preserved


def test_apply_rejects_non_preserving():
    var_op = ShiftReflectionOperator(
        "x", {(0, 0): ParamPoly.var("x")}
    )
    bad = ShiftReflectionOperator(
        "x",
        {(0, 0): __import__("biracah.ratfunc", fromlist=["RatFunc"]).RatFunc(
            "x", 1, [(ParamPoly.var("x"), 1)]
        )},
    )
    with pytest.raises(NotPolynomialPreserving):
        apply_to_polynomial(bad, ParamPoly.const(1))
    assert apply_to_polynomial(var_op, ParamPoly.const(1)) == ParamPoly.var("x")


def test_to_lambda_basis_rejects_asymmetric():
    with pytest.raises(NotSymmetric):
        to_lambda_basis(ParamPoly.var("x"))


def test_scalar_part_raises_on_operators():
    t = ShiftReflectionOperator.shift("v", 1)
    with pytest.raises(NotScalar):
        t.scalar_part()


def test_quadratic_combos_structure():
    combos = build_quadratic_combos(build_standard_bi(NUM_BI))
    a, b = combos["A"], combos["B"]
    assert commutator(a, b) == combos["Delta"] * 2
    assert commutator(combos["I"], a).is_zero
