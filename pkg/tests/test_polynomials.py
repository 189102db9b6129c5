"""Sparse multivariate polynomials with parameters."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from biracah.errors import NotDivisible
from biracah.polynomials import (
    ParamPoly,
    binomial,
    falling_factorial,
    poly_gcd,
)
from biracah.scalars import Scalar

x = ParamPoly.var("x")
z = ParamPoly.var("z")
a = ParamPoly.var("a")


def _random_poly(draw_coeffs, vars_):
    out = ParamPoly.const(0)
    for coeff, exps in draw_coeffs:
        term = ParamPoly.const(coeff)
        for v, e in zip(vars_, exps):
            term = term * v**e
        out = out + term
    return out


coeffs = st.lists(
    st.tuples(
        st.integers(min_value=-5, max_value=5),
        st.tuples(
            st.integers(min_value=0, max_value=3),
            st.integers(min_value=0, max_value=2),
        ),
    ),
    min_size=0,
    max_size=4,
)


def test_arithmetic_and_substitution():
    p = (x + 1) * (x - 1)
    assert p == x * x - 1
    assert p.subs({"x": z + 1}) == z * z + 2 * z
    assert p.eval_scalar({"x": Scalar(3)}) == Scalar(8)


def test_exact_division():
    p = (x + a) * (x * x + 2)
    assert p.exact_div(x + a) == x * x + 2
    with pytest.raises(NotDivisible):
        (x + 1).exact_div(x + a)


def test_gcd_oracle():
    # gcd(z^2 - 1, z^2 - 2z + 1) = z - 1
    g = poly_gcd(z * z - 1, z * z - 2 * z + 1)
    assert g.monic() == z - 1


def test_gcd_with_parameters():
    p = (x + a) * (x + 1)
    q = (x + a) * (x + 2)
    g = poly_gcd(p, q)
    assert g.monic() == x + a


def test_univariate_roundtrip():
    p = x * x * a + x * 3 + 1
    coeff_map = p.as_univariate("x")
    assert coeff_map[2] == a
    assert ParamPoly.from_univariate("x", coeff_map) == p


def test_falling_factorial_and_binomial():
    assert falling_factorial(5, 2) == 20
    assert falling_factorial(-2, 3) == -24  # (-2)(-3)(-4)
    assert binomial(5, 2) == 10
    assert binomial(3, 5) == 0


@given(coeffs, coeffs)
@settings(max_examples=60)
def test_ring_commutativity(c1, c2):
    p = _random_poly(c1, (x, a))
    q = _random_poly(c2, (x, a))
    assert p * q == q * p
    assert p + q == q + p


@given(coeffs, coeffs)
@settings(max_examples=60)
def test_multiply_then_divide(c1, c2):
    p = _random_poly(c1, (x, a))
    q = _random_poly(c2, (x, a))
    if q.is_zero:
        return
    assert (p * q).exact_div(q) == p


@given(coeffs, coeffs, coeffs)
@settings(max_examples=40)
def test_gcd_divides_both(c1, c2, c3):
    common = _random_poly(c3, (x, a))
    p = _random_poly(c1, (x, a)) * common
    q = _random_poly(c2, (x, a)) * common
    if p.is_zero or q.is_zero:
        return
    g = poly_gcd(p, q)
    assert p.exact_div(g) is not None
    assert q.exact_div(g) is not None
    if not common.is_const:
        # the common factor must divide the gcd
        g.exact_div(poly_gcd(g, common))
