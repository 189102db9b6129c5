"""Field arithmetic of exact Gaussian rationals."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from biracah.errors import ZeroDenominator
from biracah.scalars import ONE, ZERO, I, Scalar, rational

rationals = st.fractions(
    min_value=Fraction(-50), max_value=Fraction(50), max_denominator=12
)
scalars = st.builds(Scalar, rationals, rationals)


def test_string_parsing():
    assert Scalar("3/4") == Scalar(3) / Scalar(4)
    assert Scalar("-7/2").re == rational("-7/2")
    assert str(Scalar("1/2") + I * rational("1/3")) == "1/2+1/3*i"


def test_product_oracle():
    # (1/2 + i/3)(3 + 6i) = 3/2 + 3i + i - 2 = -1/2 + 4i
    a = Scalar("1/2", "1/3")
    b = Scalar(3, 6)
    assert a * b == Scalar("-1/2", 4)


def test_division_and_inverse():
    a = Scalar(2, 5)
    assert a / a == ONE
    with pytest.raises(ZeroDenominator):
        ONE / ZERO


def test_conjugate_norm():
    a = Scalar(3, -4)
    n = a * a.conjugate()
    assert n == Scalar(25)
    assert n.is_rational


@given(scalars, scalars, scalars)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a


@given(scalars)
def test_additive_and_multiplicative_inverse(a):
    assert a + (-a) == ZERO
    if not a.is_zero:
        assert a * (ONE / a) == ONE


@given(scalars, st.integers(min_value=0, max_value=6))
def test_power_matches_repeated_product(a, n):
    acc = ONE
    for _ in range(n):
        acc = acc * a
    assert a**n == acc
