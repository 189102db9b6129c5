"""Exact Gaussian rational numbers.

The base coefficient field of the whole workbench: complex numbers with
arbitrary-precision rational real and imaginary parts.  Arithmetic is exact;
there is no floating point anywhere in the system.
"""

from __future__ import annotations

try:
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover - gmpy2 is normally available
    from fractions import Fraction as _Q

from .errors import ZeroDenominator

RationalLike = object  # int, Fraction, mpq or "p/q" string


def rational(value) -> _Q:
    """Coerce ints, rationals and "p/q" strings to the rational backend."""
    if isinstance(value, str):
        if "/" in value:
            p, q = value.split("/", 1)
            return _Q(int(p), int(q))
        return _Q(int(value))
    return _Q(value)


class Scalar:
    """A Gaussian rational re + im*i, both parts in lowest terms."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", rational(re))
        object.__setattr__(self, "im", rational(im))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    # -- constructors -------------------------------------------------
    @staticmethod
    def coerce(value) -> "Scalar":
        if isinstance(value, Scalar):
            return value
        return Scalar(value)

    # -- predicates ---------------------------------------------------
    @property
    def is_zero(self) -> bool:
        return not self.re and not self.im

    @property
    def is_rational(self) -> bool:
        return not self.im

    def __bool__(self):
        return not self.is_zero

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other):
        other = Scalar.coerce(other)
        return Scalar(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = Scalar.coerce(other)
        return Scalar(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return Scalar.coerce(other) - self

    def __neg__(self):
        return Scalar(-self.re, -self.im)

    def __mul__(self, other):
        other = Scalar.coerce(other)
        return Scalar(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = Scalar.coerce(other)
        n = other.re * other.re + other.im * other.im
        if not n:
            raise ZeroDenominator("division by zero Scalar")
        return Scalar(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def __rtruediv__(self, other):
        return Scalar.coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return Scalar(1) / self ** (-n)
        out = Scalar(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self) -> "Scalar":
        return Scalar(self.re, -self.im)

    # -- comparison ---------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, str)) or type(other).__name__ in ("mpq", "Fraction"):
            other = Scalar(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    # -- display ------------------------------------------------------
    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}*i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}*i"

    def __repr__(self):
        return f"Scalar({self})"


ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar(0, 1)


def scalar_mul(a: Scalar, b: Scalar) -> Scalar:
    """Exact product of two Gaussian rationals."""
    return Scalar.coerce(a) * Scalar.coerce(b)
