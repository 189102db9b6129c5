"""Reduced rational functions in one distinguished variable.

Two flavours live here:

* ``RatFunc`` -- coefficients of shift/reflection operators.  The denominator
  is kept as a multiset of monic irreducible factors (in practice linear in
  the distinguished variable), so reduction is repeated trial division
  instead of a full gcd.  Denominators only ever arise as products of shifts
  and reflections of the printed coefficient denominators, which keeps this
  exact and canonical.

* ``PFrac`` -- a plain fraction of parameter polynomials, reduced with the
  multivariate gcd.  Used as the field of scalars in linear solves.
"""

from __future__ import annotations

from .errors import NotDivisible, ZeroDenominator
from .polynomials import ParamPoly, poly_gcd
from .scalars import Scalar


class RatFunc:
    """num / prod(factor^mult) in the distinguished variable `var`."""

    __slots__ = ("var", "num", "factors", "_hash")

    def __init__(self, var: str, num, factors=()):
        num = ParamPoly.coerce(num)
        clean = []
        for fac, mult in factors:
            fac = ParamPoly.coerce(fac)
            if fac.is_zero:
                raise ZeroDenominator("zero denominator factor")
            if fac.is_const:
                num = num * (Scalar(1) / fac.const_value()) ** mult
                continue
            lead = fac.leading_scalar()
            if lead != Scalar(1):
                fac = fac.monic()
                num = num * (Scalar(1) / lead) ** mult
            clean.append([fac, mult])
        # merge equal factors
        merged = {}
        for fac, mult in clean:
            merged[fac] = merged.get(fac, 0) + mult
        # reduce: trial-divide the numerator by each factor
        reduced = []
        for fac, mult in merged.items():
            while mult > 0 and not num.is_zero:
                try:
                    num = num.exact_div(fac)
                    mult -= 1
                except NotDivisible:
                    break
            if mult > 0:
                reduced.append((fac, mult))
        if num.is_zero:
            reduced = []
        reduced.sort(key=lambda fm: (fm[0].symbols, sorted(fm[0].terms)))
        object.__setattr__(self, "var", var)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "factors", tuple(reduced))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    # -- constructors -------------------------------------------------
    @staticmethod
    def poly(var: str, p) -> "RatFunc":
        return RatFunc(var, p)

    @staticmethod
    def const(var: str, c) -> "RatFunc":
        return RatFunc(var, ParamPoly.const(c))

    def coerce(self, other) -> "RatFunc":
        if isinstance(other, RatFunc):
            return other
        return RatFunc(self.var, ParamPoly.coerce(other))

    # -- structure ----------------------------------------------------
    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __bool__(self):
        return not self.is_zero

    @property
    def is_polynomial(self) -> bool:
        return not self.factors

    def den(self) -> ParamPoly:
        out = ParamPoly.const(1)
        for fac, mult in self.factors:
            out = out * fac ** mult
        return out

    def as_polynomial(self) -> ParamPoly:
        if self.factors:
            raise NotDivisible(f"not a polynomial: {self}")
        return self.num

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other):
        other = self.coerce(other)
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        mine = dict(self.factors)
        theirs = dict(other.factors)
        lcm = dict(mine)
        for fac, mult in theirs.items():
            lcm[fac] = max(lcm.get(fac, 0), mult)
        a = self.num
        for fac, mult in lcm.items():
            extra = mult - mine.get(fac, 0)
            if extra:
                a = a * fac ** extra
        b = other.num
        for fac, mult in lcm.items():
            extra = mult - theirs.get(fac, 0)
            if extra:
                b = b * fac ** extra
        return RatFunc(self.var, a + b, tuple(lcm.items()))

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self.coerce(other))

    def __rsub__(self, other):
        return self.coerce(other) - self

    def __neg__(self):
        return RatFunc(self.var, -self.num, self.factors)

    def __mul__(self, other):
        if isinstance(other, (int, Scalar)):
            return RatFunc(self.var, self.num * other, self.factors)
        other = self.coerce(other)
        merged = dict(self.factors)
        for fac, mult in other.factors:
            merged[fac] = merged.get(fac, 0) + mult
        return RatFunc(self.var, self.num * other.num, tuple(merged.items()))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self.coerce(other)
        if other.is_zero:
            raise ZeroDenominator("division by zero rational function")
        inv = RatFunc(self.var, other.den(), ((other.num, 1),))
        return self * inv

    def __pow__(self, n: int):
        out = RatFunc.const(self.var, 1)
        base = self
        for _ in range(n):
            out = out * base
        return out

    # -- substitution -------------------------------------------------
    def shift_reflect(self, sign: int, offset: int) -> "RatFunc":
        """Substitute var -> sign*(var + offset), sign in {1, -1}."""
        xv = ParamPoly.var(self.var)
        image = (xv + ParamPoly.const(offset)) * sign
        num = self.num.subs({self.var: image})
        factors = tuple(
            (fac.subs({self.var: image}), mult) for fac, mult in self.factors
        )
        return RatFunc(self.var, num, factors)

    def subs_params(self, mapping) -> "RatFunc":
        mapping = {k: v for k, v in mapping.items() if k != self.var}
        return RatFunc(
            self.var,
            self.num.subs(mapping),
            tuple((fac.subs(mapping), mult) for fac, mult in self.factors),
        )

    def eval_at(self, assignment) -> Scalar:
        """Full evaluation at rationals (variable and parameters)."""
        num = self.num.eval_scalar(assignment)
        den = Scalar(1)
        for fac, mult in self.factors:
            den = den * fac.eval_scalar(assignment) ** mult
        if den.is_zero:
            raise ZeroDenominator(f"pole at {assignment}")
        return num / den

    # -- comparison ---------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Scalar, ParamPoly)):
            other = self.coerce(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        if self.factors == other.factors:
            return self.num == other.num
        return (self.num * other.den() - other.num * self.den()).is_zero

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.var, self.num, self.factors)))
        return self._hash

    def __str__(self):
        if self.is_polynomial:
            return str(self.num)
        dens = "*".join(
            f"({fac})" + (f"^{mult}" if mult > 1 else "")
            for fac, mult in self.factors
        )
        return f"({self.num})/({dens})"

    def __repr__(self):
        return f"RatFunc({self})"


def ratfunc_normalize(var: str, num, den) -> RatFunc:
    """Canonical reduced representative of num/den via a full gcd.

    ``ratfunc_normalize(a, b) == ratfunc_normalize(c, d)`` iff a*d == b*c.
    """
    num, den = ParamPoly.coerce(num), ParamPoly.coerce(den)
    if den.is_zero:
        raise ZeroDenominator("zero denominator")
    if num.is_zero:
        return RatFunc(var, num)
    g = poly_gcd(num, den)
    if not g.is_const:
        num = num.exact_div(g)
        den = den.exact_div(g)
    lead = den.leading_scalar()
    if lead != Scalar(1):
        num = num * (Scalar(1) / lead)
        den = den.monic()
    if den.is_const:
        return RatFunc(var, num)
    return RatFunc(var, num, ((den, 1),))


class PFrac:
    """Fraction of parameter polynomials, gcd-reduced; a field for solvers."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1, reduce=True):
        num = ParamPoly.coerce(num)
        den = ParamPoly.coerce(den)
        if den.is_zero:
            raise ZeroDenominator("zero denominator")
        if num.is_zero:
            den = ParamPoly.const(1)
        elif reduce:
            g = poly_gcd(num, den)
            if not g.is_const:
                num = num.exact_div(g)
                den = den.exact_div(g)
            lead = den.leading_scalar()
            if lead != Scalar(1):
                num = num * (Scalar(1) / lead)
                den = den.monic()
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("PFrac is immutable")

    @staticmethod
    def coerce(value) -> "PFrac":
        if isinstance(value, PFrac):
            return value
        return PFrac(value)

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __bool__(self):
        return not self.is_zero

    def is_polynomial(self) -> bool:
        return self.den.is_const

    def as_polynomial(self) -> ParamPoly:
        if not self.den.is_const:
            raise NotDivisible(f"not polynomial: {self}")
        return self.num * (Scalar(1) / self.den.const_value())

    def __add__(self, other):
        other = PFrac.coerce(other)
        return PFrac(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-PFrac.coerce(other))

    def __rsub__(self, other):
        return PFrac.coerce(other) - self

    def __neg__(self):
        return PFrac(-self.num, self.den, reduce=False)

    def __mul__(self, other):
        other = PFrac.coerce(other)
        return PFrac(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = PFrac.coerce(other)
        if other.is_zero:
            raise ZeroDenominator("division by zero")
        return PFrac(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return PFrac.coerce(other) / self

    def __eq__(self, other):
        if not isinstance(other, PFrac):
            other = PFrac.coerce(other)
        return (self.num * other.den - other.num * self.den).is_zero

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        if self.den.is_const and self.den.const_value() == Scalar(1):
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"PFrac({self})"
