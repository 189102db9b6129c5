"""Sparse multivariate polynomials over the Gaussian rationals.

Monomials are kept in deg-lex order (total degree first, then lexicographic
with the distinguished operator variables "x", "z" ranking before parameter
symbols).  A polynomial stores only the symbols it actually uses, so equality
is plain map equality.
"""

from __future__ import annotations

from math import comb

from .errors import NotDivisible, ZeroDenominator
from .scalars import Scalar

# Distinguished operator variables sort before parameter symbols so that the
# deg-lex leading term of a denominator is its leading term in the variable.
_DISTINGUISHED = ("x", "z")


def _symbol_key(name: str):
    return (name not in _DISTINGUISHED, name)


def _sort_symbols(names):
    return tuple(sorted(set(names), key=_symbol_key))


def _monomial_key(exps):
    return (sum(exps), exps)


class ParamPoly:
    """Sparse polynomial: map exponent-vector -> Scalar over named symbols."""

    __slots__ = ("symbols", "terms", "_hash")

    def __init__(self, symbols=(), terms=None, _canonical=False):
        if _canonical:
            object.__setattr__(self, "symbols", symbols)
            object.__setattr__(self, "terms", terms or {})
            object.__setattr__(self, "_hash", None)
            return
        symbols = tuple(symbols)
        clean = {}
        for exps, coeff in (terms or {}).items():
            coeff = Scalar.coerce(coeff)
            if coeff.is_zero:
                continue
            clean[tuple(exps)] = coeff
        # drop unused symbol columns and sort the remaining ones
        used = [i for i in range(len(symbols)) if any(e[i] for e in clean)]
        names = _sort_symbols(symbols[i] for i in used)
        index = [symbols.index(n) for n in names]
        remapped = {}
        for exps, coeff in clean.items():
            key = tuple(exps[i] for i in index)
            remapped[key] = remapped.get(key, Scalar(0)) + coeff
        remapped = {k: c for k, c in remapped.items() if not c.is_zero}
        object.__setattr__(self, "symbols", names)
        object.__setattr__(self, "terms", remapped)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("ParamPoly is immutable")

    # -- constructors -------------------------------------------------
    @staticmethod
    def const(value) -> "ParamPoly":
        coeff = Scalar.coerce(value)
        if coeff.is_zero:
            return ParamPoly((), {}, _canonical=True)
        return ParamPoly((), {(): coeff}, _canonical=True)

    @staticmethod
    def var(name: str) -> "ParamPoly":
        return ParamPoly((name,), {(1,): Scalar(1)}, _canonical=True)

    @staticmethod
    def coerce(value) -> "ParamPoly":
        if isinstance(value, ParamPoly):
            return value
        return ParamPoly.const(value)

    # -- structure ----------------------------------------------------
    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    @property
    def is_const(self) -> bool:
        return not self.symbols

    def const_value(self) -> Scalar:
        if self.symbols:
            raise ValueError(f"not a constant: {self}")
        return self.terms.get((), Scalar(0))

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def degree_in(self, name: str) -> int:
        if name not in self.symbols:
            return 0
        i = self.symbols.index(name)
        return max((e[i] for e in self.terms), default=0)

    def leading(self):
        """Deg-lex leading (exponents, coefficient) pair."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exps = max(self.terms, key=_monomial_key)
        return exps, self.terms[exps]

    def leading_scalar(self) -> Scalar:
        return self.leading()[1]

    # -- alignment ----------------------------------------------------
    def _aligned(self, other):
        if self.symbols == other.symbols:
            return self.symbols, self.terms, other.terms
        names = _sort_symbols(self.symbols + other.symbols)

        def remap(poly):
            idx = [poly.symbols.index(n) if n in poly.symbols else None for n in names]
            out = {}
            for exps, coeff in poly.terms.items():
                out[tuple(0 if i is None else exps[i] for i in idx)] = coeff
            return out

        return names, remap(self), remap(other)

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other):
        other = ParamPoly.coerce(other)
        names, a, b = self._aligned(other)
        out = dict(a)
        for exps, coeff in b.items():
            acc = out.get(exps)
            acc = coeff if acc is None else acc + coeff
            if acc.is_zero:
                out.pop(exps, None)
            else:
                out[exps] = acc
        return ParamPoly(names, out, _canonical=True)._strip()

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-ParamPoly.coerce(other))

    def __rsub__(self, other):
        return ParamPoly.coerce(other) - self

    def __neg__(self):
        return ParamPoly(
            self.symbols, {e: -c for e, c in self.terms.items()}, _canonical=True
        )

    def __mul__(self, other):
        if isinstance(other, (int, Scalar)) or type(other).__name__ in ("mpq", "Fraction"):
            coeff = Scalar.coerce(other)
            if coeff.is_zero:
                return ParamPoly((), {}, _canonical=True)
            return ParamPoly(
                self.symbols,
                {e: c * coeff for e, c in self.terms.items()},
                _canonical=True,
            )
        other = ParamPoly.coerce(other)
        names, a, b = self._aligned(other)
        out = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                key = tuple(x + y for x, y in zip(e1, e2))
                acc = out.get(key)
                prod = c1 * c2
                acc = prod if acc is None else acc + prod
                if acc.is_zero:
                    out.pop(key, None)
                else:
                    out[key] = acc
        return ParamPoly(names, out, _canonical=True)._strip()

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        out = ParamPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def _strip(self):
        """Drop symbol columns that became unused after cancellation."""
        if not self.terms:
            return ParamPoly((), {}, _canonical=True)
        used = [i for i in range(len(self.symbols)) if any(e[i] for e in self.terms)]
        if len(used) == len(self.symbols):
            return self
        names = tuple(self.symbols[i] for i in used)
        terms = {tuple(e[i] for i in used): c for e, c in self.terms.items()}
        return ParamPoly(names, terms, _canonical=True)

    # -- comparison ---------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Scalar)):
            other = ParamPoly.coerce(other)
        if not isinstance(other, ParamPoly):
            return NotImplemented
        return self.symbols == other.symbols and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            h = hash((self.symbols, frozenset(self.terms.items())))
            object.__setattr__(self, "_hash", h)
        return self._hash

    # -- univariate views ---------------------------------------------
    def as_univariate(self, name: str):
        """Map degree-in-name -> coefficient polynomial (name removed)."""
        if name not in self.symbols:
            return {0: self} if self.terms else {}
        i = self.symbols.index(name)
        rest = self.symbols[:i] + self.symbols[i + 1:]
        buckets = {}
        for exps, coeff in self.terms.items():
            key = exps[:i] + exps[i + 1:]
            buckets.setdefault(exps[i], {})[key] = coeff
        return {
            k: ParamPoly(rest, t, _canonical=True)._strip() for k, t in buckets.items()
        }

    @staticmethod
    def from_univariate(name: str, coeffs) -> "ParamPoly":
        xv = ParamPoly.var(name)
        out = ParamPoly.const(0)
        for k, c in coeffs.items():
            out = out + ParamPoly.coerce(c) * xv ** k
        return out

    def coeff_in(self, name: str, k: int) -> "ParamPoly":
        return self.as_univariate(name).get(k, ParamPoly.const(0))

    # -- substitution / evaluation ------------------------------------
    def subs(self, mapping) -> "ParamPoly":
        """Substitute symbols by polynomials (or rationals)."""
        mapping = {k: ParamPoly.coerce(v) for k, v in mapping.items()}
        if not any(n in mapping for n in self.symbols):
            return self
        out = ParamPoly.const(0)
        powers = {}
        for exps, coeff in self.terms.items():
            term = ParamPoly.const(coeff)
            for name, e in zip(self.symbols, exps):
                if not e:
                    continue
                base = mapping.get(name, ParamPoly.var(name))
                cache = powers.setdefault(name, {1: base})
                if e not in cache:
                    cache[e] = base ** e
                term = term * cache[e]
            out = out + term
        return out

    def eval_scalar(self, assignment) -> Scalar:
        value = self.subs({n: assignment[n] for n in self.symbols})
        return value.const_value()

    # -- exact division ------------------------------------------------
    def exact_div(self, divisor) -> "ParamPoly":
        divisor = ParamPoly.coerce(divisor)
        if divisor.is_zero:
            raise ZeroDenominator("division by zero polynomial")
        if divisor.is_const:
            inv = Scalar(1) / divisor.const_value()
            return self * inv
        names, a, b = self._aligned(divisor)
        rem = dict(a)
        dlead = max(b, key=_monomial_key)
        dcoeff = b[dlead]
        quot = {}
        while rem:
            rlead = max(rem, key=_monomial_key)
            qexp = tuple(x - y for x, y in zip(rlead, dlead))
            if any(e < 0 for e in qexp):
                raise NotDivisible(f"{self} not divisible by {divisor}")
            qcoeff = rem[rlead] / dcoeff
            quot[qexp] = qcoeff
            for bexp, bcoeff in b.items():
                key = tuple(x + y for x, y in zip(qexp, bexp))
                acc = rem.get(key, Scalar(0)) - qcoeff * bcoeff
                if acc.is_zero:
                    rem.pop(key, None)
                else:
                    rem[key] = acc
        return ParamPoly(names, quot, _canonical=True)._strip()

    def divides(self, other) -> bool:
        try:
            ParamPoly.coerce(other).exact_div(self)
            return True
        except NotDivisible:
            return False

    def monic(self) -> "ParamPoly":
        """Scale so the deg-lex leading coefficient is 1."""
        if self.is_zero:
            return self
        return self * (Scalar(1) / self.leading_scalar())

    # -- display ------------------------------------------------------
    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps in sorted(self.terms, key=_monomial_key, reverse=True):
            coeff = self.terms[exps]
            mono = "*".join(
                n if e == 1 else f"{n}^{e}"
                for n, e in zip(self.symbols, exps)
                if e
            )
            cs = str(coeff)
            if ("+" in cs[1:]) or ("-" in cs[1:]) or "i" in cs:
                cs = f"({cs})"
            parts.append(f"{cs}*{mono}" if mono and cs != "1" else (mono or cs))
        return " + ".join(parts)

    def __repr__(self):
        return f"ParamPoly({self})"


ZERO_POLY = ParamPoly.const(0)
ONE_POLY = ParamPoly.const(1)


# ---------------------------------------------------------------------------
# GCD machinery: primitive pseudo-remainder sequences, recursing on symbols.
# ---------------------------------------------------------------------------

def _pseudo_rem(a, b, name):
    """Pseudo-remainder of a by b with respect to `name` (up to units)."""
    da, db = a.degree_in(name), b.degree_in(name)
    bu = b.as_univariate(name)
    lb = bu[db]
    xv = ParamPoly.var(name)
    while not a.is_zero and a.degree_in(name) >= db:
        au = a.as_univariate(name)
        d = max(au)
        la = au[d]
        a = a * lb - b * la * xv ** (d - db)
    return a


def content_in(p: ParamPoly, name: str) -> ParamPoly:
    """GCD of the coefficients of p viewed as univariate in `name`."""
    coeffs = list(p.as_univariate(name).values())
    g = ParamPoly.const(0)
    for c in coeffs:
        g = poly_gcd(g, c)
        if g.is_const and not g.is_zero:
            return ParamPoly.const(1)
    return g


def _primitive_in(p, name):
    c = content_in(p, name)
    if c.is_zero:
        return p
    return p.exact_div(c)


def poly_gcd(p, q) -> ParamPoly:
    """GCD of multivariate polynomials, deg-lex-monic normalized.

    Recursive primitive PRS: pick the highest-priority symbol as main
    variable, split off contents, and run a pseudo-remainder sequence with
    content removal at every step.
    """
    p, q = ParamPoly.coerce(p), ParamPoly.coerce(q)
    if p.is_zero:
        return q.monic()
    if q.is_zero:
        return p.monic()
    if p.is_const or q.is_const:
        return ParamPoly.const(1)
    name = _sort_symbols(p.symbols + q.symbols)[0]
    if name not in p.symbols or name not in q.symbols:
        # one operand is free of the main variable: gcd lives in the content
        free, full = (p, q) if name not in p.symbols else (q, p)
        return poly_gcd(free, content_in(full, name)).monic()
    cp, cq = content_in(p, name), content_in(q, name)
    cont = poly_gcd(cp, cq)
    a, b = p.exact_div(cp), q.exact_div(cq)
    if a.degree_in(name) < b.degree_in(name):
        a, b = b, a
    while not b.is_zero:
        r = _pseudo_rem(a, b, name)
        if not r.is_zero:
            r = _primitive_in(r, name)
        a, b = b, r
    if a.degree_in(name) == 0:
        return cont.monic()
    return (cont * _primitive_in(a, name)).monic()


def poly_gcd_many(polys) -> ParamPoly:
    g = ParamPoly.const(0)
    for p in polys:
        g = poly_gcd(g, p)
        if g.is_const and not g.is_zero:
            return ParamPoly.const(1)
    return g


def falling_factorial(m: int, j: int) -> int:
    """m(m-1)...(m-j+1); valid for negative (Laurent) m."""
    out = 1
    for t in range(j):
        out *= m - t
    return out


def binomial(n: int, k: int) -> int:
    return comb(n, k)
