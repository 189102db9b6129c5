"""Shift/reflection operator calculus in one variable.

Operators are finite formal sums c(v) * T^k * R^eps with rational-function
coefficients, integer shifts T^k f(v) = f(v+k) and the reflection
R f(v) = f(-v).  The same engine carries both the difference-operator
realization of the kappa-algebra (which never uses eps = 1) and the
Dunkl shift realization of the Bannai-Ito generators.
"""

from __future__ import annotations

from .errors import (
    Inconsistent,
    NotDivisible,
    NotPolynomialPreserving,
    NotScalar,
    NotSymmetric,
    VariableMismatch,
)
from .matrices import ExactMatrix, mat_solve_linear
from .polynomials import ParamPoly
from .ratfunc import PFrac, RatFunc
from .scalars import Scalar


class ShiftReflectionOperator:
    """Sparse map (shift k, reflection eps) -> RatFunc coefficient."""

    __slots__ = ("var", "terms")

    def __init__(self, var: str, terms=None):
        clean = {}
        for (k, eps), coeff in (terms or {}).items():
            if isinstance(coeff, ParamPoly) or isinstance(coeff, (int, Scalar)):
                coeff = RatFunc(var, ParamPoly.coerce(coeff))
            if coeff.var != var:
                raise VariableMismatch(f"{coeff.var} vs {var}")
            if not coeff.is_zero:
                clean[(int(k), int(eps) & 1)] = coeff
        object.__setattr__(self, "var", var)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("ShiftReflectionOperator is immutable")

    # -- constructors -------------------------------------------------
    @staticmethod
    def identity(var: str) -> "ShiftReflectionOperator":
        return ShiftReflectionOperator(var, {(0, 0): ParamPoly.const(1)})

    @staticmethod
    def shift(var: str, k: int = 1) -> "ShiftReflectionOperator":
        return ShiftReflectionOperator(var, {(k, 0): ParamPoly.const(1)})

    @staticmethod
    def reflection(var: str) -> "ShiftReflectionOperator":
        return ShiftReflectionOperator(var, {(0, 1): ParamPoly.const(1)})

    @staticmethod
    def multiplication(var: str, coeff) -> "ShiftReflectionOperator":
        return ShiftReflectionOperator(var, {(0, 0): coeff})

    # -- structure ----------------------------------------------------
    @property
    def is_zero(self) -> bool:
        return not self.terms

    def scalar_part(self) -> ParamPoly:
        """The operator as a multiple of the identity, else NotScalar."""
        extra = [key for key in self.terms if key != (0, 0)]
        if extra:
            raise NotScalar(f"support {sorted(self.terms)}")
        coeff = self.terms.get((0, 0))
        if coeff is None:
            return ParamPoly.const(0)
        if not coeff.is_polynomial:
            raise NotScalar(f"identity coefficient has poles: {coeff}")
        p = coeff.as_polynomial()
        if p.degree_in(self.var):
            raise NotScalar(f"identity coefficient depends on {self.var}: {p}")
        return p

    def coerce(self, other) -> "ShiftReflectionOperator":
        if isinstance(other, ShiftReflectionOperator):
            if other.var != self.var:
                raise VariableMismatch(f"{other.var} vs {self.var}")
            return other
        return ShiftReflectionOperator(self.var, {(0, 0): other})

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other):
        other = self.coerce(other)
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            acc = out.get(key)
            acc = coeff if acc is None else acc + coeff
            if acc.is_zero:
                out.pop(key, None)
            else:
                out[key] = acc
        return ShiftReflectionOperator(self.var, out)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self.coerce(other))

    def __rsub__(self, other):
        return self.coerce(other) - self

    def __neg__(self):
        return ShiftReflectionOperator(
            self.var, {k: -c for k, c in self.terms.items()}
        )

    def __mul__(self, other):
        """Operator composition (or scaling by a coefficient)."""
        if isinstance(other, (int, Scalar, ParamPoly, RatFunc)):
            coeff = other if isinstance(other, RatFunc) else RatFunc(
                self.var, ParamPoly.coerce(other)
            )
            return ShiftReflectionOperator(
                self.var, {k: c * coeff for k, c in self.terms.items()}
            )
        other = self.coerce(other)
        out = {}
        for (a, e), c in self.terms.items():
            sign = -1 if e else 1
            for (b, f), d in other.terms.items():
                key = (a + sign * b, e ^ f)
                coeff = c * d.shift_reflect(sign, a)
                acc = out.get(key)
                acc = coeff if acc is None else acc + coeff
                if acc.is_zero:
                    out.pop(key, None)
                else:
                    out[key] = acc
        return ShiftReflectionOperator(self.var, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Scalar, ParamPoly, RatFunc)):
            return self * other
        return self.coerce(other) * self

    def __pow__(self, n: int):
        out = ShiftReflectionOperator.identity(self.var)
        for _ in range(n):
            out = out * self
        return out

    # -- comparison ---------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, ShiftReflectionOperator):
            return NotImplemented
        if self.var != other.var or set(self.terms) != set(other.terms):
            return False
        return all(self.terms[k] == other.terms[k] for k in self.terms)

    def __hash__(self):
        return hash((self.var, frozenset(self.terms.items())))

    def subs_params(self, mapping) -> "ShiftReflectionOperator":
        return ShiftReflectionOperator(
            self.var, {k: c.subs_params(mapping) for k, c in self.terms.items()}
        )

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (k, eps) in sorted(self.terms):
            ops = []
            if k:
                ops.append(f"T^{k}" if k != 1 else "T+")
                if k == -1:
                    ops[-1] = "T-"
            if eps:
                ops.append("R")
            body = "*".join(ops) if ops else "1"
            parts.append(f"[{self.terms[(k, eps)]}]*{body}")
        return " + ".join(parts)

    def __repr__(self):
        return f"ShiftReflectionOperator({self})"


def op_compose(a: ShiftReflectionOperator, b: ShiftReflectionOperator):
    """Composition a then b on the right: returns a*b."""
    return a * b


def commutator(a, b):
    return a * b - b * a


def anticommutator(a, b):
    return a * b + b * a


def verify_operator_identity(lhs, rhs):
    """(pass, residual) at the operator level."""
    residual = lhs - rhs
    return residual.is_zero, residual


# ---------------------------------------------------------------------------
# Standard realizations
# ---------------------------------------------------------------------------

def racah_lambda(params=None) -> ParamPoly:
    """lambda(x) = x(x + gamma + delta + 1)."""
    params = params or {}
    x = ParamPoly.var("x")
    gamma = ParamPoly.coerce(params.get("gamma", ParamPoly.var("gamma")))
    delta = ParamPoly.coerce(params.get("delta", ParamPoly.var("delta")))
    return x * (x + gamma + delta + 1)


def build_standard_racah(params=None):
    """Difference-operator realization of the kappa-algebra.

    kappa1 = B(x) T+ + D(x) T- - (B(x) + D(x)); kappa2 = multiplication by
    lambda(x) = x(x + gamma + delta + 1).  Parameters may be left symbolic
    (default) or specialized to rationals via `params`.
    """
    params = params or {}
    get = lambda n: ParamPoly.coerce(params.get(n, ParamPoly.var(n)))
    alpha, beta, gamma, delta = get("alpha"), get("beta"), get("gamma"), get("delta")
    x = ParamPoly.var("x")
    b_num = (x + alpha + 1) * (x + beta + delta + 1) * (x + gamma + 1) * (
        x + gamma + delta + 1
    )
    b_fac = ((x * 2 + gamma + delta + 1, 1), (x * 2 + gamma + delta + 2, 1))
    d_num = x * (x - alpha + gamma + delta) * (x - beta + gamma) * (x + delta)
    d_fac = ((x * 2 + gamma + delta, 1), (x * 2 + gamma + delta + 1, 1))
    b = RatFunc("x", b_num, b_fac)
    d = RatFunc("x", d_num, d_fac)
    kappa1 = ShiftReflectionOperator(
        "x", {(1, 0): b, (-1, 0): d, (0, 0): -(b + d)}
    )
    lam = x * (x + gamma + delta + 1)
    kappa2 = ShiftReflectionOperator.multiplication("x", lam)
    return {"kappa1": kappa1, "kappa2": kappa2, "lambda": lam}


def bi_structure_polys(params=None):
    """The printed structure constants of the Dunkl shift realization."""
    params = params or {}
    get = lambda n: ParamPoly.coerce(params.get(n, ParamPoly.var(n)))
    rho1, rho2, r1, r2 = get("rho1"), get("rho2"), get("r1"), get("r2")
    return {
        "wX": (rho1 * rho2 + r1 * r2) * 4,
        "wY": (rho1 * rho1 + rho2 * rho2 - r1 * r1 - r2 * r2) * 2,
        "wZ": (rho1 * rho2 - r1 * r2) * 4,
        "u": (rho1 ** 2 + rho2 ** 2 + r1 ** 2 + r2 ** 2) * 2 - ParamPoly.const(
            Scalar("1/4")
        ),
    }


def build_standard_bi(params=None):
    """Dunkl shift-operator realization of the Bannai-Ito generators.

    X = F(z) T+ R + G(z) R - (F + G - h); Y = multiplication by 2z + 1/2;
    Z is derived as {X, Y} - wZ with the printed wZ.
    """
    params = params or {}
    get = lambda n: ParamPoly.coerce(params.get(n, ParamPoly.var(n)))
    rho1, rho2, r1, r2 = get("rho1"), get("rho2"), get("r1"), get("r2")
    z = ParamPoly.var("z")
    half = Scalar("1/2")
    f = RatFunc("z", (z - r1 + half) * (z - r2 + half), ((z + half, 1),))
    g = RatFunc("z", -((z - rho1) * (z - rho2)), ((z, 1),))
    h = rho1 + rho2 - r1 - r2 + ParamPoly.const(half)
    x_op = ShiftReflectionOperator(
        "z",
        {
            (1, 1): f,
            (0, 1): g,
            (0, 0): -(f + g - RatFunc("z", h)),
        },
    )
    y_op = ShiftReflectionOperator.multiplication("z", z * 2 + half)
    wz = (rho1 * rho2 - r1 * r2) * 4
    z_op = anticommutator(x_op, y_op) - ShiftReflectionOperator.multiplication(
        "z", wz
    )
    return {"X": x_op, "Y": y_op, "Z": z_op, "F": f, "G": g, "h": h}


# ---------------------------------------------------------------------------
# Structure-constant fitting
# ---------------------------------------------------------------------------

def _linear_fit(targets, basis_lists, unknown_names):
    """Fit target operators as fixed linear combinations of basis operators.

    targets: list of operators; basis_lists: matching lists of (name, op)
    pairs where `name` indexes the shared unknowns.  Coefficient matching
    runs over every (shift, reflection) key and every power of the variable
    after clearing denominators, giving an overdetermined linear system over
    the field of parameter-polynomial fractions.
    """
    rows = []
    var = targets[0].var
    for target, basis in zip(targets, basis_lists):
        keys = set(target.terms)
        for _, op in basis:
            keys.update(op.terms)
        for key in sorted(keys):
            entries = [op.terms.get(key, RatFunc(var, 0)) for _, op in basis]
            t = target.terms.get(key, RatFunc(var, 0))
            # common denominator across the row
            lcm = {}
            for rf in entries + [t]:
                for fac, mult in rf.factors:
                    lcm[fac] = max(lcm.get(fac, 0), mult)

            def cleared(rf):
                num = rf.num
                have = dict(rf.factors)
                for fac, mult in lcm.items():
                    extra = mult - have.get(fac, 0)
                    if extra:
                        num = num * fac ** extra
                return num

            polys = [cleared(rf) for rf in entries]
            tpoly = cleared(t)
            degs = set()
            for p in polys + [tpoly]:
                degs.update(p.as_univariate(var))
            for deg in sorted(degs):
                coeffs = {}
                for (name, _), p in zip(basis, polys):
                    c = p.coeff_in(var, deg)
                    if not c.is_zero:
                        prev = coeffs.get(name)
                        coeffs[name] = c if prev is None else prev + c
                rows.append((coeffs, tpoly.coeff_in(var, deg)))
    # sparse substitution solve: repeatedly resolve rows with one unknown left
    known = {}
    while len(known) < len(unknown_names):
        progress = False
        for coeffs, rhs in rows:
            open_names = [n for n in coeffs if n not in known and not coeffs[n].is_zero]
            if len(open_names) != 1:
                continue
            name = open_names[0]
            acc = PFrac(rhs)
            for n, c in coeffs.items():
                if n in known:
                    acc = acc - known[n] * PFrac(c)
            known[name] = acc / PFrac(coeffs[name])
            progress = True
        if not progress:
            raise Inconsistent(
                f"fit under-determined for {set(unknown_names) - set(known)}"
            )
    # every remaining equation must be satisfied
    for coeffs, rhs in rows:
        acc = PFrac(rhs)
        for n, c in coeffs.items():
            acc = acc - known[n] * PFrac(c)
        if not acc.is_zero:
            raise Inconsistent(f"residual equation {acc} != 0")
    return {name: known[name].as_polynomial() for name in unknown_names}


def fit_structure_constants(realization: str, ops=None, params=None):
    """Recover the defining-relation constants of a realization, exactly.

    For the kappa-algebra the constants are fitted by solving the linear
    system given by coefficient matching; the residual-free fit doubles as
    the verification that the realization satisfies the relations.  For the
    Bannai-Ito side the three anticommutator defects are verified to be
    multiples of the identity and returned.
    """
    if realization == "racah":
        ops = ops or build_standard_racah(params)
        k1, k2 = ops["kappa1"], ops["kappa2"]
        k3 = commutator(k1, k2)
        t1 = commutator(k2, k3)
        t2 = commutator(k3, k1)
        one = ShiftReflectionOperator.identity(k1.var)
        basis1 = [
            ("a2", k2 * k2),
            ("a1", anticommutator(k1, k2)),
            ("c1", k1),
            ("d", k2),
            ("e1", one),
        ]
        basis2 = [
            ("a1", k1 * k1),
            ("a2", anticommutator(k1, k2)),
            ("c2", k2),
            ("d", k1),
            ("e2", one),
        ]
        names = ["a1", "a2", "c1", "c2", "d", "e1", "e2"]
        fitted = _linear_fit([t1, t2], [basis1, basis2], names)
        # zero-residual verification of both relations
        for target, basis in ((t1, basis1), (t2, basis2)):
            acc = ShiftReflectionOperator(k1.var)
            for name, op in basis:
                acc = acc + op * fitted[name]
            if not (target - acc).is_zero:
                raise Inconsistent("fitted constants leave a nonzero residual")
        return fitted
    if realization == "bi":
        ops = ops or build_standard_bi(params)
        x_op, y_op, z_op = ops["X"], ops["Y"], ops["Z"]
        out = {}
        for name, (a, b, c) in (
            ("wZ", (x_op, y_op, z_op)),
            ("wX", (y_op, z_op, x_op)),
            ("wY", (z_op, x_op, y_op)),
        ):
            defect = anticommutator(a, b) - c
            out[name] = defect.scalar_part()
        return out
    raise ValueError(f"unknown realization {realization!r}")


def casimir_scalar(realization: str, ops=None, constants=None, params=None):
    """Value of the Casimir element in a realization, as a parameter poly.

    Substitutes the realization operators into the abstract Casimir and
    checks the result is a multiple of the identity (NotScalar otherwise).
    """
    if realization == "bi":
        ops = ops or build_standard_bi(params)
        u = ops["X"] ** 2 + ops["Y"] ** 2 + ops["Z"] ** 2
        return u.scalar_part()
    if realization == "racah":
        ops = ops or build_standard_racah(params)
        constants = constants or fit_structure_constants("racah", ops)
        k1, k2 = ops["kappa1"], ops["kappa2"]
        k3 = commutator(k1, k2)
        cs = constants
        t = (
            anticommutator(k1 * k1, k2) * cs["a1"]
            + anticommutator(k1, k2 * k2) * cs["a2"]
            + k1 * k1 * (cs["a1"] * cs["a1"] + cs["c1"])
            + k2 * k2 * (cs["a2"] * cs["a2"] + cs["c2"])
            + k3 * k3
            + anticommutator(k1, k2) * (cs["d"] + cs["a1"] * cs["a2"])
            + k1 * (cs["e1"] * 2 + cs["d"] * cs["a1"])
            + k2 * (cs["e2"] * 2 + cs["d"] * cs["a2"])
        )
        return t.scalar_part()
    raise ValueError(f"unknown realization {realization!r}")


def build_quadratic_combos(ops=None, params=None):
    """Quadratic combinations of the Bannai-Ito generators that close into
    the equitable kappa-algebra extended by the central element I."""
    ops = ops or build_standard_bi(params)
    x_op, y_op, z_op = ops["X"], ops["Y"], ops["Z"]
    quarter = Scalar("1/4")
    combo = lambda g: (g * g - g - Scalar("3/4")) * quarter
    out = {
        "A": combo(x_op),
        "B": combo(y_op),
        "C": combo(z_op),
        "I": x_op + y_op + z_op - Scalar("3/2"),
    }
    out["Delta"] = commutator(out["A"], out["B"]) * Scalar("1/2")
    return out


def quadratic_embedding_operator_residuals(ops=None, params=None):
    """Residuals of the quadratic-combination identities at operator level.

    Same identities as the abstract suite, but with the Bannai-Ito
    generators given by the Dunkl shift realization, so the structure
    constants and the Casimir value become explicit parameter polynomials.
    All residual operators must be zero.
    """
    ops = ops or build_standard_bi(params)
    combos = build_quadratic_combos(ops)
    a, b, c = combos["A"], combos["B"], combos["C"]
    i_op, delta = combos["I"], combos["Delta"]
    structure = bi_structure_polys(params)
    u = casimir_scalar("bi", ops)
    one = ShiftReflectionOperator.identity(ops["X"].var)
    two_delta = delta * 2
    res = {
        "cyclic-ab": commutator(a, b) - two_delta,
        "cyclic-bc": commutator(b, c) - two_delta,
        "cyclic-ca": commutator(c, a) - two_delta,
        "sum-rule": (a + b + c)
        - (one * u - i_op - Scalar("15/4")) * Scalar("1/4"),
        "central-ia": commutator(a, i_op),
        "central-ib": commutator(b, i_op),
        "central-ic": commutator(c, i_op),
    }
    sixteenth = Scalar("1/16")
    half = Scalar("1/2")
    triples = (
        ("rel-a", a, b * a - a * c, structure["wY"], structure["wZ"]),
        ("rel-b", b, c * b - b * a, structure["wZ"], structure["wX"]),
        ("rel-c", c, a * c - c * b, structure["wX"], structure["wY"]),
    )
    for key, lhs_op, quad, w1, w2 in triples:
        extra = (
            (one * ((w1 + w2) * half) - i_op) * ((w1 - w2) * half) * sixteenth
        )
        res[key] = commutator(lhs_op, delta) - (quad + extra)
    return res


# ---------------------------------------------------------------------------
# Polynomial action
# ---------------------------------------------------------------------------

def apply_to_polynomial(op: ShiftReflectionOperator, p) -> ParamPoly:
    """Apply the operator to a polynomial in its variable.

    The denominators must divide out exactly; a remainder raises
    NotPolynomialPreserving.
    """
    p = ParamPoly.coerce(p)
    var = op.var
    xv = ParamPoly.var(var)
    total = RatFunc(var, 0)
    for (k, eps), coeff in op.terms.items():
        sign = -1 if eps else 1
        image = p.subs({var: (xv + k) * sign})
        total = total + coeff * RatFunc(var, image)
    if not total.is_polynomial:
        raise NotPolynomialPreserving(f"nonzero remainder: {total}")
    return total.as_polynomial()


def to_lambda_basis(p, params=None):
    """Coefficients of p over powers of lambda(x) = x(x+gamma+delta+1).

    The polynomial must be invariant under x -> -x - gamma - delta - 1.
    """
    p = ParamPoly.coerce(p)
    params = params or {}
    gamma = ParamPoly.coerce(params.get("gamma", ParamPoly.var("gamma")))
    delta = ParamPoly.coerce(params.get("delta", ParamPoly.var("delta")))
    x = ParamPoly.var("x")
    mirrored = p.subs({"x": -x - gamma - delta - 1})
    if mirrored != p:
        raise NotSymmetric(f"not invariant under the lambda involution: {p}")
    lam = x * (x + gamma + delta + 1)
    deg = p.degree_in("x")
    if deg % 2:
        raise NotSymmetric(f"odd degree {deg} cannot be lambda-symmetric")
    coeffs = [ParamPoly.const(0)] * (deg // 2 + 1)
    rem = p
    for k in range(deg // 2, -1, -1):
        c = rem.coeff_in("x", 2 * k)
        coeffs[k] = c
        rem = rem - c * lam ** k
    if not rem.is_zero:
        raise NotSymmetric(f"residue after lambda expansion: {rem}")
    return coeffs
