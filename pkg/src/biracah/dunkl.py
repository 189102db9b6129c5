"""Normal-ordered operator algebra in three variables with reflections.

Elements are finite sums of monomials x^a d^b R^e (a Laurent, b >= 0, e a
reflection bit per variable) with polynomial coefficients in the deformation
parameters.  Everything in this module is exact; the three verification
suites return residual elements that must be exactly zero.
"""

from __future__ import annotations

from .errors import NotScalar
from .polynomials import ParamPoly, binomial, falling_factorial
from .scalars import Scalar

_ZERO_KEY = (0, 0, 0, 0, 0, 0, 0, 0, 0)

_mono_cache: dict = {}


def _mul_monomials(k1, k2):
    """Product of two normal-ordered monomials as [(key, int coeff)].

    Reflections of the left factor pick up a sign while passing through the
    right factor; per variable, derivatives act on powers via the falling
    factorial formula (valid for Laurent exponents).
    """
    hit = _mono_cache.get((k1, k2))
    if hit is not None:
        return hit
    a1, b1, e1 = k1[0:3], k1[3:6], k1[6:9]
    a2, b2, e2 = k2[0:3], k2[3:6], k2[6:9]
    sign = 1
    for i in range(3):
        if e1[i] and (a2[i] + b2[i]) % 2:
            sign = -sign
    # per-variable expansions of d^b1 x^a2
    per_var = []
    for i in range(3):
        choices = []
        for j in range(b1[i] + 1):
            c = binomial(b1[i], j) * falling_factorial(a2[i], j)
            if c:
                choices.append((j, c))
        per_var.append(choices)
    out = []
    for j1, c1 in per_var[0]:
        for j2, c2 in per_var[1]:
            for j3, c3 in per_var[2]:
                js = (j1, j2, j3)
                key = tuple(
                    a1[i] + a2[i] - js[i] for i in range(3)
                ) + tuple(
                    b1[i] + b2[i] - js[i] for i in range(3)
                ) + tuple(e1[i] ^ e2[i] for i in range(3))
                out.append((key, sign * c1 * c2 * c3))
    _mono_cache[(k1, k2)] = out
    return out


class DunklElement:
    """Sparse map from normal-ordered monomial to parameter polynomial."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for key, coeff in (terms or {}).items():
            coeff = ParamPoly.coerce(coeff)
            if not coeff.is_zero:
                clean[tuple(key)] = coeff
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("DunklElement is immutable")

    # -- constructors -------------------------------------------------
    @staticmethod
    def const(value) -> "DunklElement":
        return DunklElement({_ZERO_KEY: ParamPoly.coerce(value)})

    @staticmethod
    def one() -> "DunklElement":
        return DunklElement.const(1)

    @staticmethod
    def x(i: int, power: int = 1) -> "DunklElement":
        key = [0] * 9
        key[i - 1] = power
        return DunklElement({tuple(key): ParamPoly.const(1)})

    @staticmethod
    def d(i: int) -> "DunklElement":
        key = [0] * 9
        key[2 + i] = 1
        return DunklElement({tuple(key): ParamPoly.const(1)})

    @staticmethod
    def r(i: int) -> "DunklElement":
        key = [0] * 9
        key[5 + i] = 1
        return DunklElement({tuple(key): ParamPoly.const(1)})

    # -- structure ----------------------------------------------------
    @property
    def is_zero(self) -> bool:
        return not self.terms

    def scalar_part(self) -> ParamPoly:
        extra = [k for k in self.terms if k != _ZERO_KEY]
        if extra:
            raise NotScalar(f"support includes {extra[:3]}")
        return self.terms.get(_ZERO_KEY, ParamPoly.const(0))

    @staticmethod
    def coerce(value) -> "DunklElement":
        if isinstance(value, DunklElement):
            return value
        return DunklElement.const(value)

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other):
        other = DunklElement.coerce(other)
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            acc = out.get(key)
            acc = coeff if acc is None else acc + coeff
            if acc.is_zero:
                out.pop(key, None)
            else:
                out[key] = acc
        return DunklElement(out)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-DunklElement.coerce(other))

    def __rsub__(self, other):
        return DunklElement.coerce(other) - self

    def __neg__(self):
        return DunklElement({k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Scalar, ParamPoly)) or type(other).__name__ in (
            "mpq",
            "Fraction",
        ):
            coeff = ParamPoly.coerce(other)
            return DunklElement({k: c * coeff for k, c in self.terms.items()})
        other = DunklElement.coerce(other)
        out = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                c = c1 * c2
                for key, icoeff in _mul_monomials(k1, k2):
                    acc = out.get(key)
                    add = c * icoeff
                    acc = add if acc is None else acc + add
                    if acc.is_zero:
                        out.pop(key, None)
                    else:
                        out[key] = acc
        return DunklElement(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Scalar, ParamPoly)) or type(other).__name__ in (
            "mpq",
            "Fraction",
        ):
            return self * other
        return DunklElement.coerce(other) * self

    def __pow__(self, n: int):
        out = DunklElement.one()
        for _ in range(n):
            out = out * self
        return out

    # -- comparison ---------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, DunklElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for key in sorted(self.terms):
            bits = []
            for i in range(3):
                if key[i]:
                    bits.append(f"x{i+1}^{key[i]}" if key[i] != 1 else f"x{i+1}")
            for i in range(3):
                if key[3 + i]:
                    bits.append(
                        f"d{i+1}^{key[3+i]}" if key[3 + i] != 1 else f"d{i+1}"
                    )
            for i in range(3):
                if key[6 + i]:
                    bits.append(f"R{i+1}")
            mono = "*".join(bits) if bits else "1"
            parts.append(f"[{self.terms[key]}]*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"DunklElement({self})"


def normal_order(*factors) -> DunklElement:
    """Normal-ordered product of the given elements."""
    out = DunklElement.one()
    for f in factors:
        out = out * DunklElement.coerce(f)
    return out


def commutator(a, b):
    return a * b - b * a


def anticommutator(a, b):
    return a * b + b * a


# ---------------------------------------------------------------------------
# Single-variable realizations
# ---------------------------------------------------------------------------

def g_symbol(i: int) -> ParamPoly:
    return ParamPoly.var(f"g{i}")


def mu_symbol(i: int) -> ParamPoly:
    return ParamPoly.var(f"mu{i}")


def angular_momentum(i: int) -> DunklElement:
    """L_i = (1/i)(x_j d_k - x_k d_j) for the cyclic pair (j, k)."""
    j, k = {1: (2, 3), 2: (3, 1), 3: (1, 2)}[i]
    minus_i = Scalar(0, -1)
    return (
        DunklElement.x(j) * DunklElement.d(k)
        - DunklElement.x(k) * DunklElement.d(j)
    ) * minus_i


def build_su11_single(i: int):
    """The positive-discrete-series realization in the variable x_i.

    The parameter enters only through g = k^2 - 1/4, kept as the symbol g_i.
    Returns K0, K+, K- and the Casimir C = K0^2 - K+K- - K0.
    """
    quarter = Scalar("1/4")
    g = g_symbol(i)
    x = DunklElement.x(i)
    dx = DunklElement.d(i)
    inv2 = DunklElement.x(i, -2)
    k0 = (-(dx * dx) + x * x + inv2 * g) * quarter
    kp = ((x - dx) * (x - dx) - inv2 * g) * quarter
    km = ((x + dx) * (x + dx) - inv2 * g) * quarter
    c = k0 * k0 - kp * km - k0
    return {"K0": k0, "K+": kp, "K-": km, "C": c}


def build_osp12_single(i: int):
    """The coordinate realization of the osp(1|2) generators in x_i.

    Returns A+, A-, A0, the grade involution P, the sCasimir S and the
    Casimir Q = S*P, with the parameter as the symbol mu_i.
    """
    half = Scalar("1/2")
    quarter = Scalar("1/4")
    mu = mu_symbol(i)
    x = DunklElement.x(i)
    dx = DunklElement.d(i)
    invr = DunklElement.x(i, -1) * DunklElement.r(i)
    inv2 = DunklElement.x(i, -2)
    ap = (x - dx + invr * mu) * half
    am = (x + dx - invr * mu) * half
    a0 = (-(dx * dx) + x * x + (inv2 * (mu * mu) - inv2 * DunklElement.r(i) * mu)) * quarter
    p = DunklElement.r(i)
    s = ap * am * 2 - a0 * 2 + half
    q = s * p
    return {"A+": ap, "A-": am, "A0": a0, "P": p, "S": s, "Q": q}


def su11_casimir(k0, kp, km) -> DunklElement:
    return k0 * k0 - kp * km - k0


def osp12_scasimir(ap, am, a0) -> DunklElement:
    return ap * am * 2 - a0 * 2 + Scalar("1/2")


def verify_su11_single(i: int):
    """Residuals of the single-variable su(1,1) presentation relations."""
    ops = build_su11_single(i)
    k0, kp, km, c = ops["K0"], ops["K+"], ops["K-"], ops["C"]
    quarter = Scalar("1/4")
    return {
        "comm-k0-kp": commutator(k0, kp) - kp,
        "comm-k0-km": commutator(k0, km) + km,
        "comm-km-kp": commutator(km, kp) - k0 * 2,
        "casimir-value": c - DunklElement.const((g_symbol(i) - Scalar("3/4")) * quarter),
    }


def verify_osp12_single(i: int):
    """Residuals of the single-variable osp(1|2) / sl_-1(2) relations."""
    ops = build_osp12_single(i)
    ap, am, a0, p, s, q = (
        ops["A+"], ops["A-"], ops["A0"], ops["P"], ops["S"], ops["Q"],
    )
    half = Scalar("1/2")
    mu = mu_symbol(i)
    jp, jm = ap * ap, am * am
    return {
        "comm-a0-ap": commutator(a0, ap) - ap * half,
        "comm-a0-am": commutator(a0, am) + am * half,
        "acomm-ap-am": anticommutator(ap, am) - a0 * 2,
        "comm-a0-p": commutator(a0, p),
        "acomm-ap-p": anticommutator(ap, p),
        "acomm-am-p": anticommutator(am, p),
        "involution": p * p - DunklElement.one(),
        "even-comm-a0-jp": commutator(a0, jp) - jp,
        "even-comm-a0-jm": commutator(a0, jm) + jm,
        "even-comm-jm-jp": commutator(jm, jp) - a0 * 2,
        "casimir-value": q + DunklElement.const(mu),
        "scasimir-value": s + DunklElement.r(i) * mu,
    }


def verify_scasimir_relations(i: int):
    """Residuals tying the sCasimir to the even-subalgebra Casimir."""
    ops = build_osp12_single(i)
    ap, am, a0, s = ops["A+"], ops["A-"], ops["A0"], ops["S"]
    quarter = Scalar("1/4")
    jp, jm = ap * ap, am * am
    c_even = a0 * a0 - jp * jm - a0
    mu = mu_symbol(i)
    expected = (
        DunklElement.const(mu * mu)
        - DunklElement.r(i) * mu
        - DunklElement.const(Scalar("3/4"))
    ) * quarter
    return {
        "acomm-s-ap": anticommutator(s, ap),
        "acomm-s-am": anticommutator(s, am),
        "comm-s-a0": commutator(s, a0),
        "quadratic-link": c_even - (s * s + s - Scalar("3/4")) * quarter,
        "even-casimir-value": c_even - expected,
    }


# ---------------------------------------------------------------------------
# Coproduct lifts
# ---------------------------------------------------------------------------

_SU_COMULT = {
    "K0": (("K0", "1"), ("1", "K0")),
    "K+": (("K+", "1"), ("1", "K+")),
    "K-": (("K-", "1"), ("1", "K-")),
}

_OSP_COMULT = {
    "A+": (("A+", "P"), ("1", "A+")),
    "A-": (("A-", "P"), ("1", "A-")),
    "A0": (("A0", "1"), ("1", "A0")),
    "P": (("P", "P"),),
}


def coproduct_lift(algebra: str, gen: str, legs, assoc: str = "right"):
    """Lift a generator to the tensor legs (variable indices).

    `assoc="right"` iterates (1 x Delta) Delta, `assoc="left"` iterates
    (Delta x 1) Delta; both must agree (coassociativity).
    """
    legs = tuple(legs)
    if gen == "1":
        return DunklElement.one()
    if len(legs) == 1:
        i = legs[0]
        if algebra == "su11":
            return build_su11_single(i)[gen]
        if algebra == "osp12":
            return build_osp12_single(i)[gen]
        raise ValueError(f"unknown algebra {algebra!r}")
    comult = _SU_COMULT if algebra == "su11" else _OSP_COMULT
    if assoc == "right":
        left, right = legs[:1], legs[1:]
    else:
        left, right = legs[:-1], legs[-1:]
    out = DunklElement(
        {}
    )
    for gl, gr in comult[gen]:
        out = out + coproduct_lift(algebra, gl, left, assoc) * coproduct_lift(
            algebra, gr, right, assoc
        )
    return out


def verify_coassociativity():
    """Residuals of (1 x Delta) Delta == (Delta x 1) Delta per generator."""
    out = {}
    for algebra, gens in (("su11", _SU_COMULT), ("osp12", _OSP_COMULT)):
        for gen in gens:
            lhs = coproduct_lift(algebra, gen, (1, 2, 3), "right")
            rhs = coproduct_lift(algebra, gen, (1, 2, 3), "left")
            out[f"{algebra}-{gen}"] = lhs - rhs
    return out


# ---------------------------------------------------------------------------
# Intermediate and total Casimir operators
# ---------------------------------------------------------------------------

def intermediate_casimirs(algebra: str):
    """Initial, intermediate and total Casimirs of the three-fold lift."""
    if algebra == "su11":
        def casimir(legs):
            k0 = coproduct_lift("su11", "K0", legs)
            kp = coproduct_lift("su11", "K+", legs)
            km = coproduct_lift("su11", "K-", legs)
            return su11_casimir(k0, kp, km)

        return {
            "C1": build_su11_single(1)["C"],
            "C2": build_su11_single(2)["C"],
            "C3": build_su11_single(3)["C"],
            "C12": casimir((1, 2)),
            "C23": casimir((2, 3)),
            "C4": casimir((1, 2, 3)),
        }
    if algebra == "osp12":
        def q_casimir(legs):
            ap = coproduct_lift("osp12", "A+", legs)
            am = coproduct_lift("osp12", "A-", legs)
            a0 = coproduct_lift("osp12", "A0", legs)
            p = coproduct_lift("osp12", "P", legs)
            return osp12_scasimir(ap, am, a0) * p

        q4 = q_casimir((1, 2, 3))
        refl = DunklElement.r(1) * DunklElement.r(2) * DunklElement.r(3)
        return {
            "Q1": build_osp12_single(1)["Q"],
            "Q2": build_osp12_single(2)["Q"],
            "Q3": build_osp12_single(3)["Q"],
            "Q12": q_casimir((1, 2)),
            "Q23": q_casimir((2, 3)),
            "Q4": q4,
            "S4": q4 * refl,
        }
    raise ValueError(f"unknown algebra {algebra!r}")


def _sum_x_squared() -> DunklElement:
    return sum(
        (DunklElement.x(i) * DunklElement.x(i) for i in (1, 2, 3)),
        DunklElement({}),
    )


def _angular_squared() -> DunklElement:
    return sum(
        (angular_momentum(i) * angular_momentum(i) for i in (1, 2, 3)),
        DunklElement({}),
    )


def su11_hamiltonian() -> DunklElement:
    """L^2 + (sum x_i^2)(sum g_i / x_i^2)."""
    pot = DunklElement({})
    for i in (1, 2, 3):
        pot = pot + DunklElement.x(i, -2) * g_symbol(i)
    return _angular_squared() + _sum_x_squared() * pot


def osp12_hamiltonian() -> DunklElement:
    """L^2 + (sum x_i^2)(sum mu_i (mu_i - R_i) / x_i^2)."""
    pot = DunklElement({})
    for i in (1, 2, 3):
        mu = mu_symbol(i)
        pot = pot + (
            DunklElement.x(i, -2) * (mu * mu)
            - DunklElement.x(i, -2) * DunklElement.r(i) * mu
        )
    return _angular_squared() + _sum_x_squared() * pot


def verify_total_casimirs():
    """Residuals of the total-Casimir/Hamiltonian identifications."""
    quarter = Scalar("1/4")
    su = intermediate_casimirs("su11")
    osp = intermediate_casimirs("osp12")
    s4 = osp["S4"]
    out = {
        "su-total-vs-hamiltonian": su["C4"]
        - (su11_hamiltonian() - Scalar("3/4")) * quarter,
        "osp-supercharge-square": s4 * s4 + s4 - osp12_hamiltonian(),
        "osp-s4-identity": s4
        - osp["Q4"] * (DunklElement.r(1) * DunklElement.r(2) * DunklElement.r(3)),
    }
    for i in (1, 2, 3):
        g = g_symbol(i)
        out[f"su-initial-{i}"] = su[f"C{i}"] - DunklElement.const(
            (g - Scalar("3/4")) * quarter
        )
        out[f"osp-initial-{i}"] = osp[f"Q{i}"] + DunklElement.const(mu_symbol(i))
    return out


# ---------------------------------------------------------------------------
# The two three-fold problems and the embedding
# ---------------------------------------------------------------------------

def _racah2_residuals(a, b, c, lam1, lam2, lam3, lam4):
    """Residuals of the cyclic quadratic relations for a, b, c.

    The lambdas may be scalars or central elements; centrality is checked
    separately by the callers.
    """
    lam1 = DunklElement.coerce(lam1)
    lam2 = DunklElement.coerce(lam2)
    lam3 = DunklElement.coerce(lam3)
    lam4 = DunklElement.coerce(lam4)
    omega2 = commutator(a, b)
    out = {
        "cyclic-ab-bc": omega2 - commutator(b, c),
        "cyclic-bc-ca": commutator(b, c) - commutator(c, a),
    }
    omega = omega2 * Scalar("1/2")
    out["rel-a"] = commutator(a, omega) - (
        b * a - a * c + (lam2 - lam3) * (lam4 - lam1)
    )
    out["rel-b"] = commutator(b, omega) - (
        c * b - b * a + (lam3 - lam1) * (lam4 - lam2)
    )
    out["rel-c"] = commutator(c, omega) - (
        a * c - c * b + (lam1 - lam2) * (lam4 - lam3)
    )
    return out


def verify_racah_problem():
    """Residual suite for the three-fold su(1,1) problem."""
    quarter = Scalar("1/4")
    su = intermediate_casimirs("su11")
    a, c = su["C23"], su["C12"]
    total = su["C1"] + su["C2"] + su["C3"] + su["C4"]
    b = total - a - c
    lams = [
        (g_symbol(i) - Scalar("3/4")) * quarter for i in (1, 2, 3)
    ]
    out = _racah2_residuals(
        a, b, c,
        DunklElement.const(lams[0]),
        DunklElement.const(lams[1]),
        DunklElement.const(lams[2]),
        su["C4"],
    )
    for name, op in (("a", a), ("b", b), ("c", c)):
        out[f"central-c4-{name}"] = commutator(op, su["C4"])
    # printed constants of motion
    def printed(axis, j, k):
        lsq = angular_momentum(axis) * angular_momentum(axis)
        pot = DunklElement.x(j, -2) * g_symbol(j) + DunklElement.x(k, -2) * g_symbol(k)
        xsq = DunklElement.x(j) * DunklElement.x(j) + DunklElement.x(k) * DunklElement.x(k)
        return (lsq + xsq * pot - DunklElement.one()) * quarter

    out["printed-a"] = a - printed(1, 2, 3)
    out["printed-b"] = b - printed(2, 3, 1)
    out["printed-c"] = c - printed(3, 1, 2)
    return out


def bi_problem_operators():
    """X, Y, Z and the operator-valued structure constants of the BI lift."""
    osp = intermediate_casimirs("osp12")
    z = -osp["Q12"]
    x = -osp["Q23"]
    lam4 = -osp["Q4"]
    mus = [mu_symbol(i) for i in (1, 2, 3)]
    two = Scalar(2)
    w_y = (DunklElement.const(mus[0] * mus[2]) + lam4 * mus[1]) * two
    y = anticommutator(z, x) - w_y
    w_x = (DunklElement.const(mus[1] * mus[2]) + lam4 * mus[0]) * two
    w_z = (DunklElement.const(mus[0] * mus[1]) + lam4 * mus[2]) * two
    return {
        "X": x, "Y": y, "Z": z,
        "wX": w_x, "wY": w_y, "wZ": w_z,
        "lam4": lam4, "S4": osp["S4"], "Q4": osp["Q4"],
    }


def verify_bi_problem():
    """Residual suite for the three-fold osp(1|2) problem."""
    ops = bi_problem_operators()
    x, y, z = ops["X"], ops["Y"], ops["Z"]
    out = {
        "acomm-xy": anticommutator(x, y) - (z + ops["wZ"]),
        "acomm-yz": anticommutator(y, z) - (x + ops["wX"]),
        "acomm-zx": anticommutator(z, x) - (y + ops["wY"]),
    }
    for name, op in (("x", x), ("y", y), ("z", z)):
        out[f"central-q4-{name}"] = commutator(op, ops["Q4"])
    # printed constants of motion (Realization-2)
    i_unit = Scalar(0, 1)
    mus = [None] + [mu_symbol(i) for i in (1, 2, 3)]
    r = DunklElement.r
    half = Scalar("1/2")

    def ratio(j, k):
        return DunklElement.x(j) * DunklElement.x(k, -1)

    printed_x = (
        angular_momentum(1) * i_unit + ratio(3, 2) * r(2) * mus[2]
        - ratio(2, 3) * r(3) * mus[3]
    ) * r(2) + r(3) * mus[2] + r(2) * mus[3] + r(2) * r(3) * half
    printed_y = (
        angular_momentum(2) * (-i_unit) + ratio(3, 1) * r(1) * mus[1]
        - ratio(1, 3) * r(3) * mus[3]
    ) * (r(1) * r(2)) + r(3) * mus[1] + r(1) * mus[3] + r(1) * r(3) * half
    printed_z = (
        angular_momentum(3) * i_unit + ratio(2, 1) * r(1) * mus[1]
        - ratio(1, 2) * r(2) * mus[2]
    ) * r(1) + r(2) * mus[1] + r(1) * mus[2] + r(1) * r(2) * half
    out["printed-x"] = x - printed_x
    out["printed-y"] = y - printed_y
    out["printed-z"] = z - printed_z
    # Casimir value: U = X^2 + Y^2 + Z^2 = (S4)^2 + mu1^2+mu2^2+mu3^2 - 1/4
    s4 = ops["S4"]
    mu_sq = mus[1] * mus[1] + mus[2] * mus[2] + mus[3] * mus[3]
    out["casimir-printed"] = (x * x + y * y + z * z) - (
        s4 * s4 + DunklElement.const(mu_sq - Scalar("1/4"))
    )
    return out


def dunkl_embedding_operators():
    """The reflection-twisted quadratic combinations A, B, C."""
    ops = bi_problem_operators()
    x, y, z = ops["X"], ops["Y"], ops["Z"]
    quarter = Scalar("1/4")
    r = DunklElement.r
    a = (x * x - x * (r(2) * r(3)) - Scalar("3/4")) * quarter
    b = (y * y - y * (r(3) * r(1)) - Scalar("3/4")) * quarter
    c = (z * z - z * (r(1) * r(2)) - Scalar("3/4")) * quarter
    return {"A": a, "B": b, "C": c, **ops}


def verify_dunkl_embedding():
    """Residual suite for the reflection-valued embedding."""
    quarter = Scalar("1/4")
    ops = dunkl_embedding_operators()
    a, b, c = ops["A"], ops["B"], ops["C"]
    out = {}
    # printed expressions (the mu(mu-R) analogues of the su constants)
    def printed(axis, j, k):
        lsq = angular_momentum(axis) * angular_momentum(axis)
        pot = DunklElement({})
        for m in (j, k):
            mu = mu_symbol(m)
            pot = pot + DunklElement.x(m, -2) * (mu * mu) - DunklElement.x(
                m, -2
            ) * DunklElement.r(m) * mu
        xsq = DunklElement.x(j) * DunklElement.x(j) + DunklElement.x(k) * DunklElement.x(k)
        return (lsq + xsq * pot - DunklElement.one()) * quarter

    out["printed-a"] = a - printed(1, 2, 3)
    out["printed-b"] = b - printed(2, 3, 1)
    out["printed-c"] = c - printed(3, 1, 2)
    for name, op in (("a", a), ("b", b), ("c", c)):
        for i in (1, 2, 3):
            out[f"reflection-{name}-r{i}"] = commutator(op, DunklElement.r(i))
    # central lambdas built from the parameters and reflections
    lams = []
    for i in (1, 2, 3):
        mu = mu_symbol(i)
        lam = (
            DunklElement.const(mu * mu)
            - DunklElement.r(i) * mu
            - DunklElement.const(Scalar("3/4"))
        ) * quarter
        lams.append(lam)
    lam4 = (osp12_hamiltonian() - Scalar("3/4")) * quarter
    for idx, lam in enumerate((*lams, lam4), start=1):
        for name, op in (("a", a), ("b", b), ("c", c)):
            out[f"central-lam{idx}-{name}"] = commutator(op, lam)
    out.update(
        {
            f"quadratic-{k}": v
            for k, v in _racah2_residuals(a, b, c, *lams, lam4).items()
        }
    )
    # substitution identity (mu_i - R_i/2)^2 - 1/4 = mu_i (mu_i - R_i)
    for i in (1, 2, 3):
        mu = mu_symbol(i)
        k_op = DunklElement.const(mu) - DunklElement.r(i) * Scalar("1/2")
        out[f"substitution-{i}"] = (
            k_op * k_op
            - DunklElement.const(Scalar("1/4"))
            - (DunklElement.const(mu * mu) - DunklElement.r(i) * mu)
        )
    return out
