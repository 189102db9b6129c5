"""PBW-style normal forms for the abstract Racah and Bannai-Ito algebras.

Both algebras are presented by an ordered generator triple and rewrite rules
that reorder each out-of-order adjacent pair.  Elements are sparse maps from
ordered monomials kappa1^a kappa2^b kappa3^c (resp. X^a Y^b Z^c) to
polynomial coefficients in the structure symbols; keeping the symbols
unspecialized makes every verified identity a proof for all parameter values.
"""

from __future__ import annotations

from .errors import MixedAlgebras, RewriteLimitExceeded, UnknownGenerator
from .polynomials import ParamPoly
from .scalars import Scalar

DEFAULT_STEP_LIMIT = 5_000_000

RACAH_GENS = ("k1", "k2", "k3")
BI_GENS = ("X", "Y", "Z")

RACAH_CONSTANTS = ("a1", "a2", "c1", "c2", "d", "e1", "e2")
BI_CONSTANTS = ("wX", "wY", "wZ")


class RewriteSystem:
    """Ordered generators plus reduction rules for out-of-order pairs.

    Each rule maps the length-2 word (hi, lo) with hi > lo to a list of
    (replacement word, coefficient) pairs.  Every replacement word is no
    longer than 2, so rewriting strictly decreases the (degree, inversion
    count) measure and terminates.
    """

    def __init__(self, name, gens, rules, constants):
        self.name = name
        self.gens = tuple(gens)
        self.rules = rules
        self.constants = dict(constants)
        self._push_cache = {}

    # -- public ops ---------------------------------------------------
    def normalize_word(self, word, coeff=1, step_limit=DEFAULT_STEP_LIMIT):
        """Normal form of a single word by rule rewriting.

        Returns (terms, steps): the sparse monomial map and the number of
        rule applications performed.  Like terms are merged and words are
        reduced in strictly decreasing (length, word) order; every rule
        output is strictly smaller in that order, so each distinct word is
        rewritten at most once and the step count is finite by construction.
        """
        import heapq

        for g in word:
            if g not in self.gens:
                raise UnknownGenerator(f"{g!r} not in {self.gens}")
        idx = tuple(self.gens.index(g) for g in word)

        def heap_key(w):
            # max-order on (length, lex) via negation
            return (-len(w), tuple(-g for g in w))

        pending = {idx: ParamPoly.coerce(coeff)}
        heap = [heap_key(idx)]
        queued = {idx}
        out = {}
        steps = 0
        while heap:
            key = heapq.heappop(heap)
            w = tuple(-g for g in key[1])
            queued.discard(w)
            c = pending.pop(w, None)
            if c is None or c.is_zero:
                continue
            pos = next((i for i in range(len(w) - 1) if w[i] > w[i + 1]), None)
            if pos is None:
                acc = out.get(self._word_to_exps(w), ParamPoly.const(0)) + c
                key2 = self._word_to_exps(w)
                if acc.is_zero:
                    out.pop(key2, None)
                else:
                    out[key2] = acc
                continue
            steps += 1
            if steps > step_limit:
                raise RewriteLimitExceeded(f"exceeded {step_limit} rewrite steps")
            for seg, rc in self.rules[(w[pos], w[pos + 1])]:
                nw = w[:pos] + seg + w[pos + 2:]
                acc = pending.get(nw, ParamPoly.const(0)) + c * rc
                if acc.is_zero:
                    pending.pop(nw, None)
                else:
                    pending[nw] = acc
                    if nw not in queued:
                        heapq.heappush(heap, heap_key(nw))
                        queued.add(nw)
        return out, steps

    def _word_to_exps(self, w):
        exps = [0, 0, 0]
        for g in w:
            exps[g] += 1
        return tuple(exps)

    # -- fast monomial-times-generator push with memoization ----------
    def push_gen(self, mono, g):
        """Normal form of (ordered monomial) * generator g, as a term map."""
        key = (mono, g)
        hit = self._push_cache.get(key)
        if hit is not None:
            return hit
        a, b, c = mono
        if g == 2:
            out = {(a, b, c + 1): ParamPoly.const(1)}
        elif g == 1 and c == 0:
            out = {(a, b + 1, 0): ParamPoly.const(1)}
        elif g == 0 and b == 0 and c == 0:
            out = {(a + 1, 0, 0): ParamPoly.const(1)}
        else:
            # peel the innermost out-of-order pair and recurse
            if c > 0:
                base = (a, b, c - 1)
                rule = self.rules[(2, g)]
            else:  # c == 0, b > 0, g == 0
                base = (a, b - 1, 0)
                rule = self.rules[(1, 0)]
            out = {}
            for seg, rc in rule:
                terms = {base: rc}
                for h in seg:
                    terms = self._push_terms(terms, h)
                _accumulate(out, terms)
        out = {m: p for m, p in out.items() if not p.is_zero}
        self._push_cache[key] = out
        return out

    def _push_terms(self, terms, g):
        out = {}
        for mono, coeff in terms.items():
            for m2, c2 in self.push_gen(mono, g).items():
                acc = out.get(m2)
                prod = coeff * c2
                acc = prod if acc is None else acc + prod
                if acc.is_zero:
                    out.pop(m2, None)
                else:
                    out[m2] = acc
        return out

    def mul_monomials(self, m1, m2):
        """Normal form of the product of two ordered monomials."""
        terms = {m1: ParamPoly.const(1)}
        for g, e in enumerate(m2):
            for _ in range(e):
                terms = self._push_terms(terms, g)
        return terms


def _accumulate(target, source, scale=None):
    for mono, coeff in source.items():
        if scale is not None:
            coeff = coeff * scale
        acc = target.get(mono)
        acc = coeff if acc is None else acc + coeff
        if acc.is_zero:
            target.pop(mono, None)
        else:
            target[mono] = acc


def racah_system(constants=None) -> RewriteSystem:
    """The quadratic algebra on kappa1 < kappa2 < kappa3.

    Rules transcribe [k1,k2] = k3, [k2,k3] = a2 k2^2 + a1 {k1,k2} + c1 k1
    + d k2 + e1 and [k3,k1] = a1 k1^2 + a2 {k1,k2} + c2 k2 + d k1 + e2.
    """
    cs = {n: ParamPoly.var(n) for n in RACAH_CONSTANTS}
    if constants:
        for n, v in constants.items():
            if n not in cs:
                raise KeyError(f"unknown structure constant {n}")
            cs[n] = ParamPoly.coerce(v)
    one = ParamPoly.const(1)
    rules = {
        # k2 k1 = k1 k2 - k3
        (1, 0): [((0, 1), one), ((2,), ParamPoly.const(-1))],
        # k3 k1 = k1 k3 + a1 k1^2 + a2 (k1 k2 + k2 k1) + c2 k2 + d k1 + e2
        (2, 0): [
            ((0, 2), one),
            ((0, 0), cs["a1"]),
            ((0, 1), cs["a2"]),
            ((1, 0), cs["a2"]),
            ((1,), cs["c2"]),
            ((0,), cs["d"]),
            ((), cs["e2"]),
        ],
        # k3 k2 = k2 k3 - a2 k2^2 - a1 (k1 k2 + k2 k1) - c1 k1 - d k2 - e1
        (2, 1): [
            ((1, 2), one),
            ((1, 1), -cs["a2"]),
            ((0, 1), -cs["a1"]),
            ((1, 0), -cs["a1"]),
            ((0,), -cs["c1"]),
            ((1,), -cs["d"]),
            ((), -cs["e1"]),
        ],
    }
    return RewriteSystem("racah", RACAH_GENS, rules, cs)


def bi_system(constants=None) -> RewriteSystem:
    """The Bannai-Ito algebra on X < Y < Z.

    Rules transcribe {X,Y} = Z + wZ, {Y,Z} = X + wX, {Z,X} = Y + wY.
    """
    cs = {n: ParamPoly.var(n) for n in BI_CONSTANTS}
    if constants:
        for n, v in constants.items():
            if n not in cs:
                raise KeyError(f"unknown structure constant {n}")
            cs[n] = ParamPoly.coerce(v)
    minus = ParamPoly.const(-1)
    one = ParamPoly.const(1)
    rules = {
        (1, 0): [((0, 1), minus), ((2,), one), ((), cs["wZ"])],
        (2, 0): [((0, 2), minus), ((1,), one), ((), cs["wY"])],
        (2, 1): [((1, 2), minus), ((0,), one), ((), cs["wX"])],
    }
    return RewriteSystem("bi", BI_GENS, rules, cs)


class PbwElement:
    """Linear combination of ordered generator monomials."""

    __slots__ = ("system", "terms")

    def __init__(self, system, terms=None):
        clean = {}
        for mono, coeff in (terms or {}).items():
            coeff = ParamPoly.coerce(coeff)
            if not coeff.is_zero:
                clean[tuple(mono)] = coeff
        object.__setattr__(self, "system", system)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("PbwElement is immutable")

    # -- constructors -------------------------------------------------
    @staticmethod
    def generator(system, name) -> "PbwElement":
        if name not in system.gens:
            raise UnknownGenerator(name)
        exps = [0, 0, 0]
        exps[system.gens.index(name)] = 1
        return PbwElement(system, {tuple(exps): ParamPoly.const(1)})

    @staticmethod
    def one(system) -> "PbwElement":
        return PbwElement(system, {(0, 0, 0): ParamPoly.const(1)})

    @staticmethod
    def const(system, value) -> "PbwElement":
        return PbwElement(system, {(0, 0, 0): ParamPoly.coerce(value)})

    # -- structure ----------------------------------------------------
    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=0)

    def _check(self, other):
        if self.system is not other.system:
            raise MixedAlgebras(
                f"cannot mix {self.system.name} and {other.system.name} elements"
            )

    def coerce(self, other) -> "PbwElement":
        if isinstance(other, PbwElement):
            self._check(other)
            return other
        return PbwElement.const(self.system, other)

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other):
        other = self.coerce(other)
        out = dict(self.terms)
        _accumulate(out, other.terms)
        return PbwElement(self.system, out)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self.coerce(other))

    def __rsub__(self, other):
        return self.coerce(other) - self

    def __neg__(self):
        return PbwElement(
            self.system, {m: -c for m, c in self.terms.items()}
        )

    def __mul__(self, other):
        if isinstance(other, (int, Scalar, ParamPoly)) or type(other).__name__ in (
            "mpq",
            "Fraction",
        ):
            coeff = ParamPoly.coerce(other)
            return PbwElement(
                self.system, {m: c * coeff for m, c in self.terms.items()}
            )
        other = self.coerce(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                _accumulate(out, self.system.mul_monomials(m1, m2), c1 * c2)
        return PbwElement(self.system, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Scalar, ParamPoly)) or type(other).__name__ in (
            "mpq",
            "Fraction",
        ):
            return self * other
        return self.coerce(other) * self

    def __pow__(self, n: int):
        out = PbwElement.one(self.system)
        for _ in range(n):
            out = out * self
        return out

    # -- comparison ---------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, PbwElement):
            return NotImplemented
        return self.system is other.system and self.terms == other.terms

    def __hash__(self):
        return hash((id(self.system), frozenset(self.terms.items())))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms, key=lambda m: (sum(m), m), reverse=True):
            coeff = self.terms[mono]
            word = "*".join(
                g if e == 1 else f"{g}^{e}"
                for g, e in zip(self.system.gens, mono)
                if e
            )
            cs = str(coeff)
            if " " in cs or "+" in cs[1:]:
                cs = f"({cs})"
            parts.append(f"{cs}*{word}" if word and cs != "1" else (word or cs))
        return " + ".join(parts)

    def __repr__(self):
        return f"PbwElement({self})"


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------

def pbw_normal_form(system, word, coeff=1, step_limit=DEFAULT_STEP_LIMIT):
    """Normal form of a generator word with coefficient, as a PbwElement."""
    terms, _ = system.normalize_word(word, coeff, step_limit)
    return PbwElement(system, terms)


def bracket(x: PbwElement, y: PbwElement, kind="commutator") -> PbwElement:
    x._check(y)
    if kind == "commutator":
        return x * y - y * x
    if kind == "anticommutator":
        return x * y + y * x
    raise ValueError(f"unknown bracket kind {kind!r}")


def is_central(x: PbwElement):
    """(centrality, witnesses): nonzero commutators with the generators."""
    witnesses = {}
    for name in x.system.gens:
        g = PbwElement.generator(x.system, name)
        res = bracket(x, g)
        if not res.is_zero:
            witnesses[name] = res
    return not witnesses, witnesses


def verify_identity(lhs: PbwElement, rhs: PbwElement):
    """(pass, residual): residual is the normal form of lhs - rhs."""
    residual = lhs - rhs
    return residual.is_zero, residual


def racah_casimir(system: RewriteSystem) -> PbwElement:
    """The central element of the quadratic kappa-algebra."""
    cs = system.constants
    k1 = PbwElement.generator(system, "k1")
    k2 = PbwElement.generator(system, "k2")
    k3 = PbwElement.generator(system, "k3")
    acomm = lambda a, b: bracket(a, b, "anticommutator")
    t = (
        acomm(k1 * k1, k2) * cs["a1"]
        + acomm(k1, k2 * k2) * cs["a2"]
        + k1 * k1 * (cs["a1"] * cs["a1"] + cs["c1"])
        + k2 * k2 * (cs["a2"] * cs["a2"] + cs["c2"])
        + k3 * k3
        + acomm(k1, k2) * (cs["d"] + cs["a1"] * cs["a2"])
        + k1 * (cs["e1"] * 2 + cs["d"] * cs["a1"])
        + k2 * (cs["e2"] * 2 + cs["d"] * cs["a2"])
    )
    return t


def bi_casimir(system: RewriteSystem) -> PbwElement:
    """X^2 + Y^2 + Z^2."""
    x = PbwElement.generator(system, "X")
    y = PbwElement.generator(system, "Y")
    z = PbwElement.generator(system, "Z")
    return x * x + y * y + z * z


def build_quadratic_embedding(system=None):
    """Quadratic combinations of the BI generators realizing the equitable
    Racah algebra extended by the central element I.

    Returns a dict with A, B, C, I, Delta as PbwElements of the BI algebra.
    """
    if system is None:
        system = bi_system()
    if system.name != "bi":
        raise MixedAlgebras("the quadratic embedding lives in the BI algebra")
    quarter = Scalar("1/4")
    out = {}
    for gen, label in (("X", "A"), ("Y", "B"), ("Z", "C")):
        g = PbwElement.generator(system, gen)
        out[label] = (g * g - g - Scalar("3/4")) * quarter
    x = PbwElement.generator(system, "X")
    y = PbwElement.generator(system, "Y")
    z = PbwElement.generator(system, "Z")
    out["I"] = x + y + z - Scalar("3/2")
    out["Delta"] = bracket(out["A"], out["B"]) * Scalar("1/2")
    return out


def quadratic_embedding_residuals(system=None):
    """Residuals of every quadratic-embedding identity, fully symbolic.

    Keys identify the identity; all values must be the zero element.
    """
    if system is None:
        system = bi_system()
    cs = system.constants
    emb = build_quadratic_embedding(system)
    a, b, c, i_el, delta = emb["A"], emb["B"], emb["C"], emb["I"], emb["Delta"]
    u = bi_casimir(system)
    two_delta = delta * 2
    res = {
        "cyclic-ab": bracket(a, b) - two_delta,
        "cyclic-bc": bracket(b, c) - two_delta,
        "cyclic-ca": bracket(c, a) - two_delta,
        "sum-rule": (a + b + c) - (u - i_el - Scalar("15/4")) * Scalar("1/4"),
        "central-ia": bracket(a, i_el),
        "central-ib": bracket(b, i_el),
        "central-ic": bracket(c, i_el),
    }
    sixteenth = Scalar("1/16")
    half = Scalar("1/2")
    one = PbwElement.one(system)
    triples = (
        ("rel-a", a, delta, b * a - a * c, cs["wY"], cs["wZ"]),
        ("rel-b", b, delta, c * b - b * a, cs["wZ"], cs["wX"]),
        ("rel-c", c, delta, a * c - c * b, cs["wX"], cs["wY"]),
    )
    for key, lhs_op, dlt, quad, w1, w2 in triples:
        extra = (
            one * ((w1 - w2) * half) * sixteenth * (one * ((w1 + w2) * half) - i_el)
        )
        res[key] = bracket(lhs_op, dlt) - (quad + extra)
    return res


def random_element(system, rng, max_degree=3, nterms=3) -> PbwElement:
    """Random small element with integer coefficients, for property tests."""
    terms = {}
    for _ in range(nterms):
        mono = [0, 0, 0]
        for _ in range(rng.randint(0, max_degree)):
            mono[rng.randrange(3)] += 1
        coeff = rng.randint(-4, 4)
        if coeff:
            key = tuple(mono)
            terms[key] = terms.get(key, ParamPoly.const(0)) + ParamPoly.const(coeff)
    return PbwElement(system, terms)
