"""Command-line verification driver.

Selects a suite of exact identity checks, runs it, and emits a
deterministic certificate: JSON for machines (byte-identical across runs
with the same configuration) or one line per check for humans.  Exit code
0 means every check passed, 1 means at least one failed, 2 means the
configuration was unusable.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time
from dataclasses import dataclass, field

from . import bispectral as bisp
from . import dunkl
from . import pbw
from . import shiftops as sho
from .errors import UnknownSuite
from .polynomials import ParamPoly
from .scalars import Scalar

SUITES = (
    "racah-abstract",
    "bi-abstract",
    "embedding-abstract",
    "racah-standard",
    "bi-standard",
    "embedding-standard",
    "bispectral",
    "su11",
    "osp12",
    "racah-problem",
    "bi-problem",
    "embedding-dunkl",
)

_NAME_MAP = {
    "ρ1": "rho1", "ρ2": "rho2", "α": "alpha", "β": "beta",
    "γ": "gamma", "δ": "delta", "μ1": "mu1", "μ2": "mu2", "μ3": "mu3",
    "ωX": "wX", "ωY": "wY", "ωZ": "wZ",
}

_RESIDUAL_LIMIT = 400


@dataclass(frozen=True)
class CheckReport:
    """One verified identity with its outcome."""

    check_id: str
    statement: str
    anchor: str
    params: dict
    status: str  # pass | fail | error
    residual: str
    elapsed_ms: int


@dataclass
class SuiteConfig:
    suite: str = "all"
    params: dict = field(default_factory=dict)  # name -> "p/q" or "symbolic"
    degree: int = 6
    seed: int = 0
    trials: int = 50
    out: str | None = None
    format: str = "text"


def parse_config(argv=None) -> SuiteConfig:
    """Parse flags (and an optional key=value config file; flags win)."""
    parser = argparse.ArgumentParser(
        prog="biracah-verify",
        description="Run exact verification suites and emit certificates.",
    )
    parser.add_argument("--suite", default=None)
    parser.add_argument("--params", default=None, metavar="k=v[,k=v...]")
    parser.add_argument("--degree", type=int, default=None, metavar="M")
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--trials", type=int, default=None)
    parser.add_argument("--out", default=None, metavar="PATH")
    parser.add_argument("--format", default=None, choices=("json", "text"))
    parser.add_argument("--config", default=None, metavar="FILE")
    args = parser.parse_args(argv)

    values = {}
    if args.config:
        with open(args.config, "r", encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                if "=" not in line:
                    raise ValueError(f"bad config line: {line!r}")
                key, _, val = line.partition("=")
                values[key.strip()] = val.strip()
    for key in ("suite", "params", "degree", "seed", "trials", "out", "format"):
        flag = getattr(args, key)
        if flag is not None:
            values[key] = flag

    cfg = SuiteConfig()
    cfg.suite = str(values.get("suite", cfg.suite))
    cfg.degree = int(values.get("degree", cfg.degree))
    cfg.seed = int(values.get("seed", cfg.seed))
    cfg.trials = int(values.get("trials", cfg.trials))
    cfg.out = values.get("out")
    cfg.format = str(values.get("format", cfg.format))
    if cfg.format not in ("json", "text"):
        raise ValueError(f"unknown format {cfg.format!r}")
    raw = values.get("params")
    if raw:
        for item in str(raw).split(","):
            item = item.strip()
            if not item:
                continue
            if "=" not in item:
                raise ValueError(f"bad parameter {item!r}")
            name, _, val = item.partition("=")
            name = _NAME_MAP.get(name.strip(), name.strip())
            cfg.params[name] = val.strip()
    if cfg.suite != "all" and cfg.suite not in SUITES:
        raise UnknownSuite(f"unknown suite {cfg.suite!r}")
    return cfg


def _shown_params(cfg: SuiteConfig, names):
    return {name: cfg.params.get(name, "symbolic") for name in names}


def _parse_params(cfg: SuiteConfig, names):
    """ParamPoly values for the requested names; symbolic entries omitted.

    Raises ValueError on unparsable values, so callers inside per-check
    thunks report the failure as status "error".
    """
    out = {}
    for name in names:
        val = cfg.params.get(name, "symbolic")
        if val == "symbolic":
            continue
        try:
            out[name] = ParamPoly.const(Scalar(val))
        except Exception as exc:
            raise ValueError(f"bad value for {name}: {val!r} ({exc})") from exc
    return out


class _Recorder:
    def __init__(self):
        self.reports = []

    def check(self, check_id, statement, anchor, params, thunk):
        t0 = time.perf_counter()
        try:
            ok, residual = thunk()
            status = "pass" if ok else "fail"
        except Exception as exc:
            status, residual = "error", f"{type(exc).__name__}: {exc}"
        ms = int((time.perf_counter() - t0) * 1000)
        if len(residual) > _RESIDUAL_LIMIT:
            residual = residual[:_RESIDUAL_LIMIT] + "..."
        self.reports.append(
            CheckReport(
                check_id, statement, anchor,
                {k: str(v) for k, v in (params or {}).items()},
                status, residual, ms,
            )
        )


def _resid(element):
    return element.is_zero, "" if element.is_zero else str(element)


class _Lazy:
    """Compute a residual dictionary once, on first use."""

    def __init__(self, fn):
        self.fn = fn
        self.value = None

    def __call__(self):
        if self.value is None:
            self.value = self.fn()
        return self.value


# ---------------------------------------------------------------------------
# Suites
# ---------------------------------------------------------------------------

def _suite_racah_abstract(cfg, rec):
    system = pbw.racah_system()
    casimir = pbw.racah_casimir(system)
    for gen in ("k1", "k2", "k3"):
        rec.check(
            f"racah.casimir.central-{gen}",
            f"[T, {gen}] normalizes to zero with symbolic constants",
            "pbw-normal-form",
            {},
            lambda gen=gen: _resid(
                pbw.bracket(casimir, pbw.PbwElement.generator(system, gen))
            ),
        )
    rec.check(
        "racah.engine.associativity",
        "(xy)z = x(yz) for random elements in the quadratic algebra",
        "engine-health",
        {"trials": cfg.trials, "seed": cfg.seed},
        lambda: _pbw_associativity(system, cfg),
    )


def _suite_bi_abstract(cfg, rec):
    system = pbw.bi_system()
    casimir = pbw.bi_casimir(system)
    cs = system.constants
    pairs = (("xy", "X", "Y", "wZ", "Z"), ("yz", "Y", "Z", "wX", "X"),
             ("zx", "Z", "X", "wY", "Y"))
    for tag, g1, g2, w, g3 in pairs:
        def thunk(g1=g1, g2=g2, w=w, g3=g3):
            a = pbw.PbwElement.generator(system, g1)
            b = pbw.PbwElement.generator(system, g2)
            c = pbw.PbwElement.generator(system, g3)
            return _resid(pbw.bracket(a, b, "anticommutator") - c - pbw.PbwElement.one(system) * cs[w])
        rec.check(
            f"bi.relations.anticomm-{tag}",
            f"{{{g1},{g2}}} = {g3} + {w} with symbolic structure constants",
            "pbw-normal-form", {}, thunk,
        )
    for gen in ("X", "Y", "Z"):
        rec.check(
            f"bi.casimir.central-{gen.lower()}",
            f"[U, {gen}] normalizes to zero with symbolic constants",
            "pbw-normal-form",
            {},
            lambda gen=gen: _resid(
                pbw.bracket(casimir, pbw.PbwElement.generator(system, gen))
            ),
        )
    rec.check(
        "bi.engine.associativity",
        "(xy)z = x(yz) for random elements of the anticommutator algebra",
        "engine-health",
        {"trials": cfg.trials, "seed": cfg.seed},
        lambda: _pbw_associativity(system, cfg),
    )


def _pbw_associativity(system, cfg):
    rng = random.Random(cfg.seed)
    for _ in range(cfg.trials):
        x = pbw.random_element(system, rng, max_degree=2)
        y = pbw.random_element(system, rng, max_degree=2)
        z = pbw.random_element(system, rng, max_degree=2)
        res = (x * y) * z - x * (y * z)
        if not res.is_zero:
            return False, str(res)
    return True, ""


def _suite_embedding_abstract(cfg, rec):
    cache = _Lazy(pbw.quadratic_embedding_residuals)
    statements = {
        "cyclic-ab": "[A,B] = 2*Delta",
        "cyclic-bc": "[B,C] = 2*Delta",
        "cyclic-ca": "[C,A] = 2*Delta",
        "sum-rule": "A + B + C = (U - I - 15/4)/4",
        "central-ia": "[A, I] = 0",
        "central-ib": "[B, I] = 0",
        "central-ic": "[C, I] = 0",
        "rel-a": "[A,Delta] = BA - AC + correction(wY, wZ; I)",
        "rel-b": "[B,Delta] = CB - BA + correction(wZ, wX; I)",
        "rel-c": "[C,Delta] = AC - CB + correction(wX, wY; I)",
    }
    for key, statement in statements.items():
        rec.check(
            f"embedding.abstract.{key}", statement, "quadratic-embedding",
            {}, lambda key=key: _resid(cache()[key]),
        )


def _suite_racah_standard(cfg, rec):
    names = ("alpha", "beta", "gamma", "delta")
    shown = _shown_params(cfg, names)
    cache = _Lazy(
        lambda: sho.build_standard_racah(_parse_params(cfg, names) or None)
    )

    def fit_thunk():
        fitted = sho.fit_structure_constants("racah", cache())
        text = ", ".join(f"{k}={v}" for k, v in sorted(fitted.items()))
        return True, text

    rec.check(
        "racah.standard.fit",
        "the difference realization satisfies the defining relations with"
        " uniquely fitted constants (zero residual)",
        "difference-operators", shown, fit_thunk,
    )

    def scalar_thunk():
        value = sho.casimir_scalar("racah", cache())
        return True, str(value)

    rec.check(
        "racah.casimir.scalar",
        "the Casimir acts as a multiple of the identity",
        "difference-operators", shown, scalar_thunk,
    )
    rec.check(
        "racah.engine.operator-associativity",
        "(fg)h = f(gh) for random shift operators",
        "engine-health",
        {"trials": cfg.trials, "seed": cfg.seed},
        lambda: _operator_associativity(cfg),
    )


def _operator_associativity(cfg):
    rng = random.Random(cfg.seed)
    var = "v"
    vp = ParamPoly.var(var)
    for _ in range(cfg.trials):
        ops = []
        for _ in range(3):
            terms = {}
            for _ in range(rng.randint(1, 3)):
                key = (rng.randint(-2, 2), rng.randint(0, 1))
                coeff = vp * rng.randint(-3, 3) + rng.randint(-3, 3)
                terms[key] = terms.get(key, ParamPoly.const(0)) + coeff
            ops.append(sho.ShiftReflectionOperator(var, terms))
        f, g, h = ops
        res = (f * g) * h - f * (g * h)
        if not res.is_zero:
            return False, str(res)
    return True, ""


def _suite_bi_standard(cfg, rec):
    names = ("rho1", "rho2", "r1", "r2")
    shown = _shown_params(cfg, names)
    ops_cache = _Lazy(
        lambda: sho.build_standard_bi(_parse_params(cfg, names) or None)
    )
    printed_cache = _Lazy(
        lambda: sho.bi_structure_polys(_parse_params(cfg, names) or None)
    )

    def fitted():
        return sho.fit_structure_constants("bi", ops_cache())

    def statement_value(key):
        try:
            return str(printed_cache()[key])
        except ValueError:
            return "(unparsable parameters)"

    for name in ("wX", "wY", "wZ"):
        rec.check(
            f"bi.standard.fit-{name.lower()}",
            f"the anticommutator defect equals {name} ="
            f" {statement_value(name)} exactly",
            "dunkl-shift-operators", shown,
            lambda name=name: _poly_match(fitted()[name], printed_cache()[name]),
        )
    rec.check(
        "bi.casimir.scalar",
        f"X^2+Y^2+Z^2 is the scalar {statement_value('u')}",
        "dunkl-shift-operators", shown,
        lambda: _poly_match(
            sho.casimir_scalar("bi", ops_cache()), printed_cache()["u"]
        ),
    )


def _poly_match(found, expected):
    diff = found - expected
    return diff.is_zero, "" if diff.is_zero else f"found {found}, expected {expected}"


def _suite_embedding_standard(cfg, rec):
    names = ("rho1", "rho2", "r1", "r2")
    shown = _shown_params(cfg, names)
    cache = _Lazy(
        lambda: sho.quadratic_embedding_operator_residuals(
            params=_parse_params(cfg, names) or None
        )
    )
    statements = {
        "cyclic-ab": "[A,B] = 2*Delta for the operator realization",
        "cyclic-bc": "[B,C] = 2*Delta for the operator realization",
        "cyclic-ca": "[C,A] = 2*Delta for the operator realization",
        "sum-rule": "A + B + C = (u - I - 15/4)/4 with the scalar Casimir value",
        "central-ia": "[A, I] = 0",
        "central-ib": "[B, I] = 0",
        "central-ic": "[C, I] = 0",
        "rel-a": "[A,Delta] identity with explicit structure polynomials",
        "rel-b": "[B,Delta] identity with explicit structure polynomials",
        "rel-c": "[C,Delta] identity with explicit structure polynomials",
    }
    for key, statement in statements.items():
        rec.check(
            f"embedding.standard.{key}", statement, "quadratic-embedding",
            shown, lambda key=key: _resid(cache()[key]),
        )


def _suite_bispectral(cfg, rec):
    trials = max(1, min(cfg.trials, 10))
    for realization in ("racah", "bi"):
        def thunk(realization=realization):
            rng = random.Random(cfg.seed)
            done = bisp.bispectral_suite(realization, cfg.degree, rng, trials)
            return True, f"{len(done)} parameter sets certified"

        rec.check(
            f"bispectral.{realization}.tridiagonal",
            f"multiplication operator is exactly tridiagonal on the"
            f" eigenbasis, basis size {cfg.degree}, {trials} random parameter sets",
            "bispectrality",
            {"degree": cfg.degree, "trials": trials, "seed": cfg.seed},
            thunk,
        )
    if cfg.out and os.path.isdir(cfg.out):
        _dump_bispectral_csvs(cfg)


_CSV_PARAMS = {
    "racah": {"alpha": "1/3", "beta": "1/5", "gamma": "1/7", "delta": "1/11"},
    "bi": {"rho1": "1", "rho2": "3/2", "r1": "1/2", "r2": "2"},
}


def _dump_bispectral_csvs(cfg):
    for realization, defaults in _CSV_PARAMS.items():
        names = tuple(defaults)
        params = {
            name: ParamPoly.const(Scalar(cfg.params.get(name, defaults[name])))
            for name in names
            if cfg.params.get(name, defaults[name]) != "symbolic"
        }
        result = bisp.bispectral_matrices(realization, cfg.degree, params)
        basis = "lambda-powers" if realization == "racah" else "monomials"
        bisp.dump_matrix_csv(
            result["triangular"],
            os.path.join(cfg.out, f"{realization}_triangular.csv"), basis,
        )
        bisp.dump_matrix_csv(
            result["mult"],
            os.path.join(cfg.out, f"{realization}_mult.csv"), "eigenvectors",
        )


def _suite_su11(cfg, rec):
    cache = _Lazy(lambda: dunkl.verify_su11_single(1))
    for key in ("comm-k0-kp", "comm-k0-km", "comm-km-kp", "casimir-value"):
        rec.check(
            f"su11.single.{key}",
            f"single-variable relation {key} holds with symbolic g",
            "differential-reflection", {},
            lambda key=key: _resid(cache()[key]),
        )
    coassoc = _Lazy(dunkl.verify_coassociativity)
    for gen in ("K0", "K+", "K-"):
        rec.check(
            f"su11.coproduct.coassoc-{gen.lower().replace('+', 'p').replace('-', 'm')}",
            f"(1 x Delta)Delta = (Delta x 1)Delta on {gen}",
            "coproduct", {},
            lambda gen=gen: _resid(coassoc()[f"su11-{gen}"]),
        )


def _suite_osp12(cfg, rec):
    single = _Lazy(lambda: dunkl.verify_osp12_single(1))
    for key in (
        "comm-a0-ap", "comm-a0-am", "acomm-ap-am", "comm-a0-p",
        "acomm-ap-p", "acomm-am-p", "involution",
        "even-comm-a0-jp", "even-comm-a0-jm", "even-comm-jm-jp",
        "casimir-value", "scasimir-value",
    ):
        rec.check(
            f"osp12.single.{key}",
            f"single-variable relation {key} holds with symbolic mu",
            "differential-reflection", {},
            lambda key=key: _resid(single()[key]),
        )
    scas = _Lazy(lambda: dunkl.verify_scasimir_relations(1))
    for key in (
        "acomm-s-ap", "acomm-s-am", "comm-s-a0",
        "quadratic-link", "even-casimir-value",
    ):
        rec.check(
            f"osp12.scasimir.{key}",
            f"sCasimir relation {key} holds with symbolic mu",
            "differential-reflection", {},
            lambda key=key: _resid(scas()[key]),
        )
    coassoc = _Lazy(dunkl.verify_coassociativity)
    for gen in ("A+", "A-", "A0", "P"):
        tag = gen.lower().replace("+", "p").replace("-", "m")
        rec.check(
            f"osp12.coproduct.coassoc-{tag}",
            f"(1 x Delta)Delta = (Delta x 1)Delta on {gen}",
            "coproduct", {},
            lambda gen=gen: _resid(coassoc()[f"osp12-{gen}"]),
        )


def _suite_racah_problem(cfg, rec):
    cache = _Lazy(dunkl.verify_racah_problem)
    for key in (
        "cyclic-ab-bc", "cyclic-bc-ca", "rel-a", "rel-b", "rel-c",
        "central-c4-a", "central-c4-b", "central-c4-c",
        "printed-a", "printed-b", "printed-c",
    ):
        rec.check(
            f"racah.problem.{key}",
            f"three-fold intermediate-Casimir relation {key}",
            "intermediate-casimirs", {},
            lambda key=key: _resid(cache()[key]),
        )
    totals = _Lazy(dunkl.verify_total_casimirs)
    for key, cid in (
        ("su-total-vs-hamiltonian", "total-casimir"),
        ("su-initial-1", "initial-1"),
        ("su-initial-2", "initial-2"),
        ("su-initial-3", "initial-3"),
    ):
        rec.check(
            f"racah.problem.{cid}",
            f"total/initial Casimir identification {key}",
            "intermediate-casimirs", {},
            lambda key=key: _resid(totals()[key]),
        )


def _suite_bi_problem(cfg, rec):
    cache = _Lazy(dunkl.verify_bi_problem)
    for key in (
        "acomm-xy", "acomm-yz", "acomm-zx",
        "central-q4-x", "central-q4-y", "central-q4-z",
        "printed-x", "printed-y", "printed-z", "casimir-printed",
    ):
        rec.check(
            f"bi.problem.{key}",
            f"three-fold intermediate-Casimir relation {key}",
            "intermediate-casimirs", {},
            lambda key=key: _resid(cache()[key]),
        )
    totals = _Lazy(dunkl.verify_total_casimirs)
    for key, cid in (
        ("osp-supercharge-square", "supercharge-square"),
        ("osp-s4-identity", "s4-identity"),
        ("osp-initial-1", "initial-1"),
        ("osp-initial-2", "initial-2"),
        ("osp-initial-3", "initial-3"),
    ):
        rec.check(
            f"bi.problem.{cid}",
            f"total/initial Casimir identification {key}",
            "intermediate-casimirs", {},
            lambda key=key: _resid(totals()[key]),
        )


def _suite_embedding_dunkl(cfg, rec):
    cache = _Lazy(dunkl.verify_dunkl_embedding)
    keys = (
        ["printed-a", "printed-b", "printed-c"]
        + [f"reflection-{n}-r{i}" for n in "abc" for i in (1, 2, 3)]
        + [f"central-lam{i}-{n}" for i in (1, 2, 3, 4) for n in "abc"]
        + [f"quadratic-{k}" for k in (
            "cyclic-ab-bc", "cyclic-bc-ca", "rel-a", "rel-b", "rel-c")]
        + [f"substitution-{i}" for i in (1, 2, 3)]
    )
    for key in keys:
        rec.check(
            f"embedding.dunkl.{key}",
            f"reflection-valued embedding identity {key}",
            "dunkl-calculus", {},
            lambda key=key: _resid(cache()[key]),
        )
    rec.check(
        "embedding.dunkl.engine-associativity",
        "(xy)z = x(yz) for random normal-ordered words",
        "engine-health",
        {"trials": cfg.trials, "seed": cfg.seed},
        lambda: _dunkl_associativity(cfg),
    )


def _dunkl_associativity(cfg):
    rng = random.Random(cfg.seed)
    for _ in range(cfg.trials):
        elems = []
        for _ in range(3):
            terms = {}
            for _ in range(rng.randint(1, 3)):
                key = tuple(
                    [rng.randint(-2, 2) for _ in range(3)]
                    + [rng.randint(0, 2) for _ in range(3)]
                    + [rng.randint(0, 1) for _ in range(3)]
                )
                terms[key] = ParamPoly.const(rng.randint(-3, 3))
            elems.append(dunkl.DunklElement(terms))
        x, y, z = elems
        res = (x * y) * z - x * (y * z)
        if not res.is_zero:
            return False, str(res)
    return True, ""


_SUITE_RUNNERS = {
    "racah-abstract": _suite_racah_abstract,
    "bi-abstract": _suite_bi_abstract,
    "embedding-abstract": _suite_embedding_abstract,
    "racah-standard": _suite_racah_standard,
    "bi-standard": _suite_bi_standard,
    "embedding-standard": _suite_embedding_standard,
    "bispectral": _suite_bispectral,
    "su11": _suite_su11,
    "osp12": _suite_osp12,
    "racah-problem": _suite_racah_problem,
    "bi-problem": _suite_bi_problem,
    "embedding-dunkl": _suite_embedding_dunkl,
}


def run_suite(config: SuiteConfig):
    """Run the selected suite(s); reports come back sorted by check_id."""
    if config.suite == "all":
        names = SUITES
    elif config.suite in _SUITE_RUNNERS:
        names = (config.suite,)
    else:
        raise UnknownSuite(f"unknown suite {config.suite!r}")
    rec = _Recorder()
    for name in names:
        _SUITE_RUNNERS[name](config, rec)
    return sorted(rec.reports, key=lambda r: r.check_id)


def emit_report(reports, fmt: str, path=None, suite: str = "all", seed: int = 0):
    """Serialize the reports; returns the text that was written.

    JSON output is byte-identical for identical inputs; the per-check wall
    times appear only in the text format.
    """
    if fmt == "json":
        payload = {
            "version": "1",
            "suite": suite,
            "seed": seed,
            "reports": [
                {
                    "check_id": r.check_id,
                    "statement": r.statement,
                    "anchor": r.anchor,
                    "params": dict(sorted(r.params.items())),
                    "status": r.status,
                    "residual": r.residual,
                }
                for r in reports
            ],
        }
        text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    elif fmt == "text":
        lines = [f"{r.check_id} {r.status} {r.elapsed_ms}ms" for r in reports]
        text = "\n".join(lines) + ("\n" if lines else "")
    else:
        raise ValueError(f"unknown format {fmt!r}")
    if path is not None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    return text


def main(argv=None) -> int:
    try:
        cfg = parse_config(argv)
    except (UnknownSuite, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:  # argparse
        return 2 if exc.code else 0
    reports = run_suite(cfg)
    out_path = cfg.out
    if out_path and os.path.isdir(out_path):
        out_path = os.path.join(
            out_path, "report.json" if cfg.format == "json" else "report.txt"
        )
    text = emit_report(reports, cfg.format, out_path, cfg.suite, cfg.seed)
    if out_path is None:
        sys.stdout.write(text)
    if any(r.status == "error" for r in reports):
        return 2
    if any(r.status == "fail" for r in reports):
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
