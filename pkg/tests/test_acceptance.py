"""Acceptance gate: one test per criterion, exact tolerances, wall budgets.

Each test prints a single pass/fail line (visible with ``pytest -s`` or on
failure).  All identity checks demand exactly zero residuals; the budgets
are generous desktop-scale wall-clock limits.
"""

import json
import random
import subprocess
import sys
import time

from biracah import bispectral as bisp
from biracah import dunkl, pbw
from biracah import shiftops as sho
from biracah.polynomials import ParamPoly
from biracah.scalars import Scalar

BI_NUMERIC = {
    "rho1": ParamPoly.const(1),
    "rho2": ParamPoly.const(Scalar("3/2")),
    "r1": ParamPoly.const(Scalar("1/2")),
    "r2": ParamPoly.const(2),
}


class _Budget:
    def __init__(self, label, seconds):
        self.label = label
        self.seconds = seconds

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.t0
        status = "FAIL" if exc_type else "PASS"
        print(f"{self.label}: {status} in {elapsed:.1f}s (budget {self.seconds}s)")
        if exc_type is None:
            assert elapsed < self.seconds, (
                f"{self.label} exceeded budget: {elapsed:.1f}s > {self.seconds}s"
            )
        return False


def _all_zero(residuals):
    bad = {k: str(v)[:160] for k, v in residuals.items() if not v.is_zero}
    assert not bad, bad


def test_criterion_1_abstract_quadratic_embedding():
    with _Budget("criterion 1 (abstract quadratic embedding, symbolic)", 10):
        res = pbw.quadratic_embedding_residuals()
        assert set(res) == {
            "cyclic-ab", "cyclic-bc", "cyclic-ca", "sum-rule",
            "central-ia", "central-ib", "central-ic",
            "rel-a", "rel-b", "rel-c",
        }
        _all_zero(res)


def test_criterion_2_casimir_centrality():
    with _Budget("criterion 2 (Casimir centrality, symbolic constants)", 5):
        racah = pbw.racah_system()
        ok, witnesses = pbw.is_central(pbw.racah_casimir(racah))
        assert ok, witnesses
        bi = pbw.bi_system()
        ok, witnesses = pbw.is_central(pbw.bi_casimir(bi))
        assert ok, witnesses


def test_criterion_3_standard_realizations():
    with _Budget("criterion 3 (standard realizations, symbolic fits)", 30):
        fitted = sho.fit_structure_constants("racah")  # zero residual built in
        assert fitted["a1"] == ParamPoly.const(-2)
        assert fitted["a2"] == ParamPoly.const(-2)
        printed = sho.bi_structure_polys()
        recovered = sho.fit_structure_constants("bi")
        for name in ("wX", "wY", "wZ"):
            assert recovered[name] == printed[name]
        assert sho.casimir_scalar("bi") == printed["u"]
        numeric = sho.casimir_scalar("bi", sho.build_standard_bi(BI_NUMERIC))
        assert numeric == ParamPoly.const(Scalar("59/4"))


def test_criterion_4_bispectrality():
    for realization in ("racah", "bi"):
        with _Budget(f"criterion 4 (bispectrality, {realization}, M=10)", 60):
            rng = random.Random(2026)
            done = bisp.bispectral_suite(realization, 10, rng, trials=5)
            assert len(done) == 5


def test_criterion_5_single_variable_presentations():
    with _Budget("criterion 5 (single-variable presentations)", 10):
        for i in (1, 2, 3):
            _all_zero(dunkl.verify_su11_single(i))
            _all_zero(dunkl.verify_osp12_single(i))
            _all_zero(dunkl.verify_scasimir_relations(i))


def test_criterion_6_three_fold_commuting_problem():
    with _Budget("criterion 6 (three-fold quadratic-algebra problem)", 60):
        _all_zero(dunkl.verify_racah_problem())
        totals = dunkl.verify_total_casimirs()
        for key in ("su-total-vs-hamiltonian", "su-initial-1",
                    "su-initial-2", "su-initial-3"):
            assert totals[key].is_zero, key


def test_criterion_7_three_fold_anticommuting_problem():
    with _Budget("criterion 7 (three-fold anticommutator problem)", 60):
        _all_zero(dunkl.verify_bi_problem())
        totals = dunkl.verify_total_casimirs()
        for key in ("osp-supercharge-square", "osp-s4-identity",
                    "osp-initial-1", "osp-initial-2", "osp-initial-3"):
            assert totals[key].is_zero, key


def test_criterion_8_reflection_valued_embedding():
    with _Budget("criterion 8 (reflection-valued embedding)", 120):
        res = dunkl.verify_dunkl_embedding()
        # every family of checks must be present
        for prefix in ("printed-", "reflection-", "central-", "quadratic-",
                       "substitution-"):
            assert any(k.startswith(prefix) for k in res)
        _all_zero(res)


def _random_dunkl(rng):
    terms = {}
    for _ in range(rng.randint(1, 3)):
        key = tuple(
            [rng.randint(-2, 2) for _ in range(3)]
            + [rng.randint(0, 2) for _ in range(3)]
            + [rng.randint(0, 1) for _ in range(3)]
        )
        terms[key] = ParamPoly.const(rng.randint(-3, 3))
    return dunkl.DunklElement(terms)


def _random_shift_op(rng, var="v"):
    vp = ParamPoly.var(var)
    terms = {}
    for _ in range(rng.randint(1, 3)):
        key = (rng.randint(-2, 2), rng.randint(0, 1))
        coeff = vp * rng.randint(-3, 3) + rng.randint(-3, 3)
        terms[key] = terms.get(key, ParamPoly.const(0)) + coeff
    return sho.ShiftReflectionOperator(var, terms)


def test_criterion_9_engine_health():
    with _Budget("criterion 9a (associativity sampling, 3 engines)", 120):
        rng = random.Random(99)
        for system in (pbw.racah_system(), pbw.bi_system()):
            for _ in range(100):  # 200 triples across the two algebras
                x, y, z = (
                    pbw.random_element(system, rng, max_degree=2)
                    for _ in range(3)
                )
                assert ((x * y) * z - x * (y * z)).is_zero
        for _ in range(200):
            f, g, h = (_random_shift_op(rng) for _ in range(3))
            assert ((f * g) * h - f * (g * h)).is_zero
        for _ in range(200):
            x, y, z = (_random_dunkl(rng) for _ in range(3))
            assert ((x * y) * z - x * (y * z)).is_zero

    outputs = []
    for run in (1, 2):
        with _Budget(f"criterion 9b (full verification suite, run {run})", 300):
            proc = subprocess.run(
                [sys.executable, "-m", "biracah.cli",
                 "--suite", "all", "--format", "json", "--seed", "1"],
                capture_output=True, text=True, check=False,
            )
            assert proc.returncode == 0, proc.stdout[-2000:] + proc.stderr[-2000:]
            outputs.append(proc.stdout)
    assert outputs[0] == outputs[1], "JSON certificates differ between runs"
    payload = json.loads(outputs[0])
    assert payload["version"] == "1"
    assert all(r["status"] == "pass" for r in payload["reports"])
