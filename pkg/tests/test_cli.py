"""Verifier driver: configuration, suites, certificates, exit codes."""

import json
import os

import pytest

from biracah.cli import (
    SUITES,
    CheckReport,
    SuiteConfig,
    emit_report,
    main,
    parse_config,
    run_suite,
)
from biracah.errors import UnknownSuite


def test_parse_defaults():
    cfg = parse_config([])
    assert cfg.suite == "all"
    assert cfg.degree == 6
    assert cfg.trials == 50
    assert cfg.format == "text"


def test_parse_flags_and_unicode_params():
    cfg = parse_config(
        ["--suite", "bi-standard", "--params", "ρ1=1,ρ2=3/2", "--seed", "9"]
    )
    assert cfg.suite == "bi-standard"
    assert cfg.params == {"rho1": "1", "rho2": "3/2"}
    assert cfg.seed == 9


def test_config_file_with_flag_override(tmp_path):
    path = tmp_path / "cfg"
    path.write_text("suite=su11\ndegree=4\nformat=json\n")
    cfg = parse_config(["--config", str(path), "--degree", "8"])
    assert cfg.suite == "su11"
    assert cfg.degree == 8
    assert cfg.format == "json"


def test_unknown_suite_raises():
    with pytest.raises(UnknownSuite):
        parse_config(["--suite", "unknown-name"])
    with pytest.raises(UnknownSuite):
        run_suite(SuiteConfig(suite="unknown-name"))


def test_unknown_suite_exit_code(capsys):
    assert main(["--suite", "unknown-name"]) == 2
    assert "unknown suite" in capsys.readouterr().err


def test_embedding_abstract_all_pass(capsys):
    assert main(["--suite", "embedding-abstract"]) == 0
    out = capsys.readouterr().out
    assert "embedding.abstract.sum-rule pass" in out


def test_bi_standard_casimir_value():
    cfg = parse_config(
        ["--suite", "bi-standard", "--params", "ρ1=1,ρ2=3/2,r1=1/2,r2=2"]
    )
    reports = run_suite(cfg)
    scalar = [r for r in reports if r.check_id == "bi.casimir.scalar"]
    assert len(scalar) == 1
    assert scalar[0].status == "pass"
    assert "59/4" in scalar[0].statement


def test_reports_sorted_and_unique():
    reports = run_suite(SuiteConfig(suite="osp12"))
    ids = [r.check_id for r in reports]
    assert ids == sorted(ids)
    assert len(ids) == len(set(ids))


def test_parameter_parse_error_is_per_check():
    cfg = SuiteConfig(suite="bi-standard", params={"rho1": "not-a-number"})
    reports = run_suite(cfg)
    assert all(r.status == "error" for r in reports)


def test_emit_json_schema_and_determinism(tmp_path):
    reports = run_suite(SuiteConfig(suite="su11", seed=4))
    t1 = emit_report(reports, "json", None, "su11", 4)
    t2 = emit_report(run_suite(SuiteConfig(suite="su11", seed=4)), "json", None, "su11", 4)
    assert t1 == t2  # byte-identical
    payload = json.loads(t1)
    assert payload["version"] == "1"
    assert payload["suite"] == "su11"
    assert payload["seed"] == 4
    for entry in payload["reports"]:
        assert set(entry) == {
            "check_id", "statement", "anchor", "params", "status", "residual",
        }


def test_emit_empty_and_text():
    assert json.loads(emit_report([], "json", None, "x", 0)) == {
        "version": "1", "suite": "x", "seed": 0, "reports": [],
    }
    rep = CheckReport("a.b.c", "s", "t", {}, "pass", "", 7)
    assert emit_report([rep], "text", None) == "a.b.c pass 7ms\n"


def test_out_directory_gets_report_and_csvs(tmp_path):
    code = main(
        ["--suite", "bispectral", "--degree", "3", "--trials", "2",
         "--out", str(tmp_path), "--format", "json"]
    )
    assert code == 0
    assert (tmp_path / "report.json").exists()
    for name in ("racah", "bi"):
        assert (tmp_path / f"{name}_triangular.csv").exists()
        assert (tmp_path / f"{name}_mult.csv").exists()
    header = (tmp_path / "bi_mult.csv").read_text().splitlines()[0]
    assert header.startswith("# rows=5 cols=4 basis=")


def test_suite_list_is_complete():
    assert len(SUITES) == 12
