"""
Tests for the file-based report writer.
"""
import json
from pathlib import Path

import pandas as pd

from src.loaders.report_writer import CHECK_COLUMNS, ReportWriter
from src.models.results import CheckResult


def _rows():
    return [
        CheckResult.compare("b.second", "so3", 2e-12, 1e-11, "∮φ̌ · ∮φ = e", "estimate=1.0e-13"),
        CheckResult.compare("a.first", "su2", 0.1 + 0.2, 0.25, "Der(μ⁻¹)"),
        CheckResult.compare("c.third", "gl(2)", float("inf"), 0.0, "", "InversionError: singular"),
    ]


def test_initialize_creates_directory(report_dir):
    """Test that initialize creates nested output directories."""
    writer = ReportWriter(report_dir + "/nested/run")
    writer.initialize()
    assert Path(report_dir, "nested", "run").is_dir()


def test_checks_are_sorted_with_fixed_columns(report_writer):
    """Test the column order and the name ordering of rows."""
    path = report_writer.save(_rows())
    frame = pd.read_csv(path, keep_default_na=False)
    assert list(frame.columns) == CHECK_COLUMNS
    assert list(frame["name"]) == ["a.first", "b.second", "c.third"]
    assert list(frame["passed"]) == [False, True, False]


def test_checks_roundtrip_exactly(report_writer):
    """Test that 17 significant digits reproduce every float."""
    report_writer.save(_rows())
    loaded = {row.name: row for row in report_writer.load()}
    assert loaded["a.first"].residual == 0.1 + 0.2
    assert loaded["b.second"].anchor == "∮φ̌ · ∮φ = e"
    assert loaded["c.third"].residual == float("inf")
    assert loaded["c.third"].detail == "InversionError: singular"
    assert all(row.validate() for row in loaded.values())


def test_identical_results_give_identical_files(tmp_path):
    """Test byte-identical tables for identical results."""
    first, second = ReportWriter(str(tmp_path / "one")), ReportWriter(str(tmp_path / "two"))
    for writer in (first, second):
        writer.initialize()
        writer.save(_rows())
    assert first.checks_path.read_bytes() == second.checks_path.read_bytes()


def test_summary_contains_environment(report_writer):
    """Test the summary keys added by the writer."""
    path = report_writer.save_summary({"kind": "identities", "totals": {"checks_run": 3}})
    summary = json.loads(path.read_text(encoding="utf-8"))
    assert summary["kind"] == "identities"
    assert summary["totals"]["checks_run"] == 3
    assert {"python", "numpy", "scipy", "pandas"} <= set(summary["environment"])
    assert "written_at" in summary


def test_convergence_table(report_writer):
    """Test ordering by check then decreasing step, and the empty case."""
    assert report_writer.save_convergence([]) is None
    rows = [
        {"check": "evolve.so3.midpoint", "step": 0.0625, "error": 1e-3},
        {"check": "evolve.so3.lie_euler", "step": 0.03125, "error": 2e-2},
        {"check": "evolve.so3.midpoint", "step": 0.125, "error": 4e-3},
        {"check": "evolve.so3.lie_euler", "step": 0.0625, "error": 4e-2},
    ]
    frame = pd.read_csv(report_writer.save_convergence(rows))
    assert list(frame["check"]) == ["evolve.so3.lie_euler"] * 2 + ["evolve.so3.midpoint"] * 2
    assert list(frame["step"]) == [0.0625, 0.03125, 0.125, 0.0625]
