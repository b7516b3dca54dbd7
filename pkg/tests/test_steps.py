"""Tests for the pypyr steps, called directly with a dict context."""

import json

from eulercert.db.manager import get_run
from eulercert.steps import (
    archive_run,
    db_init,
    run_suite,
    show_summary,
    write_report,
    write_tables,
)


def _verification_context(tmp_path) -> dict:
    return {
        "db_path": str(tmp_path / "archive.db"),
        "suites": "theorem1,shift",
        "overrides": {"moduli": [4], "max_degree": 2, "max_shift": 2},
        "report_path": str(tmp_path / "report.json"),
        "format": "json",
    }


class TestVerificationSteps:
    def test_full_chain(self, tmp_path, capsys):
        context = _verification_context(tmp_path)
        db_init.run_step(context)
        run_suite.run_step(context)
        assert [r.name for r in context["results"]] == ["theorem1", "shift"]

        write_report.run_step(context)
        report = json.loads((tmp_path / "report.json").read_text(encoding="utf-8"))
        assert report == context["report"]
        assert report["summary"]["total"] == 3 + 6

        archive_run.run_step(context)
        assert get_run(context["conn"], context["run_id"])["passed"] == 9

        show_summary.run_step(context)
        out = capsys.readouterr().out
        assert "ALL PASSED" in out
        assert f"Archived as run {context['run_id']}." in out

    def test_write_report_without_path(self, tmp_path):
        context = _verification_context(tmp_path)
        context["report_path"] = ""
        run_suite.run_step(context)
        write_report.run_step(context)
        assert context["report"]["summary"]["all_passed"]
        assert not (tmp_path / "report.json").exists()

    def test_show_summary_without_report(self, caplog):
        with caplog.at_level("WARNING"):
            show_summary.run_step({})
        assert "no report" in caplog.text


class TestTablesStep:
    def test_writes_csv_tables(self, tmp_path):
        context = {"output_dir": str(tmp_path / "out"), "max_degree": 3, "moduli": [4, 8], "format": "csv"}
        write_tables.run_step(context)
        assert len(context["written"]) == 2 + 1 + 2 + 1 + 4
        header = (tmp_path / "out" / "twisted_8_3.csv").read_text(encoding="utf-8").splitlines()[0]
        assert header == "n,euler,genocchi,power_sum"
