"""Tests for the eulercert Click CLI."""

import json

import pytest
from click.testing import CliRunner

from eulercert.cli import main
from eulercert.identities.grids import SUITE_NAMES
from eulercert.reporting.serialize import csv_to_rows, loads_json


@pytest.fixture()
def runner(monkeypatch, tmp_path):
    """A CliRunner whose archive lives in a temporary directory."""
    monkeypatch.setenv("EULERCERT_DB", str(tmp_path / "archive.db"))
    monkeypatch.delenv("EULERCERT_FORMAT", raising=False)
    monkeypatch.delenv("EULERCERT_JOBS", raising=False)
    return CliRunner()


class TestHelp:
    def test_cli_help(self, runner):
        """eulercert --help should exit 0 and list every command."""
        result = runner.invoke(main, ["--help"])
        assert result.exit_code == 0
        for command in ("numbers", "poly", "chars", "twisted", "fermionic", "verify", "history", "pipeline"):
            assert command in result.output

    def test_verify_help(self, runner):
        result = runner.invoke(main, ["verify", "--help"])
        assert result.exit_code == 0
        assert "--primitive-only" in result.output
        assert "--include-principal" in result.output

    def test_pipeline_help(self, runner):
        result = runner.invoke(main, ["pipeline", "--help"])
        assert result.exit_code == 0
        assert "full_verification" in result.output
        assert "tables" in result.output


class TestTables:
    def test_numbers_csv(self, runner, tmp_path):
        out = tmp_path / "numbers.csv"
        result = runner.invoke(main, ["numbers", "--max-degree", "6", "--format", "csv", "-o", str(out)])
        assert result.exit_code == 0
        rows = csv_to_rows(out.read_text(encoding="utf-8"))
        assert rows[1] == {"n": "1", "bernoulli": "-1/2", "euler": "-1/2", "genocchi": "1"}

    def test_numbers_stdout_json(self, runner):
        result = runner.invoke(main, ["numbers", "--max-degree", "2"])
        assert result.exit_code == 0
        assert json.loads(result.output)["kind"] == "numbers"

    def test_format_from_env(self, runner, monkeypatch):
        monkeypatch.setenv("EULERCERT_FORMAT", "csv")
        result = runner.invoke(main, ["numbers", "--max-degree", "1"])
        assert result.output.splitlines()[0] == "n,bernoulli,euler,genocchi"

    def test_twisted(self, runner, tmp_path):
        out = tmp_path / "twisted.json"
        result = runner.invoke(main, ["twisted", "--modulus", "4", "--char-index", "1", "-o", str(out)])
        assert result.exit_code == 0
        document = json.loads(out.read_text(encoding="utf-8"))
        assert document["params"] == {"modulus": 4, "char_index": 1, "upper": 3}

    def test_twisted_rejects_odd_modulus(self, runner):
        result = runner.invoke(main, ["twisted", "--modulus", "5"])
        assert result.exit_code == 2

    def test_twisted_rejects_bad_index(self, runner):
        result = runner.invoke(main, ["twisted", "--modulus", "4", "--char-index", "7"])
        assert result.exit_code == 2
        assert "out of range" in result.output

    def test_chars(self, runner):
        result = runner.invoke(main, ["chars", "--modulus", "12"])
        assert result.exit_code == 0
        assert [row["conductor"] for row in json.loads(result.output)["rows"]] == [1, 3, 4, 12]

    @pytest.mark.parametrize("p", ["2", "9"])
    def test_fermionic_rejects_bad_prime(self, runner, p):
        result = runner.invoke(main, ["fermionic", "--p", p])
        assert result.exit_code == 2

    def test_poly_with_character(self, runner):
        result = runner.invoke(main, ["poly", "--max-degree", "1", "--modulus", "8", "--char-index", "3"])
        assert result.exit_code == 0
        kinds = {row["kind"] for row in json.loads(result.output)["rows"]}
        assert "euler_twisted" in kinds


class TestVerify:
    def test_theorem1_report(self, runner, tmp_path):
        out = tmp_path / "report.json"
        result = runner.invoke(
            main, ["verify", "--suite", "theorem1", "--modulus", "4", "--max-degree", "20", "-o", str(out)]
        )
        assert result.exit_code == 0
        report = json.loads(out.read_text(encoding="utf-8"))
        assert report["summary"]["total"] == 21
        assert report["summary"]["pass"] == 21
        assert "All 21 certificates passed." in result.output

    def test_reports_are_byte_identical(self, runner, tmp_path):
        paths = [tmp_path / "a.json", tmp_path / "b.json"]
        for path in paths:
            runner.invoke(main, ["verify", "--suite", "eq17", "--modulus", "4", "--max-degree", "3", "-o", str(path)])
        assert paths[0].read_bytes() == paths[1].read_bytes()

    def test_all_suites_pass_deterministically(self, runner, tmp_path):
        """The default grids of every suite pass and re-run to the same bytes."""
        paths = [tmp_path / "first.json", tmp_path / "second.json"]
        for path in paths:
            result = runner.invoke(main, ["verify", "--suite", "all", "-o", str(path)])
            assert result.exit_code == 0, result.output
        assert paths[0].read_bytes() == paths[1].read_bytes()
        report = loads_json(paths[0].read_text(encoding="utf-8"))
        assert [suite["name"] for suite in report["suites"]] == list(SUITE_NAMES)
        assert report["summary"]["all_passed"]
        assert report["summary"]["empty_suites"] == []
        assert report["summary"]["pass"] == report["summary"]["total"] > 0

    def test_odd_modulus_is_usage_error(self, runner):
        result = runner.invoke(main, ["verify", "--suite", "theorem5", "--modulus", "3"])
        assert result.exit_code == 2
        assert "even moduli" in result.output

    def test_unwritable_output_is_rejected(self, runner, tmp_path):
        target = tmp_path / "missing" / "report.json"
        result = runner.invoke(main, ["verify", "--suite", "shift", "-o", str(target)])
        assert result.exit_code == 2

    def test_failing_certificate_exits_nonzero(self, runner, tmp_path):
        """The principal character with distinct weights breaks the mirrored comparison."""
        out = tmp_path / "report.json"
        result = runner.invoke(
            main,
            ["verify", "--suite", "theorem5", "--modulus", "4", "--max-degree", "2",
             "--weight", "1", "--weight", "2", "--x", "0", "--include-principal", "-o", str(out)],
        )
        assert result.exit_code == 1
        report = json.loads(out.read_text(encoding="utf-8"))
        assert report["summary"]["fail"] > 0

    def test_archive_and_history(self, runner, tmp_path):
        out = tmp_path / "report.json"
        result = runner.invoke(
            main, ["verify", "--suite", "shift", "--max-degree", "1", "--archive", "-o", str(out)]
        )
        assert result.exit_code == 0
        assert "Archived as run 1." in result.output

        history = runner.invoke(main, ["history"])
        assert history.exit_code == 0
        assert "shift" in history.output

        failed = runner.invoke(main, ["history", "--failed", "1"])
        assert "no failing certificates" in failed.output


class TestPipeline:
    def test_tables_pipeline(self, runner, tmp_path):
        out_dir = tmp_path / "tables"
        result = runner.invoke(
            main,
            ["pipeline", "tables", "--set", f"output_dir={out_dir}", "--set", "max_degree=2",
             "--set", "moduli=4"],
        )
        assert result.exit_code == 0, result.output
        assert sorted(p.name for p in out_dir.iterdir()) == [
            "chars_4.json", "numbers.json", "poly.json", "twisted_4_0.json", "twisted_4_1.json"
        ]

    def test_bad_assignment(self, runner):
        result = runner.invoke(main, ["pipeline", "tables", "--set", "oops"])
        assert result.exit_code == 2
