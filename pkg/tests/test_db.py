"""Tests for the eulercert.db package.

All tests use an in-memory SQLite database (`:memory:`) so they run
quickly, require no filesystem access, and leave no artefacts behind.
"""

import sqlite3
from fractions import Fraction

import pytest

from eulercert.db.manager import (
    get_connection,
    get_failed_certificates,
    get_run,
    init_db,
    latest_run_id,
    list_runs,
    save_certificates,
    save_run,
)
from eulercert.identities.certificate import make_certificate
from eulercert.identities.grids import SuiteResult
from eulercert.reporting.composer import compose_report


def _report(*suites: tuple[str, list[bool]]) -> dict:
    """Compose a report whose suites pass or fail as listed."""
    results = []
    for name, outcomes in suites:
        certificates = [
            make_certificate(name, {"n": i}, Fraction(1), Fraction(1 if ok else 2))
            for i, ok in enumerate(outcomes)
        ]
        results.append(SuiteResult(name, {}, certificates))
    return compose_report(results)


# ---------------------------------------------------------------------------
# Schema creation tests
# ---------------------------------------------------------------------------

class TestSchema:
    def test_tables_created(self, archive):
        """init_db should create the runs and certificates tables."""
        names = {
            row["name"]
            for row in archive.execute("SELECT name FROM sqlite_master WHERE type = 'table'")
        }
        assert {"runs", "certificates"} <= names

    def test_init_is_idempotent(self, archive):
        init_db(archive)
        assert list_runs(archive) == []

    def test_file_connection_creates_parent(self, tmp_path):
        path = tmp_path / "nested" / "archive.db"
        conn = get_connection(str(path))
        init_db(conn)
        conn.close()
        assert path.exists()

    def test_status_constraint(self, archive):
        run_id = save_run(archive, _report(("shift", [True])))
        with pytest.raises(sqlite3.IntegrityError):
            archive.execute(
                "INSERT INTO certificates (run_id, suite, theorem, params_json, status) "
                "VALUES (?, 'shift', 'shift', '{}', 'maybe')",
                (run_id,),
            )


# ---------------------------------------------------------------------------
# Runs and certificates
# ---------------------------------------------------------------------------

class TestRuns:
    def test_save_and_get_run(self, archive):
        report = _report(("theorem1", [True, True]), ("shift", [True, False]))
        run_id = save_run(archive, report)
        run = get_run(archive, run_id)
        assert run["suite"] == "theorem1,shift"
        assert (run["total"], run["passed"], run["failed"], run["errors"]) == (4, 3, 1, 0)
        assert run["report"] == report

    def test_get_missing_run(self, archive):
        assert get_run(archive, 42) is None

    def test_save_certificates_ignores_duplicates(self, archive):
        report = _report(("shift", [True, False]))
        run_id = save_run(archive, report)
        certificates = report["suites"][0]["certificates"]
        assert save_certificates(archive, run_id, "shift", certificates) == 2
        assert save_certificates(archive, run_id, "shift", certificates) == 0
        assert save_certificates(archive, run_id, "shift", []) == 0

    def test_failed_certificates(self, archive):
        report = _report(("shift", [True, False, True]))
        run_id = save_run(archive, report)
        save_certificates(archive, run_id, "shift", report["suites"][0]["certificates"])
        failed = get_failed_certificates(archive, run_id)
        assert len(failed) == 1
        assert failed[0]["params"] == {"n": 1}
        assert failed[0]["status"] == "fail"
        assert failed[0]["first_mismatch"] == 0

    def test_list_runs_newest_first(self, archive):
        ids = [save_run(archive, _report(("shift", [True]))) for _ in range(3)]
        runs = list_runs(archive, limit=2)
        assert [run["id"] for run in runs] == ids[::-1][:2]

    def test_latest_run_id(self, archive):
        assert latest_run_id(archive) is None
        first = save_run(archive, _report(("theorem1", [True])))
        second = save_run(archive, _report(("shift", [True])))
        assert latest_run_id(archive) == second
        assert latest_run_id(archive, "theorem1") == first
        assert latest_run_id(archive, "eq5") is None
