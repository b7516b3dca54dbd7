"""Certificate archive for eulercert.

Provides connection management, schema initialization, and query helpers
for the SQLite archive of verification runs. All functions take a
connection object as their first parameter and do not manage global
state.
"""

import json
import logging
import pathlib
import sqlite3

logger = logging.getLogger(__name__)


def get_connection(db_path: str) -> sqlite3.Connection:
    """Open a SQLite connection with Row factory enabled.

    Args:
        db_path: Filesystem path to the SQLite database file, or ":memory:"
                 for an in-memory database. Parent directories are created.

    Returns:
        A ``sqlite3.Connection`` configured with ``sqlite3.Row`` as
        ``row_factory`` and foreign-key enforcement turned on.
    """
    if db_path != ":memory:":
        path = pathlib.Path(db_path).expanduser()
        path.parent.mkdir(parents=True, exist_ok=True)
        db_path = str(path)
    conn = sqlite3.connect(db_path)
    conn.row_factory = sqlite3.Row
    conn.execute("PRAGMA foreign_keys = ON")
    return conn


def init_db(conn: sqlite3.Connection) -> None:
    """Create all tables and indexes by executing ``schema.sql``.

    Args:
        conn: An open SQLite connection.
    """
    schema_path = pathlib.Path(__file__).with_name("schema.sql")
    schema_sql = schema_path.read_text(encoding="utf-8")
    conn.executescript(schema_sql)
    logger.info("Archive schema initialized from %s", schema_path)


def _dumps(value) -> str:
    return json.dumps(value, sort_keys=True)


def save_run(conn: sqlite3.Connection, report: dict) -> int:
    """Persist a report document as one row of the ``runs`` table.

    Args:
        conn: An open SQLite connection.
        report: A document from :func:`eulercert.reporting.compose_report`.

    Returns:
        The ``id`` of the newly inserted run.
    """
    summary = report["summary"]
    params = {
        "suite": ",".join(s["name"] for s in report["suites"]),
        "total": summary["total"],
        "passed": summary["pass"],
        "failed": summary["fail"],
        "errors": summary["error"],
        "report_json": _dumps(report),
    }
    cursor = conn.execute(
        """
        INSERT INTO runs (suite, total, passed, failed, errors, report_json)
        VALUES (:suite, :total, :passed, :failed, :errors, :report_json)
        """,
        params,
    )
    conn.commit()
    logger.info("Saved run id=%d (suites=%s, %d/%d passed)",
                cursor.lastrowid, params["suite"], params["passed"], params["total"])
    return cursor.lastrowid


def save_certificates(
    conn: sqlite3.Connection, run_id: int, suite: str, certificates: list[dict]
) -> int:
    """Insert serialized certificates of one suite for *run_id*.

    Duplicates (same theorem and parameters within the run) are silently
    ignored via ``INSERT OR IGNORE``.

    Returns:
        The number of rows actually inserted.
    """
    if not certificates:
        return 0

    sql = """
        INSERT OR IGNORE INTO certificates
            (run_id, suite, theorem, params_json, status,
             lhs_json, rhs_json, first_mismatch_json)
        VALUES
            (:run_id, :suite, :theorem, :params_json, :status,
             :lhs_json, :rhs_json, :first_mismatch_json)
    """
    count_before = _certificate_count(conn, run_id)
    for cert in certificates:
        conn.execute(sql, {
            "run_id": run_id,
            "suite": suite,
            "theorem": cert["theorem"],
            "params_json": _dumps(cert["params"]),
            "status": cert["status"],
            "lhs_json": _dumps(cert.get("lhs")),
            "rhs_json": _dumps(cert.get("rhs")),
            "first_mismatch_json": _dumps(cert.get("first_mismatch")),
        })
    conn.commit()

    inserted = _certificate_count(conn, run_id) - count_before
    logger.info("Archived %d certificates for run %d/%s (%d duplicates skipped)",
                inserted, run_id, suite, len(certificates) - inserted)
    return inserted


def get_run(conn: sqlite3.Connection, run_id: int) -> dict | None:
    """Return the run row with its report decoded, or ``None``."""
    row = conn.execute("SELECT * FROM runs WHERE id = ?", (run_id,)).fetchone()
    if row is None:
        return None
    run = dict(row)
    run["report"] = json.loads(run.pop("report_json"))
    return run


def list_runs(conn: sqlite3.Connection, limit: int = 20) -> list[dict]:
    """Most recent runs first, without their report bodies."""
    rows = conn.execute(
        """
        SELECT id, created_at, suite, total, passed, failed, errors
        FROM runs
        ORDER BY id DESC
        LIMIT :limit
        """,
        {"limit": limit},
    ).fetchall()
    return [dict(row) for row in rows]


def get_failed_certificates(conn: sqlite3.Connection, run_id: int) -> list[dict]:
    """Certificates of *run_id* whose status is not ``pass``."""
    rows = conn.execute(
        """
        SELECT suite, theorem, params_json, status, first_mismatch_json
        FROM certificates
        WHERE run_id = :run_id AND status != 'pass'
        ORDER BY id
        """,
        {"run_id": run_id},
    ).fetchall()
    return [
        {
            "suite": row["suite"],
            "theorem": row["theorem"],
            "params": json.loads(row["params_json"]),
            "status": row["status"],
            "first_mismatch": json.loads(row["first_mismatch_json"]),
        }
        for row in rows
    ]


def latest_run_id(conn: sqlite3.Connection, suite: str | None = None) -> int | None:
    """Id of the newest run, optionally restricted to runs that included *suite*."""
    if suite is None:
        row = conn.execute("SELECT MAX(id) AS id FROM runs").fetchone()
        return row["id"]
    rows = conn.execute("SELECT id, suite FROM runs ORDER BY id DESC").fetchall()
    for row in rows:
        if suite in row["suite"].split(","):
            return row["id"]
    return None


# ---------------------------------------------------------------------------
# Private helpers
# ---------------------------------------------------------------------------

def _certificate_count(conn: sqlite3.Connection, run_id: int) -> int:
    row = conn.execute(
        "SELECT COUNT(*) AS cnt FROM certificates WHERE run_id = ?", (run_id,)
    ).fetchone()
    return row["cnt"]
