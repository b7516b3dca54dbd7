"""pypyr step: store the composed report and its certificates in the archive.

Context keys consumed:
    conn (sqlite3.Connection): From ``eulercert.steps.db_init``.
    report (dict): From ``eulercert.steps.write_report``.

Context keys produced:
    run_id (int): Id of the archived run.
"""

import logging

from eulercert.db.manager import save_certificates, save_run

logger = logging.getLogger(__name__)


def run_step(context: dict) -> None:
    conn = context["conn"]
    report = context["report"]

    run_id = save_run(conn, report)
    for suite in report["suites"]:
        save_certificates(conn, run_id, suite["name"], suite["certificates"])
    context["run_id"] = run_id

    logger.info("Archived run %d", run_id)
