"""pypyr step: show_summary

Prints the Markdown summary of the composed report and closes the
archive connection if one is open.
"""

from __future__ import annotations

import logging

from eulercert.reporting.composer import render_summary

logger = logging.getLogger(__name__)


def run_step(context: dict) -> None:
    """Print the report summary.

    Expects the following keys in *context*:
        report -- composed report document
        conn   -- (optional) open sqlite3 connection, closed here
    """
    report = context.get("report")
    conn = context.get("conn")
    try:
        if report is None:
            logger.warning("show_summary: no report in context")
            return
        print(render_summary(report), end="")
        if "run_id" in context:
            print(f"Archived as run {context['run_id']}.")
    finally:
        if conn is not None:
            conn.close()
            logger.info("Archive connection closed by show_summary step.")
