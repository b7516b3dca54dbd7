"""Compose certificate reports and value tables.

A report bundles the results of one or more suites::

    {
      "schema": "eulercert.report/1",
      "version": "...",
      "suites": [{"name", "grid", "certificates", "excluded", "summary"}],
      "summary": {"pass", "fail", "error", "total", "all_passed", "empty_suites"}
    }

A suite that produced no certificates is listed in ``empty_suites`` and
never counts as passed.

Certificates carry ``theorem``, ``params``, ``status``, ``lhs``, ``rhs``,
``first_mismatch``, ``reason`` and ``extra``. For ``theorem5`` the outer
degree is the ``degree`` parameter and ``lhs``/``rhs`` hold the
``mirrored`` and ``k_reference`` comparisons. Reports contain no
timestamps, so identical runs give identical documents.

The human-readable summary is rendered from the Jinja2 template at
``templates/summary.md.j2``.
"""

from __future__ import annotations

import logging
import pathlib

from jinja2 import Environment, FileSystemLoader

from eulercert import __version__
from eulercert.identities.certificate import certificate_to_dict
from eulercert.identities.grids import SuiteResult

logger = logging.getLogger(__name__)

REPORT_SCHEMA = "eulercert.report/1"
TABLE_SCHEMA = "eulercert.table/1"

# Locate the templates directory relative to this file.
_TEMPLATE_DIR = pathlib.Path(__file__).parent / "templates"


def _summarize(counts: list[dict]) -> dict:
    summary = {"pass": 0, "fail": 0, "error": 0, "total": 0}
    for c in counts:
        for key in summary:
            summary[key] += c[key]
    summary["all_passed"] = summary["total"] > 0 and summary["pass"] == summary["total"]
    return summary


def suite_to_dict(result: SuiteResult) -> dict:
    counts = result.counts()
    return {
        "name": result.name,
        "grid": result.grid,
        "certificates": [certificate_to_dict(c) for c in result.certificates],
        "excluded": result.excluded,
        "summary": _summarize([counts]),
    }


def compose_report(results: list[SuiteResult]) -> dict:
    """Build the report document for *results*, in the order given.

    Args:
        results: Suite results, typically from
            :func:`eulercert.identities.grids.run_suites`.

    Returns:
        A JSON-ready dict following :data:`REPORT_SCHEMA`.
    """
    suites = [suite_to_dict(r) for r in results]
    summary = _summarize([s["summary"] for s in suites])
    summary["empty_suites"] = [s["name"] for s in suites if s["summary"]["total"] == 0]
    if summary["empty_suites"]:
        logger.warning("suites with no certificates: %s", ", ".join(summary["empty_suites"]))
        summary["all_passed"] = False
    logger.info(
        "Composed report: %d suites, %d/%d certificates passed",
        len(suites), summary["pass"], summary["total"],
    )
    return {
        "schema": REPORT_SCHEMA,
        "version": __version__,
        "suites": suites,
        "summary": summary,
    }


def compose_table(kind: str, columns: list[str], rows: list[dict], params: dict | None = None) -> dict:
    """Wrap table rows (already encoded) in a :data:`TABLE_SCHEMA` document."""
    return {
        "schema": TABLE_SCHEMA,
        "kind": kind,
        "params": params or {},
        "columns": columns,
        "rows": rows,
    }


def failed_certificates(report: dict) -> list[dict]:
    return [
        cert
        for suite in report["suites"]
        for cert in suite["certificates"]
        if cert["status"] != "pass"
    ]


def report_exit_code(report: dict) -> int:
    """0 iff every certificate in *report* passed."""
    return 0 if report["summary"]["all_passed"] else 1


def render_summary(report: dict, max_failures: int = 20) -> str:
    """Render the Markdown summary of a report."""
    env = Environment(
        loader=FileSystemLoader(str(_TEMPLATE_DIR)),
        autoescape=False,
        keep_trailing_newline=True,
    )
    template = env.get_template("summary.md.j2")
    failures = failed_certificates(report)
    return template.render(
        report=report,
        suites=report["suites"],
        summary=report["summary"],
        failures=failures[:max_failures],
        hidden_failures=max(0, len(failures) - max_failures),
    )
