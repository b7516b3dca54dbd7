"""pypyr step: compose the certificate report and write it out.

Context keys consumed:
    results (list[SuiteResult]): From ``eulercert.steps.run_suite``.
    report_path (str, optional): Output file; nothing is written when
        empty.
    format (str, optional): ``json`` (default) or ``csv``.

Context keys produced:
    report (dict): The composed report document.
"""

import logging

from eulercert.reporting.composer import compose_report
from eulercert.reporting.serialize import render, write_output

logger = logging.getLogger(__name__)


def run_step(context: dict) -> None:
    report = compose_report(context["results"])
    context["report"] = report

    path = context.get("report_path")
    if path:
        write_output(render(report, context.get("format", "json")), path)
        logger.info("Report written to %s", path)
