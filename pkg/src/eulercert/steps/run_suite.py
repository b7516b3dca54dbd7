"""pypyr step: run verification suites.

Context keys consumed:
    suites (list[str] | str): Suite names; ``all`` runs every suite.
    overrides (dict, optional): Grid overrides applied to every suite.
    jobs (int, optional): Worker processes, default 1.

Context keys produced:
    results (list[SuiteResult]): One result per suite, in request order.
"""

import logging

from eulercert.identities.grids import run_suites

logger = logging.getLogger(__name__)


def run_step(context: dict) -> None:
    suites = context.get("suites", ["all"])
    if isinstance(suites, str):
        suites = [name.strip() for name in suites.split(",") if name.strip()]
    jobs = int(context.get("jobs", 1))

    results = run_suites(suites, context.get("overrides") or {}, jobs)
    context["results"] = results

    logger.info(
        "Ran %d suites: %s", len(results), ", ".join(r.name for r in results)
    )
