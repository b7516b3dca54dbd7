"""Report composition (JSON/CSV documents and a Markdown summary)."""

from eulercert.reporting.composer import (
    compose_report,
    compose_table,
    render_summary,
    report_exit_code,
)
from eulercert.reporting.serialize import dumps_json, loads_json, render

__all__ = [
    "compose_report",
    "compose_table",
    "dumps_json",
    "loads_json",
    "render",
    "render_summary",
    "report_exit_code",
]
