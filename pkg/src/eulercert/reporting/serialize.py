"""JSON and CSV writers for reports and tables.

JSON documents are written with sorted keys, two-space indentation and a
trailing newline, so identical inputs give byte-identical files. CSV
files carry a header row and one record per parameter tuple; every exact
value is already a string by the time it reaches these writers.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import pathlib
import sys

from eulercert.exceptions import PreconditionError

logger = logging.getLogger(__name__)

FORMATS = ("json", "csv")


def dumps_json(document: dict) -> str:
    return json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def loads_json(text: str) -> dict:
    """Parse a document written by :func:`dumps_json`."""
    document = json.loads(text)
    if not isinstance(document, dict) or "schema" not in document:
        raise PreconditionError("not an eulercert document: missing 'schema'")
    return document


def rows_to_csv(rows: list[dict], columns: list[str]) -> str:
    """Render *rows* as CSV with a header; nested values are JSON-encoded."""
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(
            {
                col: json.dumps(row.get(col), sort_keys=True)
                if isinstance(row.get(col), (dict, list))
                else row.get(col)
                for col in columns
            }
        )
    return buffer.getvalue()


def csv_to_rows(text: str) -> list[dict]:
    return list(csv.DictReader(io.StringIO(text)))


def render(document: dict, fmt: str) -> str:
    """Render a report or table document in *fmt* (``json`` or ``csv``)."""
    if fmt == "json":
        return dumps_json(document)
    if fmt == "csv":
        rows, columns = flatten_document(document)
        return rows_to_csv(rows, columns)
    raise PreconditionError(f"unknown output format {fmt!r}; choose json or csv")


def flatten_document(document: dict) -> tuple[list[dict], list[str]]:
    """Tabular view of a document: table rows as-is, certificates one per row."""
    if "rows" in document:
        return document["rows"], list(document["columns"])
    rows = []
    for suite in document.get("suites", []):
        for cert in suite["certificates"]:
            rows.append(
                {
                    "suite": suite["name"],
                    "theorem": cert["theorem"],
                    "params": cert["params"],
                    "status": cert["status"],
                    "first_mismatch": cert["first_mismatch"],
                    "reason": cert["reason"],
                }
            )
    columns = ["suite", "theorem", "params", "status", "first_mismatch", "reason"]
    return rows, columns


def write_output(text: str, path: str | None) -> None:
    """Write *text* to *path*, or to stdout when *path* is ``None`` or ``-``.

    Raises:
        OSError: if the path cannot be written.
    """
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    target = pathlib.Path(path)
    target.write_text(text, encoding="utf-8")
    logger.info("Wrote %d bytes to %s", len(text.encode("utf-8")), target)
