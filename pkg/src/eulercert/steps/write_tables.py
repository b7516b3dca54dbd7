"""pypyr step: write the classical and twisted value tables to a directory.

Context keys consumed:
    output_dir (str): Target directory, created if missing.
    max_degree (int): Highest degree in every table.
    moduli (list[int]): Even moduli whose characters get ``chars`` and
        ``twisted`` tables.
    format (str, optional): ``json`` (default) or ``csv``.

Context keys produced:
    written (list[str]): Paths of the files written.
"""

import logging
import pathlib

from eulercert.dirichlet.characters import enumerate_characters
from eulercert.reporting.serialize import render, write_output
from eulercert.reporting.tables import chars_table, numbers_table, poly_table, twisted_table

logger = logging.getLogger(__name__)


def run_step(context: dict) -> None:
    out_dir = pathlib.Path(context["output_dir"])
    out_dir.mkdir(parents=True, exist_ok=True)
    max_degree = int(context["max_degree"])
    fmt = context.get("format", "json")

    documents = {
        "numbers": numbers_table(max_degree),
        "poly": poly_table(max_degree),
    }
    moduli = context.get("moduli", [])
    if isinstance(moduli, str):
        moduli = [int(d) for d in moduli.split(",") if d.strip()]
    for d in moduli:
        documents[f"chars_{d}"] = chars_table(d)
        for chi in enumerate_characters(d):
            documents[f"twisted_{d}_{chi.index}"] = twisted_table(chi, max_degree)

    written = []
    for name, document in documents.items():
        path = out_dir / f"{name}.{fmt}"
        write_output(render(document, fmt), str(path))
        written.append(str(path))
    context["written"] = written

    logger.info("Wrote %d tables to %s", len(written), out_dir)
