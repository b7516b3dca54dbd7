"""pypyr step: open the certificate archive.

Reads ``db_path`` from the pypyr context (defaulting to
``~/.eulercert/eulercert.db``), opens a connection, runs the schema
migration, and stores the live connection back into the context so
that downstream steps can reuse it.

Usage in a pipeline YAML::

    steps:
      - name: eulercert.steps.db_init

Context keys consumed:
    db_path (str, optional): Path to the SQLite archive.

Context keys produced:
    conn (sqlite3.Connection): The initialised archive connection.
    db_path (str): The resolved archive path.
"""

import logging

from eulercert import DEFAULT_DB_PATH
from eulercert.db.manager import get_connection, init_db

logger = logging.getLogger(__name__)


def run_step(context: dict) -> None:
    """pypyr entry-point: open archive connection and initialise schema.

    Args:
        context: The mutable pypyr context dictionary.
    """
    db_path: str = context.get("db_path") or DEFAULT_DB_PATH

    conn = get_connection(db_path)
    init_db(conn)

    context["conn"] = conn
    context["db_path"] = db_path

    logger.info("Archive initialised at %s", db_path)
