"""Certificate archive sub-package.

Exports the core archive functions so that other modules can import
them directly from ``eulercert.db``:

    from eulercert.db import get_connection, init_db, save_run
"""

from eulercert.db.manager import (
    get_connection,
    get_failed_certificates,
    get_run,
    init_db,
    latest_run_id,
    list_runs,
    save_certificates,
    save_run,
)

__all__ = [
    "get_connection",
    "get_failed_certificates",
    "get_run",
    "init_db",
    "latest_run_id",
    "list_runs",
    "save_certificates",
    "save_run",
]
