"""Shared pytest fixtures for the eulercert test suite.

Provides:
    chi4        -- the non-principal character mod 4 (χ(3) = -1)
    chars8      -- all four characters mod 8, in enumeration order
    chars12     -- all four characters mod 12, in enumeration order
    archive     -- in-memory SQLite archive with the full schema applied
"""

import pytest

from eulercert.db.manager import get_connection, init_db
from eulercert.dirichlet.characters import enumerate_characters, get_character


# ---------------------------------------------------------------------------
# Characters
# ---------------------------------------------------------------------------

@pytest.fixture()
def chi4():
    """The nontrivial character mod 4."""
    return get_character(4, 1)


@pytest.fixture()
def chars8():
    """Characters mod 8: principal, even primitive, induced from mod 4, odd primitive."""
    return list(enumerate_characters(8))


@pytest.fixture()
def chars12():
    """Characters mod 12: principal, conductor 3, conductor 4, primitive."""
    return list(enumerate_characters(12))


# ---------------------------------------------------------------------------
# archive fixture
# ---------------------------------------------------------------------------

@pytest.fixture()
def archive():
    """Create an in-memory archive connection with the schema applied.

    Yields the connection and closes it after the test.
    """
    conn = get_connection(":memory:")
    init_db(conn)
    yield conn
    conn.close()
