"""Benchmark fixtures.

These reuse the session fixtures from tests/conftest.py.
"""

from tests.conftest import (  # noqa: F401
    closure_fixture,
    oblique_rotation,
    x_rotation,
)
