"""Shared fixtures and the acceptance-criteria summary hook."""

from __future__ import annotations

from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"

#: (criterion number, description, "PASS" | "FAIL" | "SKIP") recorded by
#: test_acceptance.py and echoed after the run, one line per criterion.
acceptance_results: list[tuple[int, str, str]] = []


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def tree_small_dir() -> Path:
    return FIXTURES / "tree_small"


@pytest.fixture
def lexer_fixture_dir() -> Path:
    return FIXTURES / "lexer"


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not acceptance_results:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for number, description, status in sorted(acceptance_results):
        terminalreporter.write_line(f"criterion {number}: {status} — {description}")
