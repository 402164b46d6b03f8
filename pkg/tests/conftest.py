"""Shared fixtures and the acceptance-criteria terminal report."""

import pytest

from modulichar import InteriorTable, compactified_characteristic

_criteria = {}


def record_criterion(num, description, passed):
    """Register the outcome of one acceptance criterion for the summary."""
    _criteria[num] = (description, passed)
    return passed


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for num in sorted(_criteria):
        description, passed = _criteria[num]
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"criterion {num}: {status} - {description}")


@pytest.fixture(scope="session")
def interior6():
    return InteriorTable(6)


@pytest.fixture(scope="session")
def compactified6(interior6):
    return compactified_characteristic(6, interior=interior6)
