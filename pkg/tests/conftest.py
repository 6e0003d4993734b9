from __future__ import annotations

import functools

import pytest

from schurring import search


@functools.cache
def named_case(case_id: str) -> search.CaseResult:
    """Each named system is solved once per test session."""
    return search.run_case(case_id)


@pytest.fixture(scope="session")
def case():
    return named_case


@pytest.fixture(scope="session")
def report():
    """The full classification report (a few minutes on one core)."""
    from schurring.classification import verify_all

    return verify_all(jobs=1)


# acceptance criteria record their verdict here; printed in the terminal summary
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, text = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k:>2}: {'PASS' if ok else 'FAIL'}  {text}")
