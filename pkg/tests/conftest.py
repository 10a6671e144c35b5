from __future__ import annotations

from functools import lru_cache

import pytest

from qvfo import QhoParams, build_scheme

# (criterion, label, passed, detail) collected by test_acceptance.py
ACCEPTANCE_RESULTS: list[tuple[int, str, bool, str]] = []


@lru_cache(maxsize=None)
def scheme_for(tau: float, epsilon: float, n_max: int):
    return build_scheme(QhoParams(tau, epsilon), n_max)


@pytest.fixture
def scheme():
    return scheme_for


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for crit, label, passed, detail in sorted(ACCEPTANCE_RESULTS, key=lambda r: r[0]):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {crit}: {label} -- {detail}")
