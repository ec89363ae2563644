from pathlib import Path

import numpy as np
import pytest

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def rng():
    return np.random.default_rng(20201017)


@pytest.fixture
def fixtures():
    return FIXTURES


_ACCEPTANCE = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker and (rep.when == "call" or (rep.when == "setup" and not rep.passed)):
        doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
        _ACCEPTANCE.append((marker.args[0], doc, rep.passed, rep.duration))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for number, doc, passed, duration in sorted(_ACCEPTANCE):
        terminalreporter.write_line(
            f"{'PASS' if passed else 'FAIL'}  criterion {number}: {doc} ({duration:.2f} s)")
