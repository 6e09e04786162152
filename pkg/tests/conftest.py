import pytest

from feedback_codes.channel import symmetric_channel
from feedback_codes.cloud import FeedbackCode, from_block_code
from feedback_codes.constructions import complete_chain, corollary1, nonadaptive_hamming
from feedback_codes.field import hamming_code, make_field


@pytest.fixture(scope="session")
def ternary_hamming():
    return hamming_code(make_field(3), 2)


@pytest.fixture(scope="session")
def ternary_hamming_code():
    return nonadaptive_hamming(3, 2)


@pytest.fixture(scope="session")
def chain_3_5():
    return complete_chain(3, 5)


@pytest.fixture(scope="session")
def cor_3_2():
    return corollary1(3, 2)


# -- acceptance summary ------------------------------------------------------

_ACCEPTANCE: list[tuple[str, str]] = []


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        _ACCEPTANCE.append((report.nodeid.split("::")[-1], report.outcome))
    elif "test_acceptance.py" in report.nodeid and report.when == "setup" and report.outcome != "passed":
        _ACCEPTANCE.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _ACCEPTANCE:
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name}")
