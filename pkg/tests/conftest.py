import math

import pytest

from bohrsommerfeld.constants import default_constants

ACCEPTANCE_LINES: dict[int, str] = {}


@pytest.fixture(scope="session")
def k():
    return default_constants()


def matches_sig_digits(value: float, reference: float, digits: int) -> bool:
    """True when value agrees with reference to within half a unit in its last quoted digit."""
    exponent = math.floor(math.log10(abs(reference)))
    return abs(value - reference) <= 0.5 * 10.0 ** (exponent - digits + 1)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[number])
