import functools

import pytest

from hatgrid.assemble import generate
from hatgrid.fibline import FibParams

# rational (d0, d1) pairs; d2 closes the zero sum
PRESETS = [
    ("1/5", "1/7"),
    ("1/3", "1/11"),
    ("2/7", "-3/13"),
    ("-1/4", "3/17"),
    ("5/9", "1/19"),
]


def params(i: int = 0) -> FibParams:
    return FibParams.from_pair(*PRESETS[i])


@functools.lru_cache(maxsize=None)
def tiling(i: int, radius: int = 20, mode: str = "hat8", roles: str = "standard"):
    return generate(params(i), radius, mode, roles)


@pytest.fixture
def p():
    return params(0)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import VERDICTS
    except ImportError:
        return
    if VERDICTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(VERDICTS):
            terminalreporter.write_line(VERDICTS[n])
