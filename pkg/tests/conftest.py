import random

import pytest

from hankeldet import GF, RationalFunction
from support import WORKED_DEN, WORKED_NUM

_acceptance_lines = []


def record_acceptance(number, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}"
    _acceptance_lines.append(line)
    print(line)


@pytest.fixture
def acceptance():
    return record_acceptance


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)


@pytest.fixture
def worked_h():
    return RationalFunction.parse(WORKED_NUM, WORKED_DEN)


@pytest.fixture
def rng():
    return random.Random(20261016)


@pytest.fixture
def gfp():
    return GF()
