from functools import lru_cache

import pytest

from hermlift.curve import HermitianCurve
from hermlift.gf import field_create


@lru_cache(maxsize=None)
def field(p, l):
    return field_create(p, l)


@lru_cache(maxsize=None)
def curve(p, l):
    return HermitianCurve(field(p, l))


@pytest.fixture(scope="session")
def F9():
    return field(3, 1)


@pytest.fixture(scope="session")
def F81():
    return field(3, 2)


@pytest.fixture(scope="session")
def H3():
    return curve(3, 1)


ACCEPTANCE = []  # (criterion number, passed, detail)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num, ok, detail in sorted(ACCEPTANCE):
        terminalreporter.write_line(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
