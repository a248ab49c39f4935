import random

import pytest
from hypothesis import settings

from supercoh import corpus
from supercoh.field import GF, QQ

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

FIELDS = [QQ, GF(5), GF(7)]

_ACCEPTANCE = []


def record_criterion(number, title, passed, detail=""):
    _ACCEPTANCE.append((number, title, bool(passed), detail))


@pytest.fixture
def acceptance():
    return record_criterion


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed, detail in sorted(_ACCEPTANCE):
        line = f"[{'PASS' if passed else 'FAIL'}] criterion {number}: {title}"
        if detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)


@pytest.fixture(params=[str(F) for F in FIELDS])
def field(request):
    return {str(F): F for F in FIELDS}[request.param]


@pytest.fixture
def h3():
    return corpus.load("h3")


@pytest.fixture
def sh11():
    return corpus.load("sh11")


@pytest.fixture
def rng():
    return random.Random(1234)
