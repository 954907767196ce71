import random
import sys

import pytest

from hyperform.binform import BinaryForm, is_separable
from hyperform.nfield import RATIONALS, QuadField


@pytest.fixture
def rng():
    return random.Random(20240601)


@pytest.fixture(scope="session")
def K5():
    return QuadField(5)


@pytest.fixture(scope="session")
def Q():
    return RATIONALS


def random_element(field, rng, h=5):
    if field.is_rational:
        return field(rng.randint(-h, h))
    return field(rng.randint(-h, h), rng.randint(-h, h))


def random_form(field, rng, n=6, h=5, leading_nonzero=True):
    while True:
        cs = [random_element(field, rng, h) for _ in range(n + 1)]
        if leading_nonzero and cs[-1].is_zero():
            continue
        F = BinaryForm(cs, field, n)
        if is_separable(F):
            return F


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
