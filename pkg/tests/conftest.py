import random
import sys

import pytest
from hypothesis import assume
from hypothesis import strategies as st

from betashift.constructions import battery
from betashift.kneading import KneadingSequence, validate_kneading
from betashift.language import is_admissible

GOLDEN = KneadingSequence.exact((), (1, 0))
FULL1 = KneadingSequence.exact((), (1,))
FULL2 = KneadingSequence.exact((), (2,))
SHIFTED_GOLDEN = KneadingSequence.exact((2,), (1, 0))
EXACT_BATTERY = [GOLDEN, FULL1, FULL2, SHIFTED_GOLDEN]


@pytest.fixture(scope="session")
def bat():
    return battery()


@pytest.fixture(scope="session")
def dtilde(bat):
    return bat["champernowne_tilde"]


@pytest.fixture(scope="session")
def beta18(bat):
    return bat["beta_1_8"]


@pytest.fixture
def rng():
    return random.Random(20261018)


@st.composite
def exact_kneading(draw, max_digit=3, max_pre=4, max_period=4):
    """Valid exact kneading sequences: lead with the top digit, reject the rest."""
    k = draw(st.integers(1, max_digit))
    pre = [k] + draw(st.lists(st.integers(0, k), max_size=max_pre))
    period = draw(st.lists(st.integers(0, k), min_size=1, max_size=max_period))
    d = KneadingSequence.exact(pre, period)
    assume(validate_kneading(d).valid)
    return d


def random_admissible(d, n, rng):
    """Random admissible word built digit by digit; every admissible prefix extends by 0."""
    w = ()
    for _ in range(n):
        options = [a for a in range(d.alphabet_max + 1) if is_admissible(w + (a,), d)]
        w = w + (rng.choice(options),)
    return w


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance is not None and acceptance.LINES:
        terminalreporter.section("acceptance criteria")
        for line in acceptance.LINES:
            terminalreporter.write_line(line)
