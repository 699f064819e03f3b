import sys
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from hahnexp.chain import AutomorphismSpec, BaseElement, Lifted
from hahnexp.explog import LogContext
from hahnexp.hahn import HahnElement, indicator
from hahnexp.series import Series

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def B(fiber, level=0, offset=0):
    return BaseElement(fiber, level, Fraction(offset))


def one(key, c=1):
    """``c * 1_key``."""
    return indicator(key, Fraction(c))


def t(g, c=1):
    """The monomial ``c * t^g``."""
    return Series.monomial(g, Fraction(c))


@pytest.fixture
def ctx0():
    """tau_{S={0}} on two fibers."""
    return LogContext(AutomorphismSpec(2, {0}))


# -- hypothesis strategies -----------------------------------------------------

BETA = 3

rationals = st.builds(Fraction, st.integers(-5, 5), st.integers(1, 4))
nonzero_rationals = rationals.filter(lambda q: q != 0)

base_elements = st.builds(BaseElement, st.integers(0, BETA - 1), st.integers(-3, 3),
                          st.builds(Fraction, st.integers(-6, 6), st.integers(1, 2)))


def _extend(children):
    hahn = st.lists(st.tuples(children, nonzero_rationals), min_size=1, max_size=3)
    negative = hahn.map(HahnElement).filter(lambda g: g.sign() < 0)
    return negative.map(Lifted)


chain_elements = st.recursive(base_elements, _extend, max_leaves=6)


def hahn_elements(keys=chain_elements, max_size=4):
    return st.lists(st.tuples(keys, rationals), max_size=max_size).map(HahnElement)


specs = st.builds(AutomorphismSpec, st.just(BETA),
                  st.frozensets(st.integers(0, BETA - 1)))

# series over a small pool of exponents keep products cheap
_exponent_pool = [HahnElement.zero(), one(B(0)), one(B(0), -1), one(B(1), 2),
                  one(B(0)) + one(B(1), -1), one(B(2, 1), Fraction(1, 2))]
series = st.lists(st.tuples(st.sampled_from(_exponent_pool), rationals),
                  max_size=4).map(Series)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
