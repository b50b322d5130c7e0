import random

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from borel.corpus import random_strongly_stable
from borel.monomials import MonomialIdeal
from borel.parsing import parse_ideal

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def ideal(text: str, n: int | None = None) -> MonomialIdeal:
    """Monomial ideal from ``ring: ...`` + ``I: ...`` text or a bare generator list."""
    if "ring:" not in text:
        names = "x y z w" if n is None else " ".join(f"x{i}" for i in range(1, n + 1))
        text = f"ring: {names}\nI: {text}"
    f = parse_ideal(text)
    return MonomialIdeal(f.n, tuple(g.lm for g in f.generators))


FOUR_VAR = ("x^2, x*y, y^3, y^2*z, x*z^2, y*z^2, z^3, x*z*w^2, y^2*w^3, y*z*w^3, "
            "z^2*w^3, x*w^5, y*w^5, z*w^5, w^7")


@pytest.fixture
def four_var():
    """Fifteen-generator strongly stable ideal in k[x,y,z,w] with SLP but not SSP."""
    return ideal(FOUR_VAR)


@pytest.fixture
def four_var_ssp():
    return ideal(FOUR_VAR.replace("x*z*w^2", "x*z*w^3"))


@pytest.fixture
def codim3_j():
    return ideal("x1^2, x1*x2, x2^2, x1*x3^2, x2*x3^2, x3^4", n=3)


@pytest.fixture
def codim3_i():
    """Not strongly stable: x2*x3^2 -> x2^2*x3 leaves the ideal."""
    return ideal("x1^2, x1*x2, x1*x3, x2^3, x2*x3^2, x3^4", n=3)


@st.composite
def stable_ideals(draw, n=None, max_n=4, max_socle=6):
    k = draw(st.integers(1, max_n)) if n is None else n
    seed = draw(st.integers(0, 2**32 - 1))
    return random_strongly_stable(k, random.Random(seed), max_socle)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for num in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[num])
