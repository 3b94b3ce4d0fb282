import sys

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from charpreg import PolynomialRing
from charpreg.determinantal import determinantal_ideal, determinantal_ring

settings.register_profile("default", deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(scope="session")
def det2():
    R = determinantal_ring(2)
    return R, determinantal_ideal(R)


@pytest.fixture(scope="session")
def xy2():
    return PolynomialRing(2, ["x", "y"])


def exponents(nvars, max_exp=3):
    return st.tuples(*[st.integers(0, max_exp)] * nvars)


def polys(ring, max_terms=5, max_exp=3, homogeneous_degree=None):
    """Random polynomials with at most ``max_terms`` terms."""
    term = st.tuples(exponents(ring.nvars, max_exp), st.integers(1, ring.p - 1))
    if homogeneous_degree is not None:
        term = term.filter(lambda t: sum(t[0]) == homogeneous_degree)

    def build(terms):
        f = ring.zero()
        for e, c in terms:
            f = f + ring.monomial(e, c)
        return f

    return st.lists(term, max_size=max_terms).map(build)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
