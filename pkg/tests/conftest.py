import pytest

from constacodes import enumerator as en
from constacodes.factorizer import build_factor_data
from constacodes.params import Params


@pytest.fixture(scope="session")
def p1122():
    """m=1, n=1, k=2, lam=2, delta=alpha=1: the fully brute-forceable case."""
    return Params(1, 1, 2, 2, 1, 1)


@pytest.fixture(scope="session")
def fd1122(p1122):
    return build_factor_data(p1122)


@pytest.fixture(scope="session")
def ctx1122(p1122, fd1122):
    return en.chain_contexts(p1122, fd1122)[0]


@pytest.fixture(scope="session")
def p1322():
    """m=1, n=3: two factors, of degrees 1 and 2."""
    return Params(1, 3, 2, 2, 1, 1)


@pytest.fixture(scope="session")
def fd1322(p1322):
    return build_factor_data(p1322)


@pytest.fixture(scope="session")
def ctxs1322(p1322, fd1322):
    return en.chain_contexts(p1322, fd1322)
