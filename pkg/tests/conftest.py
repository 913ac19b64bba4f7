import pytest

from skeingram import make_params


@pytest.fixture(scope="session")
def p5():
    return make_params(5)


@pytest.fixture(scope="session")
def p7():
    return make_params(7)
