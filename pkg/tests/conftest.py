import pytest

from prolate import ProlateContext


@pytest.fixture(scope="session")
def ctx10():
    return ProlateContext(10.0)


@pytest.fixture(scope="session")
def ctx100():
    return ProlateContext(100.0)


@pytest.fixture(scope="session")
def ctx1000():
    return ProlateContext(1000.0)
