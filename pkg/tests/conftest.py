import pytest

from cycleiso.survey import enumerate_connected


@pytest.fixture(scope="session")
def universe6():
    return [g for n in range(1, 7) for g in enumerate_connected(n)]


@pytest.fixture(scope="session")
def universe7():
    return [g for n in range(1, 8) for g in enumerate_connected(n)]


@pytest.fixture(scope="session")
def universe8():
    return [g for n in range(1, 9) for g in enumerate_connected(n)]
