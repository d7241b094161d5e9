import pytest

from catalog import cartan


@pytest.fixture(scope="session")
def a1():
    return cartan("A1")


@pytest.fixture(scope="session")
def a2():
    return cartan("A2")


@pytest.fixture(scope="session")
def a3():
    return cartan("A3")


@pytest.fixture(scope="session")
def b2():
    return cartan("B2")


@pytest.fixture(scope="session")
def a1aff():
    return cartan("A1aff")
