import pytest

from skewcyclic.finite_field import Field


@pytest.fixture(scope="session")
def f3():
    return Field(3, 1, [0, 1])


@pytest.fixture(scope="session")
def f9():
    return Field(3, 2, [1, 0, 1])


@pytest.fixture(scope="session")
def f25():
    return Field(5, 2, [2, 0, 1])


@pytest.fixture(scope="session")
def f27():
    return Field(3, 3, [1, 2, 0, 1])
