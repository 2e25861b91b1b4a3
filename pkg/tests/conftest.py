import pytest
from hypothesis import settings

from hallalg import ClassTable, GroundField, Quiver

settings.register_profile("repro", derandomize=True)
settings.load_profile("repro")


def jordan():
    return Quiver(1, [(0, 0)])


def a2():
    return Quiver(2, [(0, 1)])


def kronecker():
    return Quiver(2, [(0, 1), (0, 1)])


@pytest.fixture(scope="session")
def a2_q2():
    return ClassTable(a2(), GroundField(2), (2, 2))


@pytest.fixture(scope="session")
def jordan_q2():
    return ClassTable(jordan(), GroundField(2), (4,))


@pytest.fixture(scope="session")
def kronecker_q2():
    return ClassTable(kronecker(), GroundField(2), (2, 2))


@pytest.fixture(scope="session")
def jordan_q3():
    return ClassTable(jordan(), GroundField(3), (3,))
