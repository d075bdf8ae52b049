import pytest

from fatlab import surfaces, zoo


@pytest.fixture(scope="session")
def model600():
    return zoo.build_600cell()


@pytest.fixture(scope="session")
def sg1():
    return surfaces.build_sg_prime(1)


@pytest.fixture(scope="session")
def sg2():
    return surfaces.build_sg_prime(2)
