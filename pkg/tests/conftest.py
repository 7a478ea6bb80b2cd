import pytest
from hypothesis import HealthCheck, settings

from rbsys import tables as T

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

# S3 element indices: permutations of (0,1,2) in lexicographic order
E, T23, T12, C123, C132, T13 = range(6)
A3 = (E, C123, C132)
REFL12 = (E, T12)


@pytest.fixture(scope="session")
def z2():
    return T.cyclic(2)


@pytest.fixture(scope="session")
def z3():
    return T.cyclic(3)


@pytest.fixture(scope="session")
def s3():
    return T.symmetric(3)
