import pytest

from singlink import analyze, quasi_degree

# The three links carried in the built-in registry, by their defining data.
F60_SUPPORT = ((5, 1, 0, 0), (1, 0, 3, 0), (0, 4, 0, 0), (0, 0, 0, 3))
F60_WEIGHTS = (9, 15, 17, 20)

F256_1_SUPPORT = ((17, 0, 1, 0), (1, 5, 0, 0), (0, 1, 3, 0), (0, 0, 0, 2))
F256_1_WEIGHTS = (11, 49, 69, 128)

F256_2_SUPPORT = ((17, 1, 0, 0), (1, 0, 3, 0), (0, 5, 1, 0), (0, 0, 0, 2))
F256_2_WEIGHTS = (13, 35, 81, 128)


@pytest.fixture(scope="session")
def f60():
    return quasi_degree(F60_SUPPORT, F60_WEIGHTS)


@pytest.fixture(scope="session")
def f256_1():
    return quasi_degree(F256_1_SUPPORT, F256_1_WEIGHTS)


@pytest.fixture(scope="session")
def f256_2():
    return quasi_degree(F256_2_SUPPORT, F256_2_WEIGHTS)


@pytest.fixture(scope="session")
def report60(f60):
    return analyze(f60)


@pytest.fixture(scope="session")
def report256_1(f256_1):
    return analyze(f256_1)


@pytest.fixture(scope="session")
def report256_2(f256_2):
    return analyze(f256_2)


@pytest.fixture(scope="session")
def all_reports(report60, report256_1, report256_2):
    return (report60, report256_1, report256_2)
