import pytest

from sgranks.families import (
    brandt,
    cyclic_group,
    full_transformation,
    monogenic,
    order_preserving_singular,
    standard_corpus,
    symmetric_group,
)


@pytest.fixture(scope="session")
def b2():
    S, codec = brandt(cyclic_group(1), 2)
    return S, codec


@pytest.fixture(scope="session")
def o2():
    return order_preserving_singular(2)


@pytest.fixture(scope="session")
def o3():
    return order_preserving_singular(3)


@pytest.fixture(scope="session")
def o4():
    return order_preserving_singular(4)


@pytest.fixture(scope="session")
def o5():
    return order_preserving_singular(5)


@pytest.fixture(scope="session")
def t3():
    return full_transformation(3)


@pytest.fixture(scope="session")
def corpus():
    return standard_corpus()


@pytest.fixture(scope="session")
def s3():
    return symmetric_group(3)


@pytest.fixture(scope="session")
def mono22():
    return monogenic(2, 2)
