import pytest

from silspath.cartan import build
from silspath.peterson import ParabolicQuotient


@pytest.fixture(scope="session")
def a1():
    return build("A", 1)


@pytest.fixture(scope="session")
def a2():
    return build("A", 2)


@pytest.fixture(scope="session")
def c2():
    return build("C", 2)


ORDER_CASES = [
    (("A", 1), (1,)),
    (("A", 1), (2,)),
    (("A", 2), (1, 1)),
    (("A", 2), (1, 0)),
    (("C", 2), (1, 0)),
]


def order_quotients():
    return [
        (ParabolicQuotient.for_weight(build(*fam), lam), lam)
        for fam, lam in ORDER_CASES
    ]
