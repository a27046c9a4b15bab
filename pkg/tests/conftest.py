from fractions import Fraction

import pytest

from okx.fixtures import build_fixture


def Q(*xs):
    return tuple(Fraction(x) for x in xs)


@pytest.fixture(scope="session")
def blp2():
    return build_fixture("blp2")


@pytest.fixture(scope="session")
def f2():
    return build_fixture("f_e", e=2)


@pytest.fixture(scope="session")
def p2():
    return build_fixture("p2", m=1)
