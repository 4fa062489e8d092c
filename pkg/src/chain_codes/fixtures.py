"""
    chain_codes.fixtures
    ~~~~~~~~~~~~~~~~~~~~

    Named rings and towers used on the command line and in the
    verification suites. Every fixture is a :class:`Tower`; plain rings are
    trivial towers over themselves.
"""
from typing import List

from . import exceptions
from .extension import Tower, extend
from .ring import Family, make_ring
from .utils.functools import factory


@factory
class Fixture:
    MISSING = exceptions.UnknownFixture


def fixture(name: str) -> Tower:
    return Fixture.create(name)


def fixture_names() -> List[str]:
    return Fixture.names()


def _ring(p, n, s, family=Family.UNRAMIFIED):
    return make_ring(family, p, n, s)


@Fixture.register('z4')
def z4():
    return Tower.trivial(_ring(2, 1, 2))


@Fixture.register('z8')
def z8():
    return Tower.trivial(_ring(2, 1, 3))


@Fixture.register('z9')
def z9():
    return Tower.trivial(_ring(3, 1, 2))


@Fixture.register('f2u2')
def f2u2():
    return Tower.trivial(_ring(2, 1, 2, Family.EQUAL_CHARACTERISTIC))


@Fixture.register('gr42')
def gr42():
    return extend(_ring(2, 1, 2), 2)


@Fixture.register('gr43')
def gr43():
    return extend(_ring(2, 1, 2), 3)


@Fixture.register('gr44')
def gr44():
    return extend(_ring(2, 1, 2), 4)


@Fixture.register('f8u2')
def f8u2():
    return extend(_ring(2, 1, 2, Family.EQUAL_CHARACTERISTIC), 3)


@Fixture.register('f4')
def f4():
    return extend(_ring(2, 1, 1), 2)
