import functools

import pytest

from positroid import OracleMatroid, Positroid, enumerate_bases
from positroid.model import random_permutation

GOLDEN = "2 8 6 7 9 4 5 14 13 3 10 11 1 12"


@pytest.fixture(scope="session")
def golden():
    return Positroid.parse(GOLDEN)


@pytest.fixture(scope="session")
def u24():
    # uniform matroid of rank 2 on four elements
    return Positroid.parse("3 4 1 2")


def instance(seed, sizes=range(3, 11)):
    sizes = list(sizes)
    return Positroid(random_permutation(sizes[seed % len(sizes)], seed))


@functools.lru_cache(maxsize=None)
def oracle_for(P):
    return OracleMatroid(P.n, enumerate_bases(P), validate=False)
