import pytest

from catsq import catalog
from catsq.groups import group_from_permutation_generators


@pytest.fixture(scope="session")
def d8():
    # the standard presentation: a = (1,2)(3,4), b = (1,3), c = [a,b] central
    return group_from_permutation_generators([[(1, 2), (3, 4)], [(1, 3)]], "D8")


@pytest.fixture(scope="session")
def d20():
    return group_from_permutation_generators(
        [[(1, 2, 3, 4, 5, 6, 7, 8, 9, 10)], [(2, 10), (3, 9), (4, 8), (5, 7)]], "d20")


def small(order, gid):
    return catalog.small_group(order, gid)
