import pytest
from oracles import by_name

from zsfusion.grp import cyclic_group, group_from_permutations, make_subgroup
from zsfusion.matched import derive_matched_pair
from zsfusion.suite import suite_groups


@pytest.fixture(scope="session")
def groups():
    return suite_groups()


@pytest.fixture(scope="session")
def S3():
    return group_from_permutations([[2, 1, 3], [2, 3, 1]])


@pytest.fixture(scope="session")
def S4():
    return group_from_permutations([[2, 1, 3, 4], [2, 3, 4, 1]])


@pytest.fixture(scope="session")
def Z2():
    return cyclic_group(2)


@pytest.fixture(scope="session")
def Z3():
    return cyclic_group(3)


@pytest.fixture(scope="session")
def s3_pair(S3):
    """S3 = <t> <a> with t = (1 2) and a = (1 2 3)."""
    t, a = by_name(S3, "213"), by_name(S3, "231")
    G = make_subgroup(S3, [S3.identity, t])
    K = make_subgroup(S3, [S3.identity, a, S3.mul(a, a)])
    return derive_matched_pair(S3, G, K)
