import pytest

from bitopo.bispace import BiSpace, make_bispace
from bitopo.sets import mask_of
from bitopo.topology import validate_topology


def m(*pts):
    return mask_of(pts)


# Example 3.4: X = {a,b,c} = {0,1,2}.
EX34_T1 = [0, m(1), m(2), m(1, 2), m(0, 1, 2)]
EX34_T2 = [0, m(0), m(0, 1), m(0, 2), m(0, 1, 2)]

# Example 2.22, X = {a,b,c,d,e} = {0..4}.
EX222_TAU_1 = [0, m(2), m(0, 1, 2), m(2, 3, 4), m(0, 1, 2, 3, 4)]
EX222_TAU_2 = [0, m(0), m(1), m(0, 1), m(3, 4), m(0, 3, 4), m(1, 3, 4),
               m(0, 1, 3, 4), m(0, 1, 2, 3, 4)]

# Example 3.35: Y = {0..4} with the chain of initial segments.
EX335_GAMMA = [0, m(0), m(0, 1), m(0, 1, 2), m(0, 1, 2, 3), m(0, 1, 2, 3, 4)]

# Finite chain analogue of Example 2.17 on {0,1,2}: right rays vs left rays.
CHAIN_T1 = [0, m(2), m(1, 2), m(0, 1, 2)]
CHAIN_T2 = [0, m(0), m(0, 1), m(0, 1, 2)]


@pytest.fixture(scope="session")
def ex34() -> BiSpace:
    return make_bispace(3, EX34_T1, EX34_T2)


@pytest.fixture(scope="session")
def chain217() -> BiSpace:
    return make_bispace(3, CHAIN_T1, CHAIN_T2)


@pytest.fixture(scope="session")
def ex222_tau1():
    return validate_topology(5, EX222_TAU_1)


@pytest.fixture(scope="session")
def ex222_tau2():
    return validate_topology(5, EX222_TAU_2)


@pytest.fixture(scope="session")
def ex335_gamma():
    return validate_topology(5, EX335_GAMMA)


def discrete(n):
    opens = list(range(1 << n))
    return validate_topology(n, opens)


def indiscrete(n):
    return validate_topology(n, [0, (1 << n) - 1])
