"""Shared worked-example data and field fixtures.

Coefficient tuples are lowest-degree first throughout.
"""

import pytest

from towerbounds.exact_arith import intpoly
from towerbounds.number_field import FieldOrder, build_quadratic_extension, element_of

F1 = intpoly(1, -1, -7, -4, 1, 0, 1)
F2 = intpoly(-13, 3, 29, 4, -10, -1, 1)

# Generator of the first quadratic extension, with its eight prime factors.
ETA1 = (-961, 2314, 3360, -994, 467, -671)
PRIMES1 = [
    ("pi7", (-12, 31, 44, -13, 6, -9), -7),
    ("pi13", (-9, 23, 36, -11, 5, -7), 13),
    ("pi19", (6, -15, -26, 8, -4, 5), 19),
    ("pi19b", (6, -20, -24, 7, -3, 5), -19),
    ("pi23", (-9, 15, 26, -8, 4, -5), -23),
    ("pi23b", (6, -22, -30, 9, -4, 6), -23),
    ("pi29", (16, -35, -56, 17, -8, 11), -29),
    ("pi31", (7, -22, -36, 11, -5, 7), -31),
]
BETA1 = (1, 0, 0, 1, 1, 1)
GAMMA1 = (-237, 576, 815, -270, 112, -173)
PI3 = (-7, 21, 30, -9, 4, -6)
AUG1 = (14, -35, -56, 17, -8, 11)  # pi3 * pi19
AUG1_BETA = (1, 0, 1, 1, 0, 1)
AUG1_GAMMA = (5, -9, -28, -14, -8, 2)

# Second field: totally real, augmented through a norm-125 prime.
ETA2 = (44590, -32096, -38788, 18937, 7230, -2993)
BETA2 = (1, 1, 1, 1, 0, 1)
GAMMA2 = (10754, -8002, -8847, 5013, 1617, -811)
PI125 = (268, -233, -468, 189, 104, -38)
PI13_2 = (152, -99, -299, 103, 70, -24)
PI41_2 = (-271, 209, 494, -182, -112, 39)
DELTA2 = (3, -1, 19, 16, -1, -2)
DELTA2_BETA = (1, 1, 0, 1, 1, 0)

TALLY1 = {7: 1, 9: 1, 13: 1, 19: 2, 23: 2, 29: 1, 31: 1, 37: 2, 64: 2, 73: 2, 79: 6}
TALLY2 = {13: 5, 29: 4, 41: 4, 49: 1, 71: 4, 83: 2, 97: 1}


@pytest.fixture(scope="session")
def k1():
    return FieldOrder.from_poly(F1)


@pytest.fixture(scope="session")
def k2():
    return FieldOrder.from_poly(F2)


@pytest.fixture(scope="session")
def spec1(k1):
    return build_quadratic_extension(element_of(k1, ETA1), k1)


@pytest.fixture(scope="session")
def spec2(k2):
    return build_quadratic_extension(element_of(k2, ETA2), k2)
