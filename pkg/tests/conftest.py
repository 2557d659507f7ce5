import random

import pytest

from ideal import from_generators


@pytest.fixture
def golden_equal_degree():
    """<y^7, x^2y^5, x^5y^2, x^7>, closure adds x^4y^4."""
    return from_generators([(0, 7), (2, 5), (5, 2), (7, 0)])


@pytest.fixture
def golden_uneven_closure():
    """<y^18, x^3y^15, x^13y^5, x^18>, closure generators of two different degrees."""
    return from_generators([(0, 18), (3, 15), (13, 5), (18, 0)])


@pytest.fixture
def golden_slanted():
    return from_generators([(0, 12), (6, 8), (9, 6), (15, 2), (18, 0)])


@pytest.fixture
def non_rr_cube():
    """<y^8, x^3y^5, x^5y^3, x^8>: Ratliff-Rush, but its cube is not."""
    return from_generators([(0, 8), (3, 5), (5, 3), (8, 0)])


@pytest.fixture
def small_j():
    """<y^4, xy^3, x^3y, x^4>, contained in <y^3, x^3> yet its closure is not."""
    return from_generators([(0, 4), (1, 3), (3, 1), (4, 0)])


@pytest.fixture
def rng():
    return random.Random(20240601)


def random_equal_degree(rng: random.Random, d: int):
    middle = [(i, d - i) for i in range(1, d) if rng.random() < 0.4]
    return from_generators([(0, d), (d, 0)] + middle)


def random_slanted(rng: random.Random):
    """Generators on the segment from (0, b_0) to (a_r, 0) with a_r != b_0."""
    while True:
        step = rng.randint(2, 5)
        a_step, b_step = rng.randint(1, 4), rng.randint(1, 4)
        if a_step != b_step:
            break
    a_r, b_0 = a_step * step, b_step * step
    middle = [(k * a_step, b_0 - k * b_step) for k in range(1, step) if rng.random() < 0.5]
    return from_generators([(0, b_0), (a_r, 0)] + middle)
