"""Shared test fixtures for pwilab tests."""

import math

import numpy as np
import pytest

from pwilab.errors import ReducibleError
from pwilab.iet import Iet, make_iet

PHI = (1.0 + math.sqrt(5.0)) / 2.0


def random_iet(rng: np.random.Generator, d: int) -> Iet:
    """A random irreducible d-IET with lengths in [0.05, 1)."""
    while True:
        mapping = tuple(int(v) + 1 for v in rng.permutation(d))
        lengths = tuple(rng.uniform(0.05, 1.0, d))
        try:
            return make_iet(lengths, mapping)
        except ReducibleError:
            continue


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def golden_iet():
    """Rotation by the golden mean: lengths (phi - 1, 2 - phi), pi = 2,1."""
    return make_iet((PHI - 1.0, 2.0 - PHI), (2, 1))


@pytest.fixture
def swap_iet():
    """The 2-IET with lengths (0.6, 0.4)."""
    return make_iet((0.6, 0.4), (2, 1))


@pytest.fixture
def periodic_iet():
    """The 2-IET with lengths (0.4, 0.6); every orbit has period 5."""
    return make_iet((0.4, 0.6), (2, 1))


@pytest.fixture
def four_iet():
    """A 4-IET with pi = 4,2,1,3 and generic lengths."""
    return make_iet((0.1217970148, 0.1329352086, 0.2008884081, 0.3550989199), (4, 2, 1, 3))


@pytest.fixture
def random_iets(rng):
    """Draw ``count`` random irreducible exchanges with d taken from ``dims``."""

    def draw(count: int, dims=(2, 3, 4)) -> list[Iet]:
        return [random_iet(rng, int(rng.choice(dims))) for _ in range(count)]

    return draw


@pytest.fixture
def seeded_iet():
    """Draw one random irreducible exchange from its own seed."""

    def draw(seed: int, dims=(2, 3, 4, 5, 6)) -> Iet:
        generator = np.random.default_rng(seed)
        return random_iet(generator, int(generator.choice(dims)))

    return draw
