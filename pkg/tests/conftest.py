import math

import numpy as np
import pytest

from src.models.sides import SideLengths
from src.models.volume import Verdict
from src.services.euclidean import euclidean_feasibility
from src.services.spherical import spherical_feasibility


@pytest.fixture
def rng():
    return np.random.default_rng(20240917)


@pytest.fixture
def random_spherical(rng):
    """Draw spherical sides with a requested verdict"""

    def draw(n, verdict=Verdict.INTERIOR, low=0.05, high=math.pi - 0.05):
        while True:
            r = SideLengths.spherical(rng.uniform(low, high, size=n))
            if spherical_feasibility(r).verdict is verdict:
                return r

    return draw


@pytest.fixture
def random_euclidean(rng):
    """Draw Euclidean sides with a requested verdict"""

    def draw(n, verdict=Verdict.INTERIOR, low=0.1, high=2.0):
        while True:
            r = SideLengths.euclidean(rng.uniform(low, high, size=n))
            if euclidean_feasibility(r).verdict is verdict:
                return r

    return draw
