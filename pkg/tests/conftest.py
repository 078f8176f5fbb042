import math

import numpy as np
import pytest
from hypothesis import settings, strategies as st

from billiard_product.geom import ConvexPolygon, random_polygon, regular_polygon

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

SQRT3 = math.sqrt(3)


def polygons(n_min=3, n_max=10):
    """Seeded random polygons; hypothesis shrinks over (n, seed)."""
    return st.builds(random_polygon, st.integers(n_min, n_max), st.integers(0, 2**31 - 1))


@pytest.fixture
def square():
    return ConvexPolygon([(0, 0), (1, 0), (1, 1), (0, 1)])


@pytest.fixture
def equilateral():
    return ConvexPolygon([(0, 0), (1, 0), (0.5, SQRT3 / 2)])


@pytest.fixture
def right_triangle():
    return ConvexPolygon([(-1, 0), (1, 0), (0, 1)])


@pytest.fixture
def hexagon():
    return regular_polygon(6, phase=0.0)


@pytest.fixture
def rng():
    return np.random.default_rng(20261016)
