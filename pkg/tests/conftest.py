import numpy as np
import pytest

from dbslab.geometry import ConvexPolygon, regular_polygon, unit_disk
from dbslab.kernels import available_backends


@pytest.fixture
def unit_square():
    return ConvexPolygon([(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)])


@pytest.fixture
def hexagon():
    return regular_polygon(6, 1.0, "inscribed")


@pytest.fixture
def disk():
    return unit_disk()


@pytest.fixture(params=available_backends())
def backend(request):
    """Run a test once per available kernel backend."""
    return request.param


# A few irregular strictly convex polygons for property checks.
IRREGULAR_POLYGONS = [
    [(0.0, 0.0), (2.0, 0.1), (2.5, 1.4), (1.0, 2.2), (-0.4, 1.0)],
    [(1.0, -1.0), (3.0, 0.0), (2.8, 2.5), (0.2, 2.0), (-0.5, 0.3)],
    [(0.0, 0.0), (1.0, -0.2), (1.9, 0.5), (1.4, 1.6)],
]


@pytest.fixture(params=range(len(IRREGULAR_POLYGONS)))
def irregular_polygon(request):
    return ConvexPolygon(IRREGULAR_POLYGONS[request.param])


def rng(seed=0):
    return np.random.default_rng(seed)
