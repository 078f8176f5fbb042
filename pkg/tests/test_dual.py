import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from billiard_product.dual import (
    acute_dual_region_contains,
    dual_of_dual_roundtrip,
    dual_triangle_is_acute,
    dual_width,
    polar_dual,
)
from billiard_product.errors import NotInterior, NotTriangle
from billiard_product.geom import ConvexPolygon, hausdorff_distance
from billiard_product.verify import rng_interior_point, rng_triangle

from conftest import SQRT3, polygons

SQUARE2 = ConvexPolygon([(-1, -1), (1, -1), (1, 1), (-1, 1)])
DIAMOND = ConvexPolygon([(1, 0), (0, 1), (-1, 0), (0, -1)])


def test_square_cross_polytope():
    D = polar_dual(SQUARE2, (0, 0))
    assert D.bounded
    assert hausdorff_distance(D.polygon, DIAMOND) < 1e-12


@given(polygons(), st.floats(1.3, 5), st.floats(0, 2 * math.pi))
def test_outside_center_unbounded(P, r, t):
    z = r * np.array([math.cos(t), math.sin(t)])
    assert not polar_dual(P, z).bounded


def test_equilateral_centroid(equilateral):
    D = polar_dual(equilateral, equilateral.centroid).polygon
    assert len(D) == 3
    assert np.allclose(np.linalg.norm(D.vertices, axis=1), 2 * SQRT3)


def test_boundary_center_halfplanes(equilateral):
    D = polar_dual(equilateral, (0.5, 0))
    assert not D.bounded
    assert D.halfplanes.shape == (3, 3)
    assert dual_width(D, (1, 0)) == pytest.approx(4.0)
    assert dual_width(D, (0, 1)) == math.inf


def test_roundtrip_diamond():
    assert hausdorff_distance(dual_of_dual_roundtrip(DIAMOND, (0, 0)), DIAMOND) < 1e-12


@given(polygons())
def test_roundtrip_centroid(P):
    assert hausdorff_distance(dual_of_dual_roundtrip(P, P.centroid), P) < 1e-6


def test_roundtrip_boundary(square):
    with pytest.raises(NotInterior):
        dual_of_dual_roundtrip(square, (0.5, 0))


def test_acute_region_centroid(equilateral):
    assert acute_dual_region_contains(equilateral, equilateral.centroid)


def test_acute_region_near_vertex(equilateral):
    z = np.array([0, 0]) + 1e-3 * np.array([math.cos(math.pi / 6), math.sin(math.pi / 6)])
    assert not acute_dual_region_contains(equilateral, z)


def test_acute_region_errors(square, equilateral):
    with pytest.raises(NotTriangle):
        acute_dual_region_contains(square, (0.5, 0.5))
    with pytest.raises(NotInterior):
        acute_dual_region_contains(equilateral, (3, 3))


@given(st.integers(0, 10**6))
def test_acute_region_matches_construction(seed):
    rng = np.random.default_rng(seed)
    T = rng_triangle(rng)
    z = rng_interior_point(rng, T, 1e-3)
    assert acute_dual_region_contains(T, z) == dual_triangle_is_acute(T, z, tol=0.0)


def _ray_exit(P, z, u):
    """Distance from interior ``z`` to the boundary along ``u``."""
    nu = P.normals @ u
    gap = P.offsets - P.normals @ z
    return float(np.min(gap[nu > 1e-12] / nu[nu > 1e-12]))


@given(polygons(), st.integers(0, 10**6))
def test_chord_bounds_dual_width(P, seed):
    """A chord through z split into a and L - a caps the dual width at L / (a (L - a))."""
    rng = np.random.default_rng(seed)
    z = rng_interior_point(rng, P, 1e-3)
    t = rng.uniform(0, math.pi)
    u = np.array([math.cos(t), math.sin(t)])
    a, b = _ray_exit(P, z, u), _ray_exit(P, z, -u)
    assert dual_width(polar_dual(P, z), u) <= (a + b) / (a * b) + 1e-9


@given(polygons(), st.integers(0, 10**6))
def test_slab_gives_dual_segment(P, seed):
    """If P sits in a slab with pieces a, w - a around z, the dual holds n/a and -n/(w - a)."""
    rng = np.random.default_rng(seed)
    z = rng_interior_point(rng, P, 1e-3)
    t = rng.uniform(0, 2 * math.pi)
    n = np.array([math.cos(t), math.sin(t)])
    a, rest = P.support(n) - n @ z, P.support(-n) + n @ z
    D = polar_dual(P, z).polygon
    assert D.contains(n / a) and D.contains(-n / rest)
