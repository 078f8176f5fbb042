import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from billiard_product.errors import BadAngle, NotInAcuteRegion, NotInterior
from billiard_product.geom import ConvexPolygon, apply_similarity, diameter, regular_polygon
from billiard_product.product import (
    alpha_dual_at,
    alpha_dual_isosceles,
    alpha_dual_triangle_geometric,
    billiard_product,
    isosceles_triangle,
    santalo_scan,
)
from billiard_product.verify import rng_admissible_pair, rng_interior_point, rng_similarity

from conftest import SQRT3, polygons


class TestBeta:
    def test_equilateral(self, equilateral):
        assert billiard_product(equilateral).beta == pytest.approx(12.0, abs=1e-9)

    def test_hexagon(self, hexagon):
        assert billiard_product(hexagon).beta == pytest.approx(16 * math.cos(math.pi / 6), abs=1e-9)

    def test_right_triangle(self, right_triangle):
        assert billiard_product(right_triangle).beta == pytest.approx(8.0)

    def test_report_fields(self, square):
        rep = billiard_product(square, scan_resolution=20)
        assert rep.beta == pytest.approx(8 * rep.alpha / rep.diameter, abs=1e-12)
        assert rep.santalo_min == pytest.approx(8 / math.sqrt(2), rel=1e-6)
        assert rep.to_json()["grid_resolution"] == 20

    @given(polygons())
    def test_global_bound(self, P):
        assert billiard_product(P).beta <= 16 + 1e-9

    @given(polygons(), st.integers(0, 10**6))
    def test_similarity_invariance(self, P, seed):
        Q = apply_similarity(P, rng_similarity(np.random.default_rng(seed)))
        assert abs(billiard_product(P).beta - billiard_product(Q).beta) <= 1e-9

    @given(st.integers(0, 10**6))
    def test_triangle_bound(self, seed):
        from billiard_product.verify import rng_triangle

        assert billiard_product(rng_triangle(np.random.default_rng(seed))).beta <= 12 + 1e-9


class TestDualAlpha:
    def test_equilateral_centroid(self, equilateral):
        assert alpha_dual_at(equilateral, equilateral.centroid) == pytest.approx(9.0)

    def test_outside(self, equilateral):
        assert alpha_dual_at(equilateral, (2, 2)) == math.inf

    def test_edge_midpoint(self, equilateral):
        assert alpha_dual_at(equilateral, (0.5, 0)) == pytest.approx(8.0, abs=1e-9)

    def test_vertex(self, equilateral):
        assert alpha_dual_at(equilateral, (0, 0)) == math.inf

    def test_edge_point_formula(self, square):
        # z splits the bottom edge into a and 1 - a
        a = 0.3
        assert alpha_dual_at(square, (a, 0)) == pytest.approx(2 / (a * (1 - a)))

    @given(polygons(), st.integers(0, 10**6))
    def test_lower_bound(self, P, seed):
        z = rng_interior_point(np.random.default_rng(seed), P)
        assert alpha_dual_at(P, z) >= 8 / diameter(P)[0] - 1e-6


class TestSantalo:
    def test_hexagon(self, hexagon):
        m, z = santalo_scan(hexagon, 60)
        assert m == pytest.approx(4.0, abs=1e-6)
        assert np.linalg.norm(z) < 1e-3

    def test_square(self, square):
        m, z = santalo_scan(square, 60)
        assert m == pytest.approx(8 / math.sqrt(2), abs=1e-6)
        assert np.allclose(z, [0.5, 0.5], atol=1e-3)

    def test_equilateral_boundary_midpoint(self, equilateral):
        m, _ = santalo_scan(equilateral, 20)
        assert m == pytest.approx(8.0, abs=1e-6)

    def test_small_grid(self, square):
        from billiard_product.errors import DegenerateInput

        with pytest.raises(DegenerateInput):
            santalo_scan(square, 4)

    @settings(max_examples=5)
    @given(polygons(3, 8))
    def test_random(self, P):
        m, _ = santalo_scan(P, 30)
        target = 8 / diameter(P)[0]
        assert target - 1e-6 <= m <= 1.01 * target


class TestTriangleFormulas:
    def test_geometric_centroid(self, equilateral):
        vals = [alpha_dual_triangle_geometric(equilateral, equilateral.centroid, k) for k in range(3)]
        assert np.allclose(vals, 9.0)

    def test_isosceles_centroid(self):
        assert alpha_dual_isosceles(math.pi / 3, (0, SQRT3 / 6)) == pytest.approx(9.0)

    def test_isosceles_value(self):
        v = alpha_dual_isosceles(math.pi / 3, (0, 0.2))
        assert v == pytest.approx(SQRT3 / ((SQRT3 / 2 - 0.2) * 0.29), abs=1e-12)
        assert v == pytest.approx(1.7320508 / 0.1931474, abs=1e-5)
        assert v == pytest.approx(8.9670, abs=1e-3)
        assert v == pytest.approx(alpha_dual_at(isosceles_triangle(math.pi / 3), (0, 0.2)), abs=1e-6)

    def test_right_angle_arc(self):
        phi = 1.2
        T = isosceles_triangle(phi)
        c = math.cos(phi)
        z = np.array([c * math.cos(1.3), c * math.sin(1.3)])  # on the semicircle over the base
        A = T.vertices[1]
        u = z - A
        D = A + (-A[1] / u[1]) * u
        expected = 2 * (1 / np.linalg.norm(z - A) + 1 / np.linalg.norm(D - z))
        assert alpha_dual_triangle_geometric(T, z, 1) == pytest.approx(expected, abs=1e-9)

    def test_bad_angle(self):
        with pytest.raises(BadAngle):
            alpha_dual_isosceles(0.9, (0, 0.2))
        with pytest.raises(BadAngle):
            alpha_dual_isosceles(math.pi / 2, (0, 0.2))

    def test_outside_region(self, equilateral):
        with pytest.raises(NotInAcuteRegion):
            alpha_dual_triangle_geometric(equilateral, (0.02, 0.01))
        with pytest.raises(NotInAcuteRegion):
            alpha_dual_isosceles(math.pi / 3, (0.48, 0.01))

    def test_not_interior(self, equilateral):
        with pytest.raises(NotInterior):
            alpha_dual_triangle_geometric(equilateral, (0.5, -1))

    @given(st.integers(0, 10**6))
    def test_three_routes_agree(self, seed):
        T, z = rng_admissible_pair(np.random.default_rng(seed))
        g = [alpha_dual_triangle_geometric(T, z, k) for k in range(3)]
        assert max(g) - min(g) < 1e-9
        assert g[0] == pytest.approx(alpha_dual_at(T, z), abs=1e-6)

    @given(st.floats(math.pi / 3, math.pi / 2 - 0.05), st.floats(0.05, 0.95), st.floats(0.05, 0.95))
    def test_isosceles_agrees(self, phi, s, t):
        T = isosceles_triangle(phi)
        z = np.array([(2 * s - 1) * math.cos(phi) * (1 - t), t * math.sin(phi) * 0.9])
        from billiard_product.dual import acute_dual_region_contains

        if not T.is_interior(z) or not acute_dual_region_contains(T, z):
            return
        iso = alpha_dual_isosceles(phi, z)
        assert iso == pytest.approx(alpha_dual_triangle_geometric(T, z), abs=1e-6)
        assert iso == pytest.approx(alpha_dual_at(T, z), abs=1e-6)
