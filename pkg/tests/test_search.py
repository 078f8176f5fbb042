import math

import numpy as np
import pytest

from billiard_product.errors import BadParameter
from billiard_product.geom import ConvexPolygon, diameter, min_width
from billiard_product.search import (
    CONJECTURED_BETA,
    CONJECTURED_QUAD,
    beta_of,
    edge_mode_quad,
    isosceles_bound,
    quad_search,
    regular_polygon_table,
    reuleaux_polygon,
    triangle_max_scan,
    truncate_regular_odd,
)


def test_table_values():
    rows = {r.n: r for r in regular_polygon_table(12)}
    assert rows[3].alpha == pytest.approx(3 * math.sqrt(3) / 2) and rows[3].beta == pytest.approx(12)
    assert rows[4].alpha == pytest.approx(2 * math.sqrt(2)) and rows[4].diameter == pytest.approx(2)
    assert rows[5].alpha == pytest.approx(3.6180340, abs=1e-7)
    assert rows[5].diameter == pytest.approx(1.9021130, abs=1e-7)
    assert rows[5].beta == pytest.approx(15.2169042, abs=1e-7)
    for r in rows.values():
        assert abs(r.alpha - r.alpha_formula) < 1e-6
        assert abs(r.beta - r.beta_formula) < 1e-6
        assert r.beta == pytest.approx(8 * r.alpha / r.diameter, abs=1e-9)
    for n in (3, 5, 7, 9, 11):
        assert rows[n].beta > rows[n + 1].beta


def test_table_bad():
    with pytest.raises(BadParameter):
        regular_polygon_table(2)


def test_isosceles_curve():
    assert isosceles_bound(math.pi / 3) == pytest.approx(12.0)
    phi = np.linspace(0, math.pi / 3, 500)
    assert np.all(np.diff(isosceles_bound(phi)) > 0)


def test_triangle_scan_small():
    r = triangle_max_scan(40)
    assert 12 - 1e-3 <= r.best_beta <= 12 + 1e-9
    assert r.checks["argmax_within_step"]
    assert r.best_beta == pytest.approx(beta_of(r.best_shape), abs=1e-9)


def test_conjectured_quad():
    P = ConvexPolygon(CONJECTURED_QUAD)
    assert diameter(P)[0] == pytest.approx(1.0)
    assert beta_of(P) == pytest.approx(CONJECTURED_BETA, abs=1e-9)
    assert beta_of(ConvexPolygon(edge_mode_quad(math.pi / 6, math.pi / 3))) == pytest.approx(CONJECTURED_BETA, abs=1e-9)


def test_quad_search_edge_small():
    with pytest.warns(UserWarning):
        r = quad_search("edge", 22)
    assert r.best_beta >= CONJECTURED_BETA - 1e-6
    assert r.best_beta <= 16 + 1e-9
    assert r.best_beta == pytest.approx(beta_of(r.best_shape), abs=1e-9)


def test_improved_quadrilateral():
    """The edge-mode optimum beats the conjectured shape; three routes confirm it."""
    from billiard_product.billiard import alpha_bruteforce, alpha_polygon, validate_orbit
    from billiard_product.geom import convex_hull

    P = convex_hull(edge_mode_quad(0.5486297181470308, 1.034298640460632))
    assert diameter(P)[0] == pytest.approx(1.0, abs=1e-12)
    o = alpha_polygon(P)
    assert validate_orbit(P, o)
    assert o.length == pytest.approx(1.6734647919530312, abs=1e-12)
    assert 8 * o.length > CONJECTURED_BETA + 3e-3
    assert 0 <= alpha_bruteforce(P, 120) - o.length <= 1e-3


def test_quad_search_bad():
    with pytest.raises(BadParameter):
        quad_search("corner", 32)
    with pytest.raises(BadParameter):
        quad_search("edge", 8)


def test_truncate_triangle():
    T = truncate_regular_odd(3, 1e-3)
    assert len(T) == 4
    assert 11.9 <= beta_of(T) <= 12 + 1e-9
    assert beta_of(T) > 16 * math.cos(math.pi / 4)


def test_truncate_pentagon():
    T = truncate_regular_odd(5, 1e-3)
    assert len(T) == 6
    assert beta_of(T) >= 15.1 > 16 * math.cos(math.pi / 6)
    assert abs(diameter(T)[0] - 2 * math.cos(math.pi / 10)) < 1e-9


@pytest.mark.parametrize("n, eps", [(4, 0.01), (5, 0.0), (3, 1.6), (5, -1)])
def test_truncate_bad(n, eps):
    with pytest.raises(BadParameter):
        truncate_regular_odd(n, eps)


def test_reuleaux():
    R = reuleaux_polygon(1.0, 300)
    assert 1 - 1e-6 <= diameter(R)[0] <= 1 + 1e-12
    assert 15.95 <= beta_of(R) <= 16 + 1e-9
    assert min_width(R)[0] / diameter(R)[0] >= 1 - 10 / 300**2
    R2 = reuleaux_polygon(2.0, 300)
    assert diameter(R2)[0] == pytest.approx(2 * diameter(R)[0])
    assert beta_of(R2) == pytest.approx(beta_of(R), abs=1e-9)


@pytest.mark.parametrize("n", [27, 31, 100])
def test_reuleaux_bad(n):
    with pytest.raises(BadParameter):
        reuleaux_polygon(1.0, n)
