import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from billiard_product.errors import DegenerateInput
from billiard_product.geom import ConvexPolygon, diameter, regular_polygon
from billiard_product.steiner import altitude_lines, steiner_beta_any_axis, steiner_beta_report
from billiard_product.verify import rng_triangle

from conftest import SQRT3


def test_right_triangle_counterexample(right_triangle):
    before, after = steiner_beta_any_axis(right_triangle, (0, 0), (1, 0))
    assert before == pytest.approx(8.0, abs=1e-9)
    assert after == pytest.approx(16 / math.sqrt(5), abs=1e-9)


def test_right_triangle_own_altitude(right_triangle):
    rep = steiner_beta_report(right_triangle)
    ax = [a for a in rep.axes if a.vertex == 2][0]
    assert abs(ax.delta) < 1e-12
    assert np.allclose(sorted(map(tuple, ax.symmetrized.vertices)), sorted(map(tuple, right_triangle.vertices)))


def test_equilateral_all_zero(equilateral):
    rep = steiner_beta_report(equilateral)
    assert all(abs(a.delta) < 1e-9 for a in rep.axes)


def test_scalene_nonnegative():
    rep = steiner_beta_report([(0, 0), (1, 0), (0.7, 0.5)])
    assert rep.holds
    assert all(a.delta >= -1e-9 and a.isosceles for a in rep.axes)
    assert all(a.delta == pytest.approx(a.beta - rep.original_beta, abs=1e-12) for a in rep.axes)


def test_symmetric_body_any_axis():
    b0, b1 = steiner_beta_any_axis(regular_polygon(6), (0, 0), (0, 1))
    assert b0 == pytest.approx(b1, abs=1e-9)


def test_equilateral_bisector(equilateral):
    b0, b1 = steiner_beta_any_axis(equilateral, (0.5, 0), (0, 1))
    assert b0 == pytest.approx(b1, abs=1e-9)


def test_not_triangle(square):
    with pytest.raises(DegenerateInput):
        steiner_beta_report(square)


def test_outer_altitude_flag():
    lines = altitude_lines(ConvexPolygon([(0, 0), (1, 0), (1.3, 0.2)]))
    assert sum(outer for _, _, outer in lines) == 2


@given(st.integers(0, 10**6))
def test_claim(seed):
    T = rng_triangle(np.random.default_rng(seed))
    rep = steiner_beta_report(T)
    assert rep.holds
    for a in rep.axes:
        assert a.isosceles
        assert diameter(a.symmetrized)[0] <= diameter(T)[0] + 1e-9


def test_case_coverage():
    """Random triangles reach every case of the altitude argument."""
    rng = np.random.default_rng(7)
    seen = set()
    for _ in range(300):
        for a in steiner_beta_report(rng_triangle(rng)).axes:
            seen.add((a.before_kind, a.after_kind, a.outer))
            if a.before_kind == "obtuse" and a.after_kind == "obtuse" and not a.outer:
                # inner altitude of an obtuse triangle keeps the shortest orbit
                assert abs(a.delta) < 1e-9
            if a.before_kind == "obtuse" and not a.outer:
                assert a.after_kind != "acute"
    for case in [("obtuse", "obtuse"), ("acute", "obtuse"), ("acute", "acute")]:
        assert any(s[:2] == case for s in seen)
