"""Shape-space experiments on the billiard product.

All scans normalize the diameter to 1 where a parametrization allows it,
so that ``beta = 8 alpha``.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize

from .billiard import alpha_polygon, alpha_triangle, triangle_angles
from .errors import BadParameter, GeometryError
from .geom import ConvexPolygon, convex_hull, diameter, regular_polygon

CONJECTURED_QUAD = np.array([(-0.5, 0.0), (0.0, math.sqrt(3) / 2 - 1), (0.5, 0.0), (0.0, math.sqrt(3) / 2)])
CONJECTURED_BETA = 8 * math.sqrt(3) * math.cos(math.pi / 12)
NM_OPTIONS = {"xatol": 1e-8, "fatol": 1e-8, "maxiter": 4000}


@dataclass
class TableRow:
    n: int
    alpha: float
    diameter: float
    beta: float
    alpha_formula: float
    beta_formula: float

    def to_json(self) -> dict:
        return dict(vars(self))


@dataclass
class SearchResult:
    best_beta: float
    best_shape: ConvexPolygon
    parameters: list[float]
    evaluations: int
    checks: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "best_beta": self.best_beta,
            "best_shape": self.best_shape.vertices.tolist(),
            "parameters": list(self.parameters),
            "evaluations": self.evaluations,
            "checks": self.checks,
        }


def beta_of(P: ConvexPolygon) -> float:
    return 8.0 * alpha_polygon(P).length / diameter(P)[0]


# -- regular polygons -------------------------------------------------------


def regular_alpha_formula(n: int) -> float:
    if n == 3:
        return 3 * math.sqrt(3) / 2
    if n % 2:
        return 2 * (1 + math.cos(math.pi / n))
    return 4 * math.cos(math.pi / n)


def regular_beta_formula(n: int) -> float:
    if n == 3:
        return 12.0
    if n % 2:
        return 16 * math.cos(math.pi / (2 * n))
    return 16 * math.cos(math.pi / n)


def regular_polygon_table(n_max: int) -> list[TableRow]:
    """Numeric alpha, diameter and beta of unit-circumradius regular n-gons."""
    if n_max < 3:
        raise BadParameter("n_max must be at least 3")
    rows = []
    for n in range(3, n_max + 1):
        P = regular_polygon(n)
        a = alpha_polygon(P).length
        d = diameter(P)[0]
        rows.append(TableRow(n, a, d, 8 * a / d, regular_alpha_formula(n), regular_beta_formula(n)))
    return rows


# -- triangles --------------------------------------------------------------


def triangle_from_base_angles(ta: float, tb: float) -> np.ndarray:
    """Triangle on the base [0, 1] with the given base angles."""
    tc = math.pi - ta - tb
    r = math.sin(tb) / math.sin(tc)
    return np.array([(0.0, 0.0), (1.0, 0.0), (r * math.cos(ta), r * math.sin(ta))])


def _triangle_beta(ta: float, tb: float) -> float:
    if ta <= 0 or tb <= 0 or ta + tb >= math.pi:
        return 0.0
    v = triangle_from_base_angles(ta, tb)
    d = max(np.linalg.norm(v - np.roll(v, 1, axis=0), axis=1))
    try:
        return 8.0 * alpha_triangle(v).length / d
    except GeometryError:
        return 0.0


def isosceles_bound(phi):
    """Upper bound curve for isosceles triangles with base angle ``phi``."""
    return 32 * np.cos(phi / 2) ** 2 * np.sin(phi / 2)


def triangle_max_scan(resolution: int) -> SearchResult:
    """Grid over the two base angles in (0, pi/2], then Nelder-Mead.

    Only triangles whose base is a longest side are needed, so both base
    angles are at most the apex angle; the grid still covers all of
    (0, pi/2] x (0, pi/2] and lets the evaluation sort out the rest.
    """
    if resolution < 16:
        raise BadParameter("resolution must be at least 16")
    grid = np.linspace(0.0, math.pi / 2, resolution)
    step = float(grid[1] - grid[0])
    vals = np.array([[_triangle_beta(a, b) for b in grid] for a in grid])
    i, j = np.unravel_index(int(np.argmax(vals)), vals.shape)
    x0 = np.array([grid[i], grid[j]])
    res = minimize(lambda x: -_triangle_beta(*x), x0, method="Nelder-Mead", options=NM_OPTIONS)
    x = res.x if -res.fun >= vals[i, j] else x0
    best = max(-float(res.fun), float(vals[i, j]))
    near = vals > 11.99
    angle_dev = 0.0
    for a, b in zip(grid[np.nonzero(near)[0]], grid[np.nonzero(near)[1]]):
        ang = triangle_angles(triangle_from_base_angles(a, b))
        angle_dev = max(angle_dev, float(np.max(np.abs(ang - math.pi / 3))))
    phis = np.linspace(0.0, math.pi / 3, 1001)
    curve = isosceles_bound(phis)
    checks = {
        "grid_step": step,
        "argmax_grid": [float(grid[i]), float(grid[j])],
        "argmax_within_step": bool(np.all(np.abs(x - math.pi / 3) <= step)),
        "grid_points_above_11_99": int(near.sum()),
        "max_angle_dev_above_11_99_deg": math.degrees(angle_dev),
        "isosceles_curve_monotone": bool(np.all(np.diff(curve) > 0)),
        "isosceles_curve_at_pi_3": float(isosceles_bound(math.pi / 3)),
    }
    shape = ConvexPolygon(triangle_from_base_angles(*x))
    return SearchResult(best, shape, [float(t) for t in x], resolution**2 + int(res.nfev), checks)


# -- quadrilaterals ---------------------------------------------------------


def edge_mode_quad(u: float, w: float) -> np.ndarray:
    """Diameter edge ``AB = [(-1/2, 0), (1/2, 0)]`` with diagonals pushed out.

    ``C'`` sits on the ray from ``A`` at angle ``u`` and ``D'`` on the ray
    from ``B`` at angle ``w`` (measured from ``BA``); each is extended to
    length 1 or until it reaches the unit circle about the other endpoint.
    """
    A, B = np.array([-0.5, 0.0]), np.array([0.5, 0.0])
    C = A + min(1.0, 2 * math.cos(u)) * np.array([math.cos(u), math.sin(u)])
    D = B + min(1.0, 2 * math.cos(w)) * np.array([-math.cos(w), math.sin(w)])
    return np.array([A, B, C, D])


def diagonal_mode_quad(s: float, t: float, lam: float) -> np.ndarray:
    """Diameter diagonal ``AC = [(-1/2, 0), (1/2, 0)]``.

    ``B`` lies below the axis on the ray from ``A`` at angle ``-s``, pushed
    to length 1 or to the unit circle about ``C``.  ``D`` lies above on the
    ray from ``C`` at angle ``pi - t``, at fraction ``lam`` of its maximal
    extension.  Shapes whose diameter exceeds 1 are rejected by the caller.
    """
    A, C = np.array([-0.5, 0.0]), np.array([0.5, 0.0])
    B = A + min(1.0, 2 * math.cos(s)) * np.array([math.cos(s), -math.sin(s)])
    D = C + lam * min(1.0, 2 * math.cos(t)) * np.array([-math.cos(t), math.sin(t)])
    return np.array([A, B, C, D])


def _quad_beta(pts: np.ndarray) -> tuple[float, ConvexPolygon | None]:
    try:
        P = convex_hull(pts)
    except GeometryError:
        return 0.0, None
    d = diameter(P)[0]
    if d > 1 + 1e-9:
        return 0.0, None
    return 8.0 * alpha_polygon(P).length / d, P


def quad_search(mode: str, resolution: int) -> SearchResult:
    """Maximize beta over quadrilaterals of diameter 1 (grid, then Nelder-Mead).

    ``mode`` is ``"edge"`` (2 angles) or ``"diagonal"`` (2 angles and an
    extension fraction on a coarser axis).  A result above the conjectured
    maximum is flagged in ``checks`` and raised as a warning.
    """
    if resolution < 16:
        raise BadParameter("resolution must be at least 16")
    ang = np.linspace(0.0, math.pi / 2, resolution)[1:]
    if mode == "edge":
        build = edge_mode_quad
        grid = [(u, w) for u in ang for w in ang]
        lo, hi = np.zeros(2), np.full(2, math.pi / 2)
    elif mode == "diagonal":
        build = diagonal_mode_quad
        lams = np.linspace(0.0, 1.0, max(8, resolution // 4))[1:]
        grid = [(s, t, lam) for s in ang for t in ang for lam in lams]
        lo, hi = np.zeros(3), np.array([math.pi / 2, math.pi / 2, 1.0])
    else:
        raise BadParameter(f"unknown mode {mode!r}")

    vals = np.array([_quad_beta(build(*g))[0] for g in grid])
    k = int(np.argmax(vals))
    x0 = np.array(grid[k])

    def obj(x):
        if np.any(x < lo) or np.any(x > hi):
            return 0.0
        return -_quad_beta(build(*x))[0]

    res = minimize(obj, x0, method="Nelder-Mead", options=NM_OPTIONS)
    x = res.x if -res.fun > vals[k] else x0
    best, shape = _quad_beta(build(*x))
    beaten = best > CONJECTURED_BETA + 1e-6
    if beaten:
        warnings.warn(f"quad_search found beta={best:.10f} above the conjectured {CONJECTURED_BETA:.10f}")
    checks = {
        "mode": mode,
        "conjectured_beta": CONJECTURED_BETA,
        "conjecture_beaten": bool(beaten),
        "reaches_conjecture": bool(best >= CONJECTURED_BETA - 1e-6),
        "grid_best": float(vals[k]),
    }
    return SearchResult(float(best), shape, [float(t) for t in x], len(grid) + int(res.nfev), checks)


# -- special families -------------------------------------------------------


def truncate_regular_odd(n: int, eps: float) -> ConvexPolygon:
    """Cut the top vertex of the unit-circumradius ``R_n`` by ``y = 1 - eps``."""
    if n < 3 or n % 2 == 0:
        raise BadParameter("n must be an odd integer >= 3")
    if not (0 < eps < 1 - math.cos(2 * math.pi / n)):
        raise BadParameter("eps must lie in (0, 1 - cos(2 pi / n))")
    v = regular_polygon(n).vertices
    top, nxt, prv = v[0], v[1], v[-1]
    y = 1 - eps
    cut = [top + (y - top[1]) / (q[1] - top[1]) * (q - top) for q in (prv, nxt)]
    return ConvexPolygon(np.vstack([cut[1], v[1:], cut[0]]))


def reuleaux_polygon(width: float, n: int) -> ConvexPolygon:
    """Inscribed ``n``-gon of a Reuleaux triangle of the given width.

    Each of the three arcs gets ``n / 3`` points, its starting corner
    included.  The corners sit on the centered equilateral triangle.
    """
    if n < 30 or n % 3:
        raise BadParameter("n must be a multiple of 3 and at least 30")
    if not width > 0:
        raise BadParameter("width must be positive")
    m = n // 3
    R = width / math.sqrt(3)
    corner_ang = math.pi / 2 + 2 * math.pi / 3 * np.arange(3)
    corners = R * np.column_stack([np.cos(corner_ang), np.sin(corner_ang)])
    pts = []
    for i in range(3):
        c = corners[i]
        a = corners[(i + 1) % 3]
        t0 = math.atan2(a[1] - c[1], a[0] - c[0])
        t = t0 + (math.pi / 3) * np.arange(m) / m
        pts.append(c + width * np.column_stack([np.cos(t), np.sin(t)]))
    return ConvexPolygon(np.vstack(pts))
