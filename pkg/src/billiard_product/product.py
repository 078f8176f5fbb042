"""Billiard product ``beta = 8 alpha / diam`` and lengths of orbits in duals.

Infinite lengths (duals without closed orbits) are reported as ``math.inf``.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from .billiard import alpha_polygon
from .dual import _check_triangle, dual_width, polar_dual
from .errors import BadAngle, DegenerateInput, NotInAcuteRegion, NumericalFailure
from .geom import TOL, ConvexPolygon, diameter, diameter_pairs


@dataclass
class ProductReport:
    alpha: float
    diameter: float
    beta: float
    orbit_kind: str
    santalo_min: float | None = None
    santalo_argmin: tuple[float, float] | None = None
    grid_resolution: int | None = None

    def to_json(self) -> dict:
        return asdict(self)


def billiard_product(P: ConvexPolygon, scan_resolution: int | None = None) -> ProductReport:
    """``8 alpha(P) / diam(P)``; optionally also run a Santalo-point scan."""
    if not isinstance(P, ConvexPolygon):
        P = ConvexPolygon(P)
    orbit = alpha_polygon(P)
    d = diameter(P)[0]
    rep = ProductReport(orbit.length, d, 8.0 * orbit.length / d, orbit.kind)
    if scan_resolution is not None:
        smin, arg = santalo_scan(P, scan_resolution)
        rep.santalo_min = smin
        rep.santalo_argmin = (float(arg[0]), float(arg[1]))
        rep.grid_resolution = scan_resolution
    return rep


def alpha_dual_at(P: ConvexPolygon, z) -> float:
    """Shortest orbit length in ``P^z``.

    Interior centers give a bounded dual.  Exterior centers give ``inf``
    (the dual contains a sector).  A center in the relative interior of an
    edge gives a dual that is bounded only along that edge; the value is
    twice the width in that direction.  Vertex centers give ``inf``.
    """
    z = np.asarray(z, dtype=float)
    s = P.signed_distance(z)
    if s < -TOL:
        return alpha_polygon(polar_dual(P, z).polygon).length
    if s > TOL:
        return math.inf
    if np.min(np.linalg.norm(P.vertices - z, axis=1)) <= TOL:
        return math.inf
    D = polar_dual(P, z)
    best = math.inf
    for j in np.nonzero(np.abs(P.normals @ z - P.offsets) <= TOL)[0]:
        u = P.edges[j] / P.edge_lengths[j]
        best = min(best, 2.0 * dual_width(D, u))
    return best


def _interior_grid(P: ConvexPolygon, resolution: int) -> tuple[np.ndarray, float]:
    lo = P.vertices.min(axis=0)
    hi = P.vertices.max(axis=0)
    xs = np.linspace(lo[0], hi[0], resolution)
    ys = np.linspace(lo[1], hi[1], resolution)
    g = np.array(np.meshgrid(xs, ys, indexing="xy")).reshape(2, -1).T
    inside = np.max(g @ P.normals.T - P.offsets, axis=1) < -TOL
    step = float(max(hi - lo)) / (resolution - 1)
    return g[inside], step


def santalo_scan(P: ConvexPolygon, resolution: int, tol: float = 1e-6, max_iter: int = 10000):
    """Minimize ``alpha(P^z)`` over interior grid points and diameter midpoints.

    The best candidate is polished by compass search (axis steps, halving
    on failure) down to step ``tol``.  Returns ``(min, argmin)``.
    """
    if resolution < 8:
        raise DegenerateInput("resolution must be at least 8")
    grid, step = _interior_grid(P, resolution)
    mids = np.array([(P.vertices[i] + P.vertices[j]) / 2 for i, j in diameter_pairs(P)])
    cand = np.vstack([mids, grid])
    vals = np.array([alpha_dual_at(P, z) for z in cand])
    k = int(np.argmin(vals))
    z, best = cand[k].copy(), float(vals[k])
    h = step
    moves = np.array([[1.0, 0.0], [-1.0, 0.0], [0.0, 1.0], [0.0, -1.0]])
    it = 0
    while h >= tol:
        it += 1
        if it > max_iter:
            raise NumericalFailure("santalo refinement did not converge")
        trial = z + h * moves
        tv = np.array([alpha_dual_at(P, t) for t in trial])
        j = int(np.argmin(tv))
        if tv[j] < best:
            z, best = trial[j], float(tv[j])
        else:
            h /= 2
    return best, z


# -- closed forms for triangles ----------------------------------------------


def _region_margin(v: np.ndarray, z: np.ndarray) -> float:
    """Min over sides of (half side length - distance to its midpoint)."""
    out = math.inf
    for i in range(3):
        a, b = v[i], v[(i + 1) % 3]
        out = min(out, np.linalg.norm(b - a) / 2 - np.linalg.norm(z - (a + b) / 2))
    return out


def alpha_dual_triangle_geometric(T: ConvexPolygon, z, vertex: int = 0) -> float:
    """``2 (1/|AZ| + 1/|ZD|) sin(BZC)`` with ``A`` the chosen vertex.

    ``D`` is where the ray from ``A`` through ``z`` meets the opposite side.
    Valid when the dual triangle is acute (closure of the three-disk region).
    """
    z = _check_triangle(T, z)
    v = T.vertices
    if _region_margin(v, z) < -1e-12:
        raise NotInAcuteRegion("z is outside the region where the dual triangle is acute")
    A, B, C = v[vertex % 3], v[(vertex + 1) % 3], v[(vertex + 2) % 3]
    u = z - A
    e = C - B
    # A + t u = B + s e
    M = np.column_stack([u, -e])
    t, _ = np.linalg.solve(M, B - A)
    Dp = A + t * u
    zb, zc = B - z, C - z
    sin_bzc = abs(zb[0] * zc[1] - zb[1] * zc[0]) / (np.linalg.norm(zb) * np.linalg.norm(zc))
    return 2.0 * (1.0 / np.linalg.norm(z - A) + 1.0 / np.linalg.norm(Dp - z)) * sin_bzc


def isosceles_triangle(phi: float) -> ConvexPolygon:
    """Legs of length 1, base angle ``phi``, apex on the positive y-axis."""
    return ConvexPolygon([(math.cos(phi), 0.0), (0.0, math.sin(phi)), (-math.cos(phi), 0.0)])


def alpha_dual_isosceles(phi: float, z) -> float:
    """``2 sin(2 phi) / |(z - a)(z - b)(z - c)|`` for the canonical isosceles triangle."""
    if not (math.pi / 3 - 1e-12 <= phi < math.pi / 2):
        raise BadAngle("base angle must lie in [pi/3, pi/2)")
    T = isosceles_triangle(phi)
    z = _check_triangle(T, z)
    if _region_margin(T.vertices, z) < -1e-12:
        raise NotInAcuteRegion("z is outside the region where the dual triangle is acute")
    dist = np.linalg.norm(T.vertices - z, axis=1)
    return 2.0 * math.sin(2 * phi) / float(np.prod(dist))
