"""Polar duals ``K^z = {y : <x - z, y> <= 1 for all x in K}`` of polygons."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotInterior, NotTriangle
from .geom import TOL, ConvexPolygon, _cross

ACUTE_TOL = 1e-7


@dataclass(frozen=True, eq=False)
class DualBody:
    """Either a bounded polygon or an unbounded intersection of half-planes.

    Unbounded duals keep one constraint ``<a_j, y> <= c_j`` per primal
    vertex as rows ``[a1, a2, c]`` of ``halfplanes``.
    """

    bounded: bool
    center: np.ndarray
    source: ConvexPolygon
    polygon: ConvexPolygon | None = None
    halfplanes: np.ndarray | None = None

    def to_json(self) -> dict:
        if self.bounded:
            return {"bounded": True, "vertices": self.polygon.vertices.tolist()}
        return {"bounded": False, "halfplanes": self.halfplanes.tolist()}


def polar_dual(P: ConvexPolygon, z) -> DualBody:
    """Dual of ``P`` about ``z``.

    For interior ``z`` primal edge ``j`` maps to the dual vertex
    ``n_j / (b_j - <n_j, z>)``.  Centers on the boundary (closer than 1e-9)
    or outside give an unbounded dual, kept in half-plane form.
    """
    z = np.asarray(z, dtype=float)
    d = P.offsets - P.normals @ z
    if d.min() > TOL:
        return DualBody(True, z, P, polygon=ConvexPolygon(P.normals / d[:, None]))
    hp = np.column_stack([P.vertices - z, np.ones(len(P))])
    return DualBody(False, z, P, halfplanes=hp)


def dual_of_dual_roundtrip(P: ConvexPolygon, z) -> ConvexPolygon:
    """Dualize twice (second time about the origin) and shift back by ``z``."""
    z = np.asarray(z, dtype=float)
    if not P.is_interior(z):
        raise NotInterior("center must lie strictly inside the polygon")
    inner = polar_dual(P, z).polygon
    back = polar_dual(inner, np.zeros(2)).polygon
    return ConvexPolygon(back.vertices + z)


def _check_triangle(T: ConvexPolygon, z) -> np.ndarray:
    if len(T) != 3:
        raise NotTriangle(f"expected a triangle, got {len(T)} vertices")
    z = np.asarray(z, dtype=float)
    if not T.is_interior(z):
        raise NotInterior("point must lie strictly inside the triangle")
    return z


def acute_dual_region_contains(T: ConvexPolygon, z) -> bool:
    """True iff ``z`` lies in all three disks having the sides as diameters."""
    z = _check_triangle(T, z)
    v = T.vertices
    for i in range(3):
        a, b = v[i], v[(i + 1) % 3]
        if np.linalg.norm(z - (a + b) / 2) >= np.linalg.norm(b - a) / 2:
            return False
    return True


def dual_triangle_is_acute(T: ConvexPolygon, z, tol: float = ACUTE_TOL) -> bool:
    """Direct check: build ``T^z`` and compare its angles with a right angle."""
    z = _check_triangle(T, z)
    v = polar_dual(T, z).polygon.vertices
    for i in range(3):
        a, b = v[(i + 1) % 3] - v[i], v[(i + 2) % 3] - v[i]
        ang = np.arctan2(abs(_cross(a, b)), np.dot(a, b))
        if ang >= np.pi / 2 - tol:
            return False
    return True


def dual_width(D: DualBody, u) -> float:
    """Width of the dual body in direction ``u`` (``inf`` when unbounded that way)."""
    u = np.asarray(u, dtype=float)
    if D.bounded:
        return D.polygon.support(u) + D.polygon.support(-u)
    return _halfplane_support(D.halfplanes, u) + _halfplane_support(D.halfplanes, -u)


def _halfplane_support(hp: np.ndarray, u: np.ndarray) -> float:
    """``sup <u, y>`` over ``{y : <a_j, y> <= c_j}`` (via a tiny LP)."""
    from scipy.optimize import linprog

    res = linprog(-u, A_ub=hp[:, :2], b_ub=hp[:, 2], bounds=[(None, None)] * 2, method="highs")
    if res.status == 3:
        return np.inf
    if res.status != 0:
        raise RuntimeError(f"support LP failed: {res.message}")
    return -res.fun
