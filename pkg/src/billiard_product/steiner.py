"""Steiner symmetrization and the billiard product.

For a triangle, symmetrizing about any altitude line never lowers beta.
Other axes can lower it (the right triangle about its hypotenuse line).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .billiard import triangle_angles
from .errors import DegenerateInput
from .geom import ConvexPolygon, steiner_symmetrize
from .product import billiard_product

BETA_TOL = 1e-9


def _kind(v: np.ndarray) -> str:
    m = float(np.max(triangle_angles(v)))
    if m > math.pi / 2 + 1e-9:
        return "obtuse"
    if m >= math.pi / 2 - 1e-9:
        return "right"
    return "acute"


def _is_isosceles(v: np.ndarray, tol: float = 1e-9) -> bool:
    s = np.sort(np.linalg.norm(v - np.roll(v, -1, axis=0), axis=1))
    return bool(s[1] - s[0] <= tol * s[2] or s[2] - s[1] <= tol * s[2])


@dataclass
class AxisResult:
    vertex: int
    point: tuple[float, float]
    direction: tuple[float, float]
    outer: bool
    symmetrized: ConvexPolygon
    beta: float
    delta: float
    before_kind: str
    after_kind: str
    isosceles: bool

    @property
    def holds(self) -> bool:
        return self.delta >= -BETA_TOL

    def to_json(self) -> dict:
        return {
            "vertex": self.vertex,
            "point": list(self.point),
            "direction": list(self.direction),
            "outer": self.outer,
            "symmetrized": self.symmetrized.vertices.tolist(),
            "beta": self.beta,
            "delta": self.delta,
            "before": self.before_kind,
            "after": self.after_kind,
            "isosceles": self.isosceles,
            "holds": self.holds,
        }


@dataclass
class SteinerReport:
    original_beta: float
    axes: list[AxisResult] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return all(a.holds for a in self.axes)

    def to_json(self) -> dict:
        return {"original_beta": self.original_beta, "holds": self.holds,
                "axes": [a.to_json() for a in self.axes]}


def altitude_lines(T: ConvexPolygon) -> list[tuple[np.ndarray, np.ndarray, bool]]:
    """``(point, direction, outer)`` for the altitude from each vertex.

    ``outer`` marks an altitude whose foot misses the opposite side.
    """
    v = T.vertices
    out = []
    for i in range(3):
        b, c = v[(i + 1) % 3], v[(i + 2) % 3]
        e = c - b
        n = np.array([-e[1], e[0]]) / np.linalg.norm(e)
        t = np.dot(v[i] - b, e) / np.dot(e, e)
        out.append((v[i].copy(), n, not (1e-12 < t < 1 - 1e-12)))
    return out


def steiner_beta_report(T) -> SteinerReport:
    """Symmetrize ``T`` about each altitude line and compare billiard products."""
    if not isinstance(T, ConvexPolygon):
        T = ConvexPolygon(T)
    if len(T) != 3:
        raise DegenerateInput(f"expected a triangle, got {len(T)} vertices")
    beta0 = billiard_product(T).beta
    rep = SteinerReport(beta0)
    for i, (p, d, outer) in enumerate(altitude_lines(T)):
        S = steiner_symmetrize(T, p, d)
        b = billiard_product(S).beta
        rep.axes.append(AxisResult(
            vertex=i, point=tuple(map(float, p)), direction=tuple(map(float, d)), outer=outer,
            symmetrized=S, beta=b, delta=b - beta0,
            before_kind=_kind(T.vertices),
            after_kind=_kind(S.vertices) if len(S) == 3 else "degenerate",
            isosceles=len(S) == 3 and _is_isosceles(S.vertices),
        ))
    return rep


def steiner_beta_any_axis(P, point, direction) -> tuple[float, float]:
    """``(beta(P), beta(S(P)))`` for an arbitrary axis; nothing is asserted."""
    if not isinstance(P, ConvexPolygon):
        P = ConvexPolygon(P)
    S = steiner_symmetrize(P, point, direction)
    return billiard_product(P).beta, billiard_product(S).beta
