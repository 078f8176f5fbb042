"""Planar convex polygon primitives.

Polygons are stored as counterclockwise, strictly convex vertex arrays
together with the half-plane form ``<n_i, x> <= b_i`` of their edges.
Edge ``i`` runs from vertex ``i`` to vertex ``i + 1``.  All tolerances are
absolute and assume coordinates of order one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

import numpy as np
from scipy.spatial import ConvexHull, QhullError

from .errors import DegenerateInput

TOL = 1e-9
# minimum |sin| of the turning angle for a vertex to count as a corner
TURN_TOL = 1e-9
MIN_AREA = 1e-12


def _cross(a, b):
    return a[..., 0] * b[..., 1] - a[..., 1] * b[..., 0]


def _strip_collinear(verts: np.ndarray) -> np.ndarray:
    """Drop repeated and collinear vertices of a closed ccw chain."""
    pts = [p for i, p in enumerate(verts) if i == 0 or np.linalg.norm(p - verts[i - 1]) > 1e-14]
    if len(pts) > 1 and np.linalg.norm(pts[0] - pts[-1]) <= 1e-14:
        pts.pop()
    changed = True
    while changed and len(pts) >= 3:
        changed = False
        for i in range(len(pts)):
            a, b, c = pts[i - 1], pts[i], pts[(i + 1) % len(pts)]
            e1, e2 = b - a, c - b
            n1, n2 = np.linalg.norm(e1), np.linalg.norm(e2)
            if n1 <= 1e-14 or n2 <= 1e-14 or (abs(_cross(e1, e2)) <= TURN_TOL * n1 * n2 and np.dot(e1, e2) > 0):
                del pts[i]
                changed = True
                break
    return np.array(pts, dtype=float).reshape(-1, 2)


@dataclass(frozen=True, eq=False)
class ConvexPolygon:
    """A strictly convex polygon with counterclockwise vertices."""

    vertices: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.vertices, dtype=float)
        if v.ndim != 2 or v.shape[1] != 2 or not np.all(np.isfinite(v)):
            raise DegenerateInput("vertices must be a finite (m, 2) array")
        v = _strip_collinear(v)
        if len(v) < 3:
            raise DegenerateInput("fewer than 3 non-collinear vertices")
        e = np.roll(v, -1, axis=0) - v
        turns = _cross(e, np.roll(e, -1, axis=0))
        lens = np.linalg.norm(e, axis=1)
        if np.any(turns <= TURN_TOL * lens * np.roll(lens, -1)):
            raise DegenerateInput("vertices are not in strictly convex counterclockwise order")
        area = 0.5 * np.sum(_cross(v, np.roll(v, -1, axis=0)))
        if area <= MIN_AREA:
            raise DegenerateInput(f"polygon area {area:g} is too small")
        v.setflags(write=False)
        object.__setattr__(self, "vertices", v)

    def __len__(self):
        return len(self.vertices)

    def __repr__(self):
        return f"ConvexPolygon({self.vertices.tolist()!r})"

    @cached_property
    def edges(self) -> np.ndarray:
        return np.roll(self.vertices, -1, axis=0) - self.vertices

    @cached_property
    def edge_lengths(self) -> np.ndarray:
        return np.linalg.norm(self.edges, axis=1)

    @cached_property
    def normals(self) -> np.ndarray:
        """Outward unit normals, one per edge."""
        e = self.edges
        return np.column_stack([e[:, 1], -e[:, 0]]) / self.edge_lengths[:, None]

    @cached_property
    def offsets(self) -> np.ndarray:
        return np.einsum("ij,ij->i", self.normals, self.vertices)

    @cached_property
    def area(self) -> float:
        v = self.vertices
        return 0.5 * float(np.sum(_cross(v, np.roll(v, -1, axis=0))))

    @cached_property
    def perimeter(self) -> float:
        return float(np.sum(self.edge_lengths))

    @cached_property
    def centroid(self) -> np.ndarray:
        v = self.vertices
        w = np.roll(v, -1, axis=0)
        c = _cross(v, w)
        return np.sum((v + w) * c[:, None], axis=0) / (3.0 * np.sum(c))

    def support(self, d) -> float:
        return float(np.max(self.vertices @ np.asarray(d, dtype=float)))

    def signed_distance(self, p) -> float:
        """Max of ``<n_i, p> - b_i``; negative inside, zero on the boundary."""
        return float(np.max(self.normals @ np.asarray(p, dtype=float) - self.offsets))

    def contains(self, p, tol: float = TOL) -> bool:
        return self.signed_distance(p) <= tol

    def is_interior(self, p, tol: float = TOL) -> bool:
        return self.signed_distance(p) < -tol

    def distance(self, p) -> float:
        """Euclidean distance from ``p`` to the polygon (0 inside)."""
        return float(_point_polygon_distance(np.asarray(p, dtype=float)[None, :], self)[0])

    def boundary_distance(self, p) -> float:
        """Euclidean distance from ``p`` to the boundary curve."""
        p = np.asarray(p, dtype=float)
        return float(np.min(_point_segment_distance(p[None, :], self.vertices, self.edges)))

    @cached_property
    def _dependencies(self):
        return positive_dependencies(self.normals)

    @classmethod
    def from_halfplanes(cls, normals, offsets) -> "ConvexPolygon":
        """Rebuild the vertex form from ccw-ordered, irredundant half-planes."""
        n = np.asarray(normals, dtype=float)
        b = np.asarray(offsets, dtype=float)
        n_prev, b_prev = np.roll(n, 1, axis=0), np.roll(b, 1)
        det = _cross(n_prev, n)
        x = (b_prev * n[:, 1] - b * n_prev[:, 1]) / det
        y = (n_prev[:, 0] * b - n[:, 0] * b_prev) / det
        return cls(np.column_stack([x, y]))

    def to_json(self) -> dict:
        return {"vertices": self.vertices.tolist()}


def _point_segment_distance(p: np.ndarray, starts: np.ndarray, edges: np.ndarray) -> np.ndarray:
    """Distances from points ``p`` (k, 2) to segments, shape (k, m)."""
    d = p[:, None, :] - starts[None, :, :]
    ll = np.einsum("ij,ij->i", edges, edges)
    t = np.clip(np.einsum("kij,ij->ki", d, edges) / ll, 0.0, 1.0)
    diff = d - t[..., None] * edges[None, :, :]
    return np.linalg.norm(diff, axis=2)


def _point_polygon_distance(p: np.ndarray, poly: ConvexPolygon) -> np.ndarray:
    inside = np.max(p @ poly.normals.T - poly.offsets, axis=1) <= 0.0
    d = np.min(_point_segment_distance(p, poly.vertices, poly.edges), axis=1)
    return np.where(inside, 0.0, d)


@dataclass(frozen=True)
class SimilarityTransform:
    """``x -> scale * R(rotation) * F x + translation``; ``F`` flips y when ``reflect``."""

    scale: float = 1.0
    rotation: float = 0.0
    translation: tuple[float, float] = (0.0, 0.0)
    reflect: bool = False

    def __post_init__(self):
        if not self.scale > 0:
            raise ValueError("scale must be positive")

    def matrix(self) -> np.ndarray:
        c, s = math.cos(self.rotation), math.sin(self.rotation)
        m = self.scale * np.array([[c, -s], [s, c]])
        if self.reflect:
            m = m @ np.diag([1.0, -1.0])
        return m

    def __call__(self, pts) -> np.ndarray:
        pts = np.asarray(pts, dtype=float)
        return pts @ self.matrix().T + np.asarray(self.translation, dtype=float)


def direction(theta: float) -> np.ndarray:
    return np.array([math.cos(theta), math.sin(theta)])


def convex_hull(points) -> ConvexPolygon:
    """Counterclockwise convex hull; raises ``DegenerateInput`` if flat."""
    pts = np.asarray(points, dtype=float).reshape(-1, 2)
    if len(np.unique(pts, axis=0)) < 3:
        raise DegenerateInput("need at least 3 distinct points")
    try:
        hull = ConvexHull(pts)
    except QhullError as exc:
        raise DegenerateInput("points are collinear") from exc
    # qhull returns 2-d hull vertices in counterclockwise order
    return ConvexPolygon(pts[hull.vertices])


def diameter(P: ConvexPolygon) -> tuple[float, tuple[np.ndarray, np.ndarray]]:
    """Longest vertex-to-vertex distance and a realizing pair."""
    v = P.vertices
    d = np.linalg.norm(v[:, None, :] - v[None, :, :], axis=2)
    best = d.max()
    i, j = np.argwhere(d >= best - 1e-12)[0]
    return float(best), (v[i].copy(), v[j].copy())


def diameter_pairs(P: ConvexPolygon, tol: float = 1e-9) -> list[tuple[int, int]]:
    """All vertex index pairs ``i < j`` realizing the diameter within ``tol``."""
    v = P.vertices
    d = np.linalg.norm(v[:, None, :] - v[None, :, :], axis=2)
    best = d.max()
    return [(int(i), int(j)) for i, j in np.argwhere(d >= best - tol) if i < j]


def width(P: ConvexPolygon, d) -> float:
    """Distance between the two supporting lines normal to ``d`` (normalized here)."""
    d = np.asarray(d, dtype=float)
    d = d / np.linalg.norm(d)
    return P.support(d) + P.support(-d)


def edge_widths(P: ConvexPolygon) -> np.ndarray:
    """Width in each edge-normal direction (caliper flush with that edge)."""
    return P.offsets - np.min(P.vertices @ P.normals.T, axis=0)


def min_width(P: ConvexPolygon) -> tuple[float, np.ndarray]:
    """Minimal width and the edge normal attaining it.

    In the plane the minimal width is always attained with one caliper
    flush against an edge, so checking every edge normal is exhaustive.
    """
    w = edge_widths(P)
    k = int(np.argmax(w <= w.min() + 1e-12))
    return float(w[k]), P.normals[k].copy()


def hausdorff_distance(P: ConvexPolygon, Q: ConvexPolygon) -> float:
    """Symmetric Hausdorff distance; directed parts peak at source vertices."""
    a = _point_polygon_distance(P.vertices, Q).max()
    b = _point_polygon_distance(Q.vertices, P).max()
    return float(max(a, b))


# -- translative non-fitting test ------------------------------------------


def positive_dependencies(normals: np.ndarray, tol: float = 1e-12):
    """Minimal positively dependent subsets of the unit normals.

    Returns ``(idx, weights)`` with ``idx`` of shape (k, 3) and weights
    summing to one per row such that ``sum w_i n_idx_i = 0``.  Antipodal
    pairs are padded by repeating an index with zero weight.
    """
    m = len(normals)
    rows, wts = [], []
    for i, j in combinations(range(m), 2):
        if abs(_cross(normals[i], normals[j])) <= tol and np.dot(normals[i], normals[j]) < 0:
            rows.append((i, j, j))
            wts.append((0.5, 0.5, 0.0))
    for i, j, k in combinations(range(m), 3):
        lam = np.array([
            _cross(normals[j], normals[k]),
            _cross(normals[k], normals[i]),
            _cross(normals[i], normals[j]),
        ])
        if np.all(lam > tol) or np.all(lam < -tol):
            lam = np.abs(lam)
            rows.append((i, j, k))
            wts.append(tuple(lam / lam.sum()))
    return np.array(rows, dtype=int).reshape(-1, 3), np.array(wts, dtype=float).reshape(-1, 3)


def translation_slack(P: ConvexPolygon, configs) -> np.ndarray:
    """Largest ``s`` with ``<n_j, p_i + t> + s <= b_j`` for some ``t``.

    ``configs`` has shape (k, q, 2): k point configurations of q points.
    Evaluated through the dual of the 3-variable LP, whose optimal bases
    are positively dependent normal triples (or antipodal pairs).
    """
    configs = np.asarray(configs, dtype=float)
    idx, w = P._dependencies
    h = np.max(configs @ P.normals.T, axis=1)  # (k, m) support of each config
    c = P.offsets[None, :] - h
    return np.min(np.einsum("kij,ij->ki", c[:, idx], w), axis=1)


def can_translate_into_interior(P: ConvexPolygon, pts, tol: float = TOL) -> bool:
    pts = np.asarray(pts, dtype=float).reshape(-1, 2)
    if len(pts) == 0:
        raise DegenerateInput("empty point configuration")
    return bool(translation_slack(P, pts[None])[0] > tol)


# -- constructions ----------------------------------------------------------


def steiner_symmetrize(P: ConvexPolygon, point, axis_direction) -> ConvexPolygon:
    """Steiner symmetrization about the line through ``point`` along ``axis_direction``.

    Chords orthogonal to the line are slid along themselves until their
    midpoints lie on it.  The chord-length profile is piecewise linear with
    breaks at the vertex projections, so those projections suffice.
    """
    o = np.asarray(point, dtype=float)
    u = np.asarray(axis_direction, dtype=float)
    u = u / np.linalg.norm(u)
    w = np.array([-u[1], u[0]])
    local = np.column_stack([(P.vertices - o) @ u, (P.vertices - o) @ w])
    a, b = local, np.roll(local, -1, axis=0)
    xs = np.unique(local[:, 0])
    lo_x, hi_x = np.minimum(a[:, 0], b[:, 0]), np.maximum(a[:, 0], b[:, 0])
    hit = (xs[:, None] >= lo_x[None, :]) & (xs[:, None] <= hi_x[None, :])
    dx = b[:, 0] - a[:, 0]
    with np.errstate(divide="ignore", invalid="ignore"):
        t = np.where(dx != 0, (xs[:, None] - a[None, :, 0]) / dx[None, :], 0.0)
    y0 = a[None, :, 1] + t * (b[None, :, 1] - a[None, :, 1])
    y1 = np.where(dx[None, :] != 0, y0, b[None, :, 1])
    ys_lo = np.where(hit, np.minimum(y0, y1), np.inf).min(axis=1)
    ys_hi = np.where(hit, np.maximum(y0, y1), -np.inf).max(axis=1)
    half = 0.5 * (ys_hi - ys_lo)
    upper = np.column_stack([xs, half])
    lower = np.column_stack([xs, -half])
    pts = np.vstack([upper, lower])
    out = o + pts[:, :1] * u + pts[:, 1:] * w
    return convex_hull(out)


def apply_similarity(P: ConvexPolygon, T: SimilarityTransform) -> ConvexPolygon:
    v = T(P.vertices)
    if T.reflect:
        v = v[::-1]
    return ConvexPolygon(v)


def regular_polygon(n: int, circumradius: float = 1.0, phase: float = math.pi / 2) -> ConvexPolygon:
    k = np.arange(n)
    ang = phase + 2 * math.pi * k / n
    return ConvexPolygon(circumradius * np.column_stack([np.cos(ang), np.sin(ang)]))


def random_polygon(n: int, seed: int, retries: int = 20) -> ConvexPolygon:
    """Hull of ``n`` points on a radially perturbed unit circle (deterministic in seed)."""
    if n < 3:
        raise DegenerateInput("n must be at least 3")
    rng = np.random.default_rng(seed)
    for _ in range(retries):
        ang = np.sort(rng.uniform(0.0, 2 * math.pi, n))
        r = rng.uniform(0.75, 1.25, n)
        pts = np.column_stack([r * np.cos(ang), r * np.sin(ang)])
        try:
            P = convex_hull(pts)
        except DegenerateInput:
            continue
        if P.area > 1e-3:
            return P
    raise DegenerateInput(f"could not sample a proper polygon from seed {seed}")


def polygon_from_json(data: dict) -> tuple[ConvexPolygon, bool]:
    """Parse ``{"vertices": [[x, y], ...]}``; also report whether order changed."""
    try:
        pts = np.asarray(data["vertices"], dtype=float)
    except (KeyError, TypeError, ValueError) as exc:
        raise DegenerateInput("expected an object with a 'vertices' list of [x, y] pairs") from exc
    if pts.ndim != 2 or pts.shape[1] != 2 or len(pts) < 3:
        raise DegenerateInput("need at least 3 points of the form [x, y]")
    P = convex_hull(pts)
    return P, not _cyclic_equal(pts, P.vertices)


def _cyclic_equal(a: np.ndarray, b: np.ndarray) -> bool:
    if a.shape != b.shape:
        return False
    return any(np.allclose(np.roll(a, k, axis=0), b) for k in range(len(a)))
