"""Shortest closed (generalized) billiard trajectories in convex polygons.

A shortest orbit in the plane has two or three bounce points.  Two-bounce
orbits are double normals, and the shortest of them runs across the minimal
width.  A three-bounce orbit touches three *faces* of the polygon (edges or
vertices); the support lines through its bounce points form an acute
triangle of which it is the Fagnano orbit.  Every face combination admits at
most one such orbit and it has a closed form:

* edge, edge, edge -- feet of the altitudes of the triangle of edge lines;
* vertex, edge, edge -- unfold the path by reflecting the vertex in both
  edge lines;
* vertex, vertex, edge -- reflect one vertex in the edge line;
* vertex, vertex, vertex -- the triangle of the vertices itself.

Each candidate is then checked against the reflection law with the normal
cones of the polygon, so a surviving candidate is a genuine generalized
billiard trajectory.  ``alpha_bruteforce`` is an independent check built on
the translative characterization (minimal perimeter of a configuration of
at most three points that cannot be translated into the interior).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import numpy as np

from .errors import DegenerateInput, NotAcute
from .geom import TOL, ConvexPolygon, _cross, _point_segment_distance, edge_widths, translation_slack

TWO = "two"
THREE = "three"

ANGLE_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class Orbit:
    """A closed billiard trajectory given by its bounce points.

    ``normals`` holds the outward unit normal of the supporting line used at
    each bounce.  For a two-bounce orbit ``length`` is twice the chord.
    """

    kind: str
    points: np.ndarray
    normals: np.ndarray
    length: float

    def to_json(self) -> dict:
        return {"kind": self.kind, "points": self.points.tolist(), "length": self.length}


def _perimeter(points: np.ndarray) -> np.ndarray:
    return np.linalg.norm(points - np.roll(points, -1, axis=-2), axis=-1).sum(axis=-1)


def _reflect(p, n, b):
    """Mirror points ``p`` in the lines ``<n, x> = b`` (broadcast over rows)."""
    return p - 2.0 * (np.einsum("...i,...i->...", n, p) - b)[..., None] * n


def _hit(p, q, n, b):
    """Parameter ``s`` where ``p + s (q - p)`` meets ``<n, x> = b``."""
    with np.errstate(divide="ignore", invalid="ignore"):
        return (b - np.einsum("...i,...i->...", n, p)) / np.einsum("...i,...i->...", n, q - p)


# -- triangles --------------------------------------------------------------


def _triangle(T) -> np.ndarray:
    v = T.vertices if isinstance(T, ConvexPolygon) else np.asarray(T, dtype=float)
    if v.shape != (3, 2):
        raise DegenerateInput("a triangle needs exactly 3 vertices")
    if abs(_cross(v[1] - v[0], v[2] - v[0])) <= 1e-12:
        raise DegenerateInput("triangle has zero area")
    return v


def triangle_angles(v: np.ndarray) -> np.ndarray:
    """Interior angles at the three vertices."""
    out = np.empty(3)
    for i in range(3):
        a, b = v[(i + 1) % 3] - v[i], v[(i + 2) % 3] - v[i]
        out[i] = math.atan2(abs(_cross(a, b)), float(np.dot(a, b)))
    return out


def _foot(p, a, b):
    d = b - a
    return a + np.dot(p - a, d) / np.dot(d, d) * d


def _ccw(v: np.ndarray) -> np.ndarray:
    return v if _cross(v[1] - v[0], v[2] - v[0]) > 0 else v[::-1].copy()


def fagnano_orbit(T) -> Orbit:
    """Orbit through the feet of the altitudes of a strictly acute triangle."""
    v = _ccw(_triangle(T))
    ang = triangle_angles(v)
    if ang.max() >= math.pi / 2 - ANGLE_TOL:
        raise NotAcute(f"largest angle {math.degrees(ang.max()):.6f} deg is not acute")
    pts, nrm = [], []
    for i in range(3):
        a, b = v[i], v[(i + 1) % 3]
        pts.append(_foot(v[(i + 2) % 3], a, b))
        e = b - a
        nrm.append(np.array([e[1], -e[0]]) / np.linalg.norm(e))
    pts = np.array(pts)
    return Orbit(THREE, pts, np.array(nrm), float(_perimeter(pts)))


def fagnano_length_formulas(T) -> np.ndarray:
    """``2 h sin(theta)`` evaluated for each of the three altitudes."""
    v = _triangle(T)
    ang = triangle_angles(v)
    out = np.empty(3)
    for i in range(3):
        a, b = v[(i + 1) % 3], v[(i + 2) % 3]
        h = np.linalg.norm(v[i] - _foot(v[i], a, b))
        out[i] = 2 * h * math.sin(ang[i])
    return out


def alpha_triangle(T) -> Orbit:
    """Shortest orbit of a triangle: Fagnano if acute, else the inner altitude doubled."""
    v = _ccw(_triangle(T))
    ang = triangle_angles(v)
    k = int(np.argmax(ang))
    if ang[k] < math.pi / 2 - ANGLE_TOL:
        return fagnano_orbit(v)
    a, b = v[(k + 1) % 3], v[(k + 2) % 3]
    f = _foot(v[k], a, b)
    e = b - a
    n_edge = np.array([e[1], -e[0]]) / np.linalg.norm(e)
    h = float(np.linalg.norm(v[k] - f))
    return Orbit(TWO, np.array([f, v[k]]), np.array([n_edge, -n_edge]), 2 * h)


# -- polygons ---------------------------------------------------------------


def min_width_orbit(P: ConvexPolygon) -> Orbit:
    """Double normal across the minimal width (edge against opposite vertex)."""
    w = edge_widths(P)
    k = int(np.argmax(w <= w.min() + 1e-12))
    n = P.normals[k]
    proj = P.vertices @ n
    j = int(np.argmax(proj <= proj.min() + 1e-12))
    v = P.vertices[j]
    f = v + w[k] * n
    return Orbit(TWO, np.array([f, v]), np.array([n, -n]), 2 * float(w[k]))


def _face_angles(P: ConvexPolygon):
    """Normal-angle intervals of the 2m faces in ccw order.

    Face ``2k`` is vertex ``k`` (its normal cone), face ``2k + 1`` is edge
    ``k``.  Angles are unwrapped and increase with the face index.
    """
    m = len(P)
    raw = np.unwrap(np.arctan2(P.normals[:, 1], P.normals[:, 0]))
    prev = np.concatenate([[raw[-1] - 2 * math.pi], raw[:-1]])
    lo = np.empty(2 * m)
    hi = np.empty(2 * m)
    lo[0::2], hi[0::2] = prev, raw
    lo[1::2], hi[1::2] = raw, raw
    return lo, hi


def _face_distances(P: ConvexPolygon) -> np.ndarray:
    m = len(P)
    v, e = P.vertices, P.edges
    vv = np.linalg.norm(v[:, None, :] - v[None, :, :], axis=2)
    ve = _point_segment_distance(v, v, e)  # vertex i to edge j
    ee = np.minimum(ve[:, :], ve[np.roll(np.arange(m), -1), :])  # endpoints of edge i to edge j
    ee = np.minimum(ee, ee.T)
    D = np.empty((2 * m, 2 * m))
    D[0::2, 0::2] = vv
    D[0::2, 1::2] = ve
    D[1::2, 0::2] = ve.T
    D[1::2, 1::2] = ee
    return D


@lru_cache(maxsize=64)
def _index_triples(F: int) -> np.ndarray:
    return np.array(list(combinations(range(F), 3)), dtype=np.intp).reshape(-1, 3)


def _face_triples(P: ConvexPolygon, bound: float) -> np.ndarray:
    """Face triples ``i < j < k`` that could carry a 3-orbit shorter than ``bound``.

    Necessary conditions only: the normals of the three support lines must
    be pairwise more than a right angle apart (the line triangle is acute),
    no vertex is paired with an incident edge, and the sum of pairwise face
    distances (a perimeter lower bound) is below ``bound``.
    """
    lo, hi = _face_angles(P)
    F = len(lo)
    half, full = math.pi / 2 - 1e-9, math.pi + 1e-9
    fwd = ((hi[None, :] - lo[:, None]) > half) & ((lo[None, :] - hi[:, None]) < full)
    wrap = ((2 * math.pi + hi[:, None] - lo[None, :]) > half) & ((2 * math.pi + lo[:, None] - hi[None, :]) < full)
    idx = np.arange(F - 1)
    fwd[idx, idx + 1] = False
    wrap[0, F - 1] = False
    D = _face_distances(P)
    if F <= 64:
        t = _index_triples(F)
        i, j, k = t[:, 0], t[:, 1], t[:, 2]
        ok = fwd[i, j] & fwd[j, k] & wrap[i, k] & (D[i, j] + D[j, k] + D[i, k] < bound)
        return t[ok]
    out = []
    for i in range(F - 2):
        J = np.nonzero(fwd[i, i + 1:])[0] + i + 1
        K = np.nonzero(wrap[i, i + 1:])[0] + i + 1
        if len(J) == 0 or len(K) == 0:
            continue
        ok = fwd[np.ix_(J, K)] & (J[:, None] < K[None, :])
        ok &= D[i, J][:, None] + D[np.ix_(J, K)] + D[i, K][None, :] < bound
        jj, kk = np.nonzero(ok)
        if len(jj):
            out.append(np.column_stack([np.full(len(jj), i), J[jj], K[kk]]))
    if not out:
        return np.zeros((0, 3), dtype=np.intp)
    return np.vstack(out)


def _line_intersections(n1, b1, n2, b2):
    det = _cross(n1, n2)
    with np.errstate(divide="ignore", invalid="ignore"):
        x = (b1 * n2[:, 1] - b2 * n1[:, 1]) / det
        y = (n1[:, 0] * b2 - n2[:, 0] * b1) / det
    return np.column_stack([x, y])


def _fagnano_on_lines(pts, rows, n, b):
    """Altitude feet of the triangles cut out by three edge lines each."""
    with np.errstate(divide="ignore", invalid="ignore"):
        X = np.stack([
            _line_intersections(n[:, 1], b[:, 1], n[:, 2], b[:, 2]),
            _line_intersections(n[:, 2], b[:, 2], n[:, 0], b[:, 0]),
            _line_intersections(n[:, 0], b[:, 0], n[:, 1], b[:, 1]),
        ], axis=1)
        # strictly acute line triangle, else no Fagnano orbit
        acute = np.ones(len(rows), dtype=bool)
        for a in range(3):
            u = X[:, (a + 1) % 3] - X[:, a]
            w = X[:, (a + 2) % 3] - X[:, a]
            cos = np.einsum("ij,ij->i", u, w) / (np.linalg.norm(u, axis=1) * np.linalg.norm(w, axis=1))
            acute &= cos > ANGLE_TOL
        feet = X - (np.einsum("kij,kij->ki", n, X) - b)[..., None] * n
    feet[~acute] = np.nan
    pts[rows] = feet


def _three_bounce_candidates(P: ConvexPolygon, faces: np.ndarray) -> np.ndarray:
    """Closed-form candidate bounce points for each face triple, shape (k, 3, 2).

    Rows for which the construction breaks down come back as NaN.
    """
    N, B, V = P.normals, P.offsets, P.vertices
    pts = np.full(faces.shape + (2,), np.nan)
    is_v = faces % 2 == 0
    fi = faces // 2
    nv = is_v.sum(axis=1)

    rows = np.nonzero(nv == 0)[0]
    if len(rows):
        _fagnano_on_lines(pts, rows, N[fi[rows]], B[fi[rows]])

    rows = np.nonzero(nv == 1)[0]
    if len(rows):
        vmask = is_v[rows]
        order = np.argsort(~vmask, axis=1, kind="stable")  # vertex first, then edges in face order
        srt = np.take_along_axis(fi[rows], order, axis=1)
        v = V[srt[:, 0]]
        nj, bj = N[srt[:, 1]], B[srt[:, 1]]
        nk, bk = N[srt[:, 2]], B[srt[:, 2]]
        v3 = _reflect(v, nk, bk)
        v2 = _reflect(v3, nj, bj)
        s = _hit(v, v2, nj, bj)
        qj = v + s[:, None] * (v2 - v)
        s2 = _hit(qj, v3, nk, bk)
        qk = qj + s2[:, None] * (v3 - qj)
        good = (s > 0) & (s < 1) & (s2 > 0) & (s2 < 1)
        cand = np.stack([v, qj, qk], axis=1)
        cand[~good] = np.nan
        inv = np.argsort(order, axis=1)
        pts[rows] = np.take_along_axis(cand, inv[..., None], axis=1)

    rows = np.nonzero(nv == 2)[0]
    if len(rows):
        vmask = is_v[rows]
        order = np.argsort(~vmask, axis=1, kind="stable")
        srt = np.take_along_axis(fi[rows], order, axis=1)
        va, vb = V[srt[:, 0]], V[srt[:, 1]]
        nk, bk = N[srt[:, 2]], B[srt[:, 2]]
        va2 = _reflect(va, nk, bk)
        s = _hit(vb, va2, nk, bk)
        q = vb + s[:, None] * (va2 - vb)
        good = (s > 0) & (s < 1)
        cand = np.stack([va, vb, q], axis=1)
        cand[~good] = np.nan
        inv = np.argsort(order, axis=1)
        pts[rows] = np.take_along_axis(cand, inv[..., None], axis=1)

    rows = np.nonzero(nv == 3)[0]
    if len(rows):
        pts[rows] = V[fi[rows]]
    return pts


def _bisector_normals(pts: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Outward bisector normal at every bounce of closed polylines (k, q, 2)."""
    prev = np.roll(pts, 1, axis=1) - pts
    nxt = np.roll(pts, -1, axis=1) - pts
    lp = np.linalg.norm(prev, axis=2)
    ln = np.linalg.norm(nxt, axis=2)
    with np.errstate(divide="ignore", invalid="ignore"):
        s = prev / lp[..., None] + nxt / ln[..., None]
        ls = np.linalg.norm(s, axis=2)
        nb = -s / ls[..., None]
    ok = (lp > 1e-12) & (ln > 1e-12) & (ls > 1e-12)
    return nb, ok


def _check_faces(P: ConvexPolygon, pts: np.ndarray, faces: np.ndarray, tol: float = TOL) -> np.ndarray:
    """Reflection-law check of 3-point candidates against their faces."""
    nb, ok = _bisector_normals(pts)
    m = len(P)
    fi = faces // 2
    is_v = faces % 2 == 0
    ok &= np.all(np.isfinite(pts), axis=2)
    # edge bounces: on the closed edge and reflecting about its normal
    ne = P.normals[fi]
    start = P.vertices[fi]
    e = P.edges[fi]
    ll = P.edge_lengths[fi]
    t = np.einsum("kij,kij->ki", pts - start, e) / ll**2
    on_edge = (t >= -tol / ll) & (t <= 1 + tol / ll) & (np.abs(np.einsum("kij,kij->ki", pts - start, ne)) <= tol)
    along = (np.abs(_cross(ne, nb)) <= tol) & (np.einsum("kij,kij->ki", ne, nb) > 0)
    edge_ok = on_edge & along
    # vertex bounces: bisector normal inside the normal cone
    n_in = P.normals[(fi - 1) % m]
    n_out = P.normals[fi]
    cone_ok = (_cross(n_in, nb) >= -tol) & (_cross(nb, n_out) >= -tol)
    ok &= np.where(is_v, cone_ok, edge_ok)
    return np.all(ok, axis=1)


def three_bounce_orbits(P: ConvexPolygon, bound: float = math.inf) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """All validated 3-orbits whose face triple passes the pruning for ``bound``.

    Returns ``(points, faces, lengths)``.
    """
    faces = _face_triples(P, bound)
    if len(faces) == 0:
        return np.zeros((0, 3, 2)), faces, np.zeros(0)
    pts = _three_bounce_candidates(P, faces)
    keep = _check_faces(P, pts, faces)
    pts, faces = pts[keep], faces[keep]
    return pts, faces, _perimeter(pts)


def alpha_polygon(P: ConvexPolygon) -> Orbit:
    """Shortest closed generalized billiard trajectory of a convex polygon."""
    if not isinstance(P, ConvexPolygon):
        P = ConvexPolygon(P)
    best = min_width_orbit(P)
    pts, faces, lengths = three_bounce_orbits(P, best.length)
    if len(lengths) and lengths.min() < best.length:
        k = int(np.argmin(lengths))
        p, f = pts[k], faces[k]
        nb, _ = _bisector_normals(p[None])
        normals = np.where((f % 2 == 0)[:, None], nb[0], P.normals[f // 2])
        best = Orbit(THREE, p.copy(), normals, float(lengths[k]))
    return best


# -- validation -------------------------------------------------------------


def _normal_cone(P: ConvexPolygon, p: np.ndarray, tol: float):
    """``(n_lo, n_hi)`` bounding the normal cone at boundary point ``p``, or None."""
    dv = np.linalg.norm(P.vertices - p, axis=1)
    k = int(np.argmin(dv))
    if dv[k] <= tol:
        return P.normals[k - 1], P.normals[k]
    d = _point_segment_distance(p[None, :], P.vertices, P.edges)[0]
    j = int(np.argmin(d))
    if d[j] <= tol:
        return P.normals[j], P.normals[j]
    return None


def _in_cone(n, cone, tol) -> bool:
    lo, hi = cone
    if lo is hi or np.allclose(lo, hi):
        return abs(_cross(lo, n)) <= tol and np.dot(lo, n) > 0
    return _cross(lo, n) >= -tol and _cross(n, hi) >= -tol


def validate_orbit(P: ConvexPolygon, o: Orbit, tol: float = TOL) -> bool:
    """Check boundary membership, normal cones, reflection law and length."""
    pts = np.asarray(o.points, dtype=float)
    nrm = np.asarray(o.normals, dtype=float)
    if pts.shape not in ((2, 2), (3, 2)) or nrm.shape != pts.shape:
        return False
    if not np.all(np.isfinite(pts)) or not np.allclose(np.linalg.norm(nrm, axis=1), 1.0, atol=1e-12):
        return False
    for p, n in zip(pts, nrm):
        cone = _normal_cone(P, p, tol)
        if cone is None or not _in_cone(n, cone, tol):
            return False
    if len(pts) == 2:
        d = pts[1] - pts[0]
        L = np.linalg.norm(d)
        if L <= 1e-12:
            return False
        u = d / L
        # a 2-orbit retraces itself: the chord is normal to both support lines
        if abs(_cross(nrm[1], u)) > tol or np.dot(nrm[1], u) <= 0:
            return False
        if abs(_cross(nrm[0], u)) > tol or np.dot(nrm[0], u) >= 0:
            return False
        return abs(2 * L - o.length) <= tol
    nb, ok = _bisector_normals(pts[None])
    if not ok.all():
        return False
    if np.any(np.abs(_cross(nrm, nb[0])) > tol) or np.any(np.einsum("ij,ij->i", nrm, nb[0]) <= 0):
        return False
    return abs(float(_perimeter(pts)) - o.length) <= tol


# -- independent oracle -----------------------------------------------------


def boundary_samples(P: ConvexPolygon, N: int) -> np.ndarray:
    """``N`` boundary points, spread over the edges by length, vertices included."""
    lens = P.edge_lengths
    share = N * lens / lens.sum()
    counts = np.maximum(1, np.floor(share).astype(int))
    while counts.sum() < N:
        counts[np.argmax(share - counts)] += 1
    while counts.sum() > N:
        counts[np.argmax(np.where(counts > 1, counts - share, -np.inf))] -= 1
    pts = [P.vertices[i] + (np.arange(c) / c)[:, None] * P.edges[i] for i, c in enumerate(counts)]
    return np.vstack(pts)


def alpha_bruteforce(P: ConvexPolygon, N: int, tol: float = TOL, chunk: int = 20000) -> float:
    """Minimal perimeter of a sampled 2- or 3-point configuration that does not fit.

    Candidate configurations are scanned in order of increasing perimeter
    and the first one that cannot be translated into the interior (maximal
    LP slack at most ``tol``) is the answer.  Points sit exactly on the
    boundary, so configurations sharing the faces of a true orbit are
    certified non-fitting with zero slack.
    """
    if N < 12:
        raise ValueError("N must be at least 12")
    q = boundary_samples(P, N)
    best = math.inf
    for r in (2, 3):
        idx = _index_combinations(len(q), r)
        cfg = q[idx]
        per = _perimeter(cfg)
        order = np.argsort(per, kind="stable")
        order = order[per[order] < best]
        for s in range(0, len(order), chunk):
            sel = order[s:s + chunk]
            slack = translation_slack(P, cfg[sel])
            hit = np.nonzero(slack <= tol)[0]
            if len(hit):
                best = min(best, float(per[sel[hit[0]]]))
                break
    return best


@lru_cache(maxsize=16)
def _index_combinations(n: int, r: int) -> np.ndarray:
    return np.array(list(combinations(range(n), r)), dtype=np.intp)
