"""Independent check of alpha by convex minimization over face tuples.

A closed polyline with points on faces whose normal cones positively span
the plane cannot be translated into the interior, and the shortest such
polyline (with at most three points) has length alpha.  For a fixed tuple
of faces the perimeter is convex in the positions along those faces, so a
local minimizer is global.  Slow (all pairs and triples of faces) but it
shares no code with the fast path beyond the polygon class.

    python3 scripts/exact_alpha_check.py
"""

import itertools
import math

import numpy as np
from scipy.optimize import minimize

from billiard_product.billiard import alpha_polygon
from billiard_product.geom import ConvexPolygon, convex_hull, random_polygon, regular_polygon
from billiard_product.search import CONJECTURED_QUAD, edge_mode_quad


def faces(P):
    """``(start, end, angle_lo, angle_hi)``: vertices first, then edges."""
    out = []
    for k in range(len(P)):
        a0 = math.atan2(P.normals[k - 1][1], P.normals[k - 1][0])
        a1 = math.atan2(P.normals[k][1], P.normals[k][0])
        if a1 < a0:
            a1 += 2 * math.pi
        out.append((P.vertices[k], P.vertices[k], a0, a1))
        out.append((P.vertices[k], P.vertices[(k + 1) % len(P)], a1, a1))
    return out


def cones_span(fs) -> bool:
    """True when the union of the normal arcs leaves no gap of pi or more."""
    arcs = sorted((lo % (2 * math.pi), lo % (2 * math.pi) + (hi - lo)) for _, _, lo, hi in fs)
    reach, gap = arcs[0][1], 0.0
    for lo, hi in arcs[1:]:
        gap = max(gap, lo - reach)
        reach = max(reach, hi)
    gap = max(gap, arcs[0][0] + 2 * math.pi - reach)
    return gap < math.pi - 1e-12


def perimeter(t, fs):
    p = [a + ti * (b - a) for ti, (a, b, _, _) in zip(t, fs)]
    return sum(np.linalg.norm(p[i] - p[(i + 1) % len(p)]) for i in range(len(p)))


def exact_alpha(P: ConvexPolygon) -> float:
    F, best = faces(P), math.inf
    for r in (2, 3):
        for fs in itertools.combinations(F, r):
            if not cones_span(fs):
                continue
            for s in (0.2, 0.5, 0.8):
                res = minimize(perimeter, np.full(r, s), args=(fs,), bounds=[(0, 1)] * r,
                               method="L-BFGS-B", options={"ftol": 1e-15, "gtol": 1e-12})
                best = min(best, res.fun)
    return best


def main():
    shapes = {
        "conjectured quad": ConvexPolygon(CONJECTURED_QUAD),
        "edge-mode optimum": convex_hull(edge_mode_quad(0.5486297181470308, 1.034298640460632)),
        "regular pentagon": regular_polygon(5),
        "random 6-gon": random_polygon(6, 1),
    }
    for name, P in shapes.items():
        e, f = exact_alpha(P), alpha_polygon(P).length
        print(f"{name:18s} exact {e:.12f}  fast {f:.12f}  diff {abs(e - f):.1e}")


if __name__ == "__main__":
    main()
