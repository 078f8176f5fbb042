"""Seeded randomized property checks shared by the CLI, scripts and tests."""

from __future__ import annotations

import math

import numpy as np

from . import billiard, dual, geom, product, steiner
from .errors import GeometryError
from .search import beta_of


def rng_polygon(rng: np.random.Generator, n_min: int = 3, n_max: int = 10) -> geom.ConvexPolygon:
    n = int(rng.integers(n_min, n_max + 1))
    return geom.random_polygon(n, int(rng.integers(2**31)))


def rng_triangle(rng: np.random.Generator) -> geom.ConvexPolygon:
    while True:
        v = rng.uniform(-1, 1, (3, 2))
        try:
            T = geom.convex_hull(v)
        except GeometryError:
            continue
        if len(T) == 3 and T.area > 1e-2:
            return T


def rng_interior_point(rng: np.random.Generator, P: geom.ConvexPolygon, margin: float = 1e-6) -> np.ndarray:
    """Random convex combination of the vertices, kept off the boundary.

    The margin is capped at half the centroid's depth so slivers still work.
    """
    margin = min(margin, -0.5 * P.signed_distance(P.centroid))
    while True:
        w = rng.dirichlet(np.ones(len(P)))
        z = w @ P.vertices
        if P.signed_distance(z) < -margin:
            return z


def rng_similarity(rng: np.random.Generator) -> geom.SimilarityTransform:
    return geom.SimilarityTransform(
        scale=float(rng.uniform(0.2, 5.0)),
        rotation=float(rng.uniform(0, 2 * math.pi)),
        translation=rng.uniform(-10, 10, 2),
        reflect=bool(rng.integers(2)),
    )


def rng_admissible_pair(rng: np.random.Generator):
    """Triangle and a center in its acute-dual region."""
    while True:
        T = rng_triangle(rng)
        for _ in range(50):
            z = rng_interior_point(rng, T, 1e-3)
            if dual.acute_dual_region_contains(T, z):
                return T, z


def nested_pair(rng: np.random.Generator):
    """``(inner, outer)`` with ``inner`` contained in ``outer``.

    Half the time the inner body is a shrunk copy toward the centroid, and
    otherwise the outer body is a hull with a few extra points.
    """
    Q = rng_polygon(rng)
    if rng.integers(2):
        c = Q.centroid
        return geom.ConvexPolygon(c + rng.uniform(0.3, 1.0) * (Q.vertices - c)), Q
    extra = rng.uniform(-1.6, 1.6, (int(rng.integers(1, 4)), 2))
    return Q, geom.convex_hull(np.vstack([Q.vertices, extra]))


def perturbed_pair(rng: np.random.Generator, scale: float = 0.05):
    P = rng_polygon(rng)
    while True:
        try:
            return P, geom.convex_hull(P.vertices + rng.normal(0, scale, P.vertices.shape))
        except GeometryError:
            continue


# -- checks: each returns the worst violation (<= 0 means pass) ---------------


def check_lipschitz(rng):
    P, Q = perturbed_pair(rng)
    da = abs(billiard.alpha_polygon(P).length - billiard.alpha_polygon(Q).length)
    return da - 6 * geom.hausdorff_distance(P, Q) - 1e-9


def check_monotone(rng):
    Q, P = nested_pair(rng)
    return billiard.alpha_polygon(Q).length - billiard.alpha_polygon(P).length - 1e-9


def check_similarity(rng):
    P = rng_polygon(rng)
    Q = geom.apply_similarity(P, rng_similarity(rng))
    return abs(beta_of(P) - beta_of(Q)) - 1e-9


def check_oracle(rng, N: int = 60):
    P = rng_polygon(rng, 3, 6)
    fast = billiard.alpha_polygon(P).length
    gap = billiard.alpha_bruteforce(P, N) - fast
    return max(-gap - 1e-9, gap - 0.03 * geom.diameter(P)[0])


def check_orbit_valid(rng):
    P = rng_polygon(rng)
    return 0.0 if billiard.validate_orbit(P, billiard.alpha_polygon(P)) else 1.0


def check_global_bound(rng):
    return beta_of(rng_polygon(rng)) - 16 - 1e-9


def check_roundtrip(rng):
    P = rng_polygon(rng)
    z = rng_interior_point(rng, P, 1e-2)
    return geom.hausdorff_distance(P, dual.dual_of_dual_roundtrip(P, z)) - 1e-6


def check_acute_region(rng):
    T = rng_triangle(rng)
    z = rng_interior_point(rng, T, 1e-3)
    a = dual.acute_dual_region_contains(T, z)
    b = dual.dual_triangle_is_acute(T, z, tol=0.0)
    return 0.0 if a == b else 1.0


def check_triangle_formulas(rng):
    T, z = rng_admissible_pair(rng)
    g = [product.alpha_dual_triangle_geometric(T, z, k) for k in range(3)]
    d = product.alpha_dual_at(T, z)
    return max(max(g) - min(g) - 1e-9, abs(g[0] - d) - 1e-6)


def check_santalo_lower(rng):
    P = rng_polygon(rng)
    z = rng_interior_point(rng, P)
    return 8 / geom.diameter(P)[0] - product.alpha_dual_at(P, z) - 1e-6


def check_steiner_diameter(rng):
    P = rng_polygon(rng)
    S = geom.steiner_symmetrize(P, rng.normal(size=2) * 0.2, rng.normal(size=2))
    return max(geom.diameter(S)[0] - geom.diameter(P)[0] - 1e-9, abs(S.area - P.area) - 1e-9)


def check_altitudes(rng):
    rep = steiner.steiner_beta_report(rng_triangle(rng))
    return -min(a.delta for a in rep.axes) - 1e-9


SUITES = {
    "geom": [check_steiner_diameter, check_similarity],
    "billiard": [check_orbit_valid, check_oracle, check_lipschitz, check_monotone],
    "dual": [check_roundtrip, check_acute_region],
    "product": [check_global_bound, check_santalo_lower, check_triangle_formulas],
    "steiner": [check_altitudes],
}


def run_suite(suite: str, seed: int, cases: int) -> dict:
    """Run every check of ``suite`` (or all) ``cases`` times; deterministic in ``seed``."""
    names = list(SUITES) if suite == "all" else [suite]
    report, ok = {}, True
    for s_idx, name in enumerate(names):
        for c_idx, fn in enumerate(SUITES[name]):
            rng = np.random.default_rng([seed, s_idx, c_idx])
            worst = max(fn(rng) for _ in range(cases))
            passed = bool(worst <= 0)
            ok &= passed
            report[f"{name}.{fn.__name__.removeprefix('check_')}"] = {"worst": worst, "passed": passed}
    return {"suite": suite, "seed": seed, "cases": cases, "checks": report, "passed": ok}
