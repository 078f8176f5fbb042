"""Largest billiard product over random polygons, plus Reuleaux approximations.

    python3 scripts/bound_sweep.py --count 500
"""

import argparse

from billiard_product.geom import diameter, min_width, random_polygon
from billiard_product.search import beta_of, reuleaux_polygon


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=500)
    a = ap.parse_args()
    best = max((beta_of(P), s, P) for s in range(a.count) for P in [random_polygon(3 + s % 8, 5000 + s)])[:2]
    print(f"max beta over {a.count} random polygons: {best[0]:.6f} (seed {5000 + best[1]})")
    for n in (30, 60, 150, 300, 600):
        R = reuleaux_polygon(1.0, n)
        print(f"Reuleaux n={n:4d}: beta = {beta_of(R):.8f}, width/diam = {min_width(R)[0] / diameter(R)[0]:.8f}")


if __name__ == "__main__":
    main()
