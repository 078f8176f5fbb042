"""Santalo-point sweep over seeded random polygons.

Prints one CSV row per polygon: the scanned minimum of alpha(P^z), the
value 8 / diam it should match, and how far the argmin sits from the
nearest diameter midpoint.

    python3 scripts/santalo_sweep.py --count 20 --grid 60
"""

import argparse
import csv
import sys

import numpy as np

from billiard_product.geom import diameter, diameter_pairs, random_polygon
from billiard_product.product import santalo_scan


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=20)
    ap.add_argument("--grid", type=int, default=60)
    ap.add_argument("--seed", type=int, default=1000)
    a = ap.parse_args()
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["seed", "n", "min", "target", "rel_gap", "argmin_offset_over_diam"])
    for k in range(a.count):
        P = random_polygon(3 + k % 8, a.seed + k)
        d = diameter(P)[0]
        m, z = santalo_scan(P, a.grid)
        mids = [(P.vertices[i] + P.vertices[j]) / 2 for i, j in diameter_pairs(P)]
        off = min(np.linalg.norm(z - c) for c in mids) / d
        w.writerow([a.seed + k, len(P), f"{m:.9f}", f"{8 / d:.9f}", f"{(m - 8 / d) / (8 / d):.2e}", f"{off:.2e}"])


if __name__ == "__main__":
    main()
