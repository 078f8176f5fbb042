"""Altitude symmetrizations of random triangles, tallied by case.

    python3 scripts/steiner_sweep.py --count 500
"""

import argparse
from collections import Counter

import numpy as np

from billiard_product.steiner import steiner_beta_any_axis, steiner_beta_report
from billiard_product.verify import rng_triangle


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=500)
    ap.add_argument("--seed", type=int, default=0)
    a = ap.parse_args()
    rng = np.random.default_rng(a.seed)
    cases, worst = Counter(), np.inf
    for _ in range(a.count):
        for ax in steiner_beta_report(rng_triangle(rng)).axes:
            cases[(ax.before_kind, ax.after_kind, "outer" if ax.outer else "inner")] += 1
            worst = min(worst, ax.delta)
    for k, v in sorted(cases.items()):
        print(f"{' -> '.join(k[:2]):18s} {k[2]:6s} {v}")
    print(f"smallest delta over all altitudes: {worst:.3e}")
    b0, b1 = steiner_beta_any_axis([(-1, 0), (1, 0), (0, 1)], (0, 0), (1, 0))
    print(f"right triangle about its hypotenuse line: beta {b0:.7f} -> {b1:.7f}")


if __name__ == "__main__":
    main()
