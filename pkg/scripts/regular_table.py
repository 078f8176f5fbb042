"""Regular-polygon table: numeric alpha and beta against the closed forms.

    python3 scripts/regular_table.py --max-n 20 --svg residuals.svg
"""

import argparse
import csv
import sys

from billiard_product.search import regular_polygon_table
from billiard_product.svg import scatter_svg


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=20)
    ap.add_argument("--svg", help="write beta(R_n) - 16 against n")
    a = ap.parse_args()
    rows = regular_polygon_table(a.max_n)
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["n", "alpha", "diameter", "beta", "beta_formula", "residual"])
    for r in rows:
        w.writerow([r.n, f"{r.alpha:.10f}", f"{r.diameter:.10f}", f"{r.beta:.10f}",
                    f"{r.beta_formula:.10f}", f"{r.beta - r.beta_formula:.2e}"])
    if a.svg:
        with open(a.svg, "w") as fh:
            fh.write(scatter_svg([r.n for r in rows], [r.beta - 16 for r in rows], "beta(R_n) - 16"))


if __name__ == "__main__":
    main()
