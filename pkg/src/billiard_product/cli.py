"""Command line interface: ``billiard-product <command> ...``.

Exit codes: 0 success, 1 invalid input, 2 numerical failure (including a
failed ``verify`` run).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

import numpy as np

from . import billiard, dual, geom, product, search, steiner
from .errors import GeometryError, NumericalFailure
from .svg import polygon_orbit_svg, scatter_svg


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise InputError(message)


def _clean(x):
    """Round floats to 12 significant digits; infinities become strings."""
    if isinstance(x, dict):
        return {k: _clean(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_clean(v) for v in x]
    if isinstance(x, np.ndarray):
        return _clean(x.tolist())
    if isinstance(x, (bool, np.bool_)):
        return bool(x)
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, (float, np.floating)):
        x = float(x)
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        if math.isnan(x):
            return "nan"
        return float(format(x, ".12g"))
    return x


def _emit(payload, as_csv: bool, out):
    payload = _clean(payload)
    if not as_csv:
        out.write(json.dumps(payload, indent=2) + "\n")
        return
    rows = payload if isinstance(payload, list) else [payload]
    flat = [{k: (json.dumps(v) if isinstance(v, (list, dict)) else v) for k, v in r.items()} for r in rows]
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(flat[0]), lineterminator="\n")
    w.writeheader()
    w.writerows(flat)
    out.write(buf.getvalue())


def _floats(text: str, n: int, name: str) -> np.ndarray:
    try:
        vals = [float(t) for t in text.split(",")]
    except ValueError:
        raise InputError(f"{name} expects {n} comma-separated numbers, got {text!r}") from None
    if len(vals) != n or not all(map(math.isfinite, vals)):
        raise InputError(f"{name} expects {n} comma-separated finite numbers, got {text!r}")
    return np.array(vals)


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if v <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return v


def _load(path: str) -> geom.ConvexPolygon:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from None
    P, reordered = geom.polygon_from_json(data)
    if reordered:
        print(f"warning: vertices of {path} were reordered into ccw convex position", file=sys.stderr)
    return P


# -- commands ---------------------------------------------------------------


def cmd_alpha(a):
    P = _load(a.poly)
    o = billiard.alpha_polygon(P)
    out = {"alpha": o.length, "orbit": o.to_json(), "diameter": geom.diameter(P)[0]}
    if a.oracle is not None:
        out["oracle_n"] = a.oracle
        out["oracle_alpha"] = billiard.alpha_bruteforce(P, a.oracle)
    if a.svg:
        with open(a.svg, "w") as fh:
            fh.write(polygon_orbit_svg(P, o))
    return out


def cmd_beta(a):
    return product.billiard_product(_load(a.poly)).to_json()


def cmd_dual(a):
    P = _load(a.poly)
    z = _floats(a.z, 2, "--z")
    D = dual.polar_dual(P, z)
    out = {"z": z, **D.to_json(), "alpha_dual": product.alpha_dual_at(P, z)}
    return out


def cmd_santalo(a):
    P = _load(a.poly)
    if a.grid < 8:
        raise InputError("--grid must be at least 8")
    m, z = product.santalo_scan(P, a.grid)
    d = geom.diameter(P)[0]
    return {"min": m, "argmin": z, "diameter": d, "target": 8 / d, "grid": a.grid}


def cmd_table(a):
    if a.max_n < 3:
        raise InputError("--max-n must be at least 3")
    rows = search.regular_polygon_table(a.max_n)
    if a.svg:
        with open(a.svg, "w") as fh:
            fh.write(scatter_svg([r.n for r in rows], [r.beta - 16 for r in rows], "beta(R_n) - 16"))
    return [r.to_json() for r in rows]


def cmd_tri_scan(a):
    if a.res < 16:
        raise InputError("--res must be at least 16")
    return search.triangle_max_scan(a.res).to_json()


def cmd_quad_search(a):
    if a.res < 16:
        raise InputError("--res must be at least 16")
    r = search.quad_search(a.mode, a.res)
    if r.checks["conjecture_beaten"]:
        print(f"NOTICE: beta {r.best_beta:.10f} exceeds the conjectured quadrilateral value "
              f"{search.CONJECTURED_BETA:.10f}", file=sys.stderr)
    return r.to_json()


def cmd_steiner(a):
    P = _load(a.poly)
    ax = _floats(a.axis, 4, "--axis")
    p, q = ax[:2], ax[2:]
    if np.linalg.norm(q - p) == 0:
        raise InputError("--axis needs two distinct points")
    before, after = steiner.steiner_beta_any_axis(P, p, q - p)
    S = geom.steiner_symmetrize(P, p, q - p)
    out = {"beta_before": before, "beta_after": after, "delta": after - before, "symmetrized": S.vertices}
    if len(P) == 3:
        out["altitudes"] = steiner.steiner_beta_report(P).to_json()
    return out


def cmd_verify(a):
    from .verify import run_suite

    out = run_suite(a.suite, a.seed, a.cases)
    if not out["passed"]:
        raise NumericalFailure(json.dumps(_clean(out)))
    return out


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="billiard-product", description="Shortest billiard orbits and the billiard product of convex polygons.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, poly=True, **kw):
        sp = sub.add_parser(name, **kw)
        if poly:
            sp.add_argument("poly", help='JSON file {"vertices": [[x, y], ...]}')
        sp.add_argument("--csv", action="store_true", help="emit CSV instead of JSON")
        sp.set_defaults(func=fn)
        return sp

    sp = add("alpha", cmd_alpha, help="shortest closed billiard orbit")
    sp.add_argument("--oracle", type=_positive, help="also run the brute-force oracle with N samples")
    sp.add_argument("--svg", help="write polygon and orbit to this SVG file")
    add("beta", cmd_beta, help="billiard product 8 alpha / diam")
    sp = add("dual", cmd_dual, help="polar dual about a center")
    sp.add_argument("--z", required=True, help="center as X,Y")
    sp = add("santalo", cmd_santalo, help="minimize alpha of the dual over centers")
    sp.add_argument("--grid", type=_positive, default=60)
    sp = add("table", cmd_table, poly=False, help="regular polygon table")
    sp.add_argument("--max-n", type=_positive, default=12)
    sp.add_argument("--svg", help="write residual scatter beta - 16 to this SVG file")
    sp = add("tri-scan", cmd_tri_scan, poly=False, help="maximize beta over triangles")
    sp.add_argument("--res", type=_positive, default=200)
    sp = add("quad-search", cmd_quad_search, poly=False, help="maximize beta over quadrilaterals")
    sp.add_argument("--mode", choices=["edge", "diagonal"], default="edge")
    sp.add_argument("--res", type=_positive, default=64)
    sp = add("steiner", cmd_steiner, help="Steiner symmetrization about an axis")
    sp.add_argument("--axis", required=True, help="two points on the axis: X1,Y1,X2,Y2")
    sp = add("verify", cmd_verify, poly=False, help="randomized property checks")
    sp.add_argument("--suite", choices=["all", "geom", "billiard", "dual", "product", "steiner"], default="all")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--cases", type=_positive, default=20)
    return ap


def run(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        a = build_parser().parse_args(argv)
        payload = a.func(a)
        _emit(payload, a.csv, out)
        return 0
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except GeometryError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except NumericalFailure as exc:
        print(f"NumericalFailure: {exc}", file=sys.stderr)
        return 2
    except (RuntimeError, FloatingPointError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
