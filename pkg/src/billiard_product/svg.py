"""Minimal SVG emission (no plotting dependency)."""

from __future__ import annotations

from xml.sax.saxutils import quoteattr

import numpy as np


def _frame(points: np.ndarray, size: float, pad: float):
    lo, hi = points.min(axis=0), points.max(axis=0)
    scale = (size - 2 * pad) / max(float(np.max(hi - lo)), 1e-12)

    def tx(p):
        p = np.asarray(p, dtype=float)
        return pad + (p[..., 0] - lo[0]) * scale, size - pad - (p[..., 1] - lo[1]) * scale

    return tx


def _path(xs, ys, closed=True) -> str:
    d = " ".join(f"{'M' if i == 0 else 'L'}{x:.4f},{y:.4f}" for i, (x, y) in enumerate(zip(xs, ys)))
    return d + (" Z" if closed else "")


def polygon_orbit_svg(P, orbit=None, size: float = 400.0, pad: float = 20.0) -> str:
    """Polygon (id ``polygon``) and, if given, its orbit (id ``orbit``)."""
    pts = P.vertices if orbit is None else np.vstack([P.vertices, orbit.points])
    tx = _frame(pts, size, pad)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size:g}" height="{size:g}" viewBox="0 0 {size:g} {size:g}">',
        f'<path id="polygon" d="{_path(*tx(P.vertices))}" fill="none" stroke="black" stroke-width="1.5"/>',
    ]
    if orbit is not None:
        parts.append(
            f'<path id="orbit" d="{_path(*tx(orbit.points))}" fill="none" stroke="blue" '
            f'stroke-width="1.2" stroke-dasharray="5,3"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def scatter_svg(xs, ys, title: str = "", size: float = 400.0, pad: float = 30.0) -> str:
    """Scatter of ``(x, y)`` with a dashed zero line when zero is in range."""
    pts = np.column_stack([np.asarray(xs, float), np.asarray(ys, float)])
    tx = _frame(pts, size, pad)
    px, py = tx(pts)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size:g}" height="{size:g}" viewBox="0 0 {size:g} {size:g}">',
        f"<title>{quoteattr(title)[1:-1]}</title>",
    ]
    lo, hi = pts[:, 1].min(), pts[:, 1].max()
    if lo <= 0 <= hi:
        _, y0 = tx(np.array([pts[0, 0], 0.0]))
        parts.append(f'<line id="zero" x1="{pad}" x2="{size - pad}" y1="{y0:.4f}" y2="{y0:.4f}" stroke="gray" stroke-dasharray="4,3"/>')
    parts.append('<g id="points">')
    parts += [f'<circle cx="{x:.4f}" cy="{y:.4f}" r="3" fill="black"/>' for x, y in zip(px, py)]
    parts += ["</g>", "</svg>"]
    return "\n".join(parts) + "\n"
