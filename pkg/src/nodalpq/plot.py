"""SVG drawings of the real points of a curve.

Floating point enters only here; exact objects are converted at the boundary.
"""

from __future__ import annotations

from xml.sax.saxutils import escape

import numpy as np

from .bipoly import BiPoly
from .exact import to_float


def sample(F: BiPoly, window, n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    xmin, xmax, ymin, ymax = window
    xs = np.linspace(xmin, xmax, n)
    ys = np.linspace(ymin, ymax, n)
    X, Y = np.meshgrid(xs, ys)
    Z = np.zeros_like(X)
    for (i, j), c in F.terms.items():
        Z += to_float(c) * X**i * Y**j
    return xs, ys, Z


def contour_components(F: BiPoly, window, n: int = 512) -> list[np.ndarray]:
    """Zero-level polylines in (x, y) coordinates, one array per component."""
    from skimage.measure import find_contours

    xs, ys, Z = sample(F, window, n)
    out = []
    for path in find_contours(Z, 0.0):
        rows, cols = path[:, 0], path[:, 1]
        x = np.interp(cols, np.arange(n), xs)
        y = np.interp(rows, np.arange(n), ys)
        out.append(np.column_stack([x, y]))
    return out


def svg(F: BiPoly, window, n: int = 512, size: int = 480, nodes=(), title: str = "") -> str:
    xmin, xmax, ymin, ymax = window
    sx = size / (xmax - xmin)
    sy = size / (ymax - ymin)

    def px(x, y):
        return (x - xmin) * sx, (ymax - y) * sy

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
    ]
    if title:
        parts.append(f"<title>{escape(title)}</title>")
    parts.append(f'<rect x="0" y="0" width="{size}" height="{size}" fill="white" stroke="#999"/>')
    for comp in contour_components(F, window, n):
        pts = [px(x, y) for x, y in comp]
        d = "M " + " L ".join(f"{a:.2f},{b:.2f}" for a, b in pts)
        parts.append(f'<path d="{d}" fill="none" stroke="black" stroke-width="1.2"/>')
    for x, y in nodes:
        a, b = px(to_float(x), to_float(y))
        parts.append(f'<circle cx="{a:.2f}" cy="{b:.2f}" r="3" fill="red"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
