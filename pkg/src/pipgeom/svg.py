"""Static SVG pictures of polygons on the integer lattice.

Output shows the unit lattice as dots, the polygon filled, and every
boundary lattice point highlighted.  Floating point appears only here,
in presentation coordinates; nothing feeds back into the geometry.
"""

from __future__ import annotations

from fractions import Fraction

from .exact import Vec2, rat_ceil, rat_floor
from .polygon import RationalPolygon


def _fmt(v: float) -> str:
    s = f"{v:.3f}".rstrip("0").rstrip(".")
    return s if s else "0"


def render_svg(P: RationalPolygon, scale: int = 48, margin: int = 1) -> str:
    """Render a polygon as a standalone SVG 1.1 document."""
    xmin, xmax, ymin, ymax = P.bounding_box()
    gx0, gx1 = rat_floor(xmin) - margin, rat_ceil(xmax) + margin
    gy0, gy1 = rat_floor(ymin) - margin, rat_ceil(ymax) + margin

    def px(x: Fraction | int) -> float:
        return float((x - gx0) * scale)

    def py(y: Fraction | int) -> float:
        return float((gy1 - y) * scale)  # flip: SVG y grows downward

    width, height = (gx1 - gx0) * scale, (gy1 - gy0) * scale
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]
    path = " ".join(
        f"{'M' if i == 0 else 'L'} {_fmt(px(v.x))} {_fmt(py(v.y))}"
        for i, v in enumerate(P.vertices)
    )
    parts.append(
        f'<path d="{path} Z" fill="#c8c8c8" fill-opacity="0.8" '
        'stroke="black" stroke-width="1.5"/>'
    )
    boundary = set()
    for e in P.edges():
        for x, y in _segment_points(e.start, e.end):
            boundary.add((x, y))
    for gx in range(gx0, gx1 + 1):
        for gy in range(gy0, gy1 + 1):
            if (gx, gy) in boundary:
                continue
            parts.append(
                f'<circle cx="{_fmt(px(gx))}" cy="{_fmt(py(gy))}" r="2" fill="#404040"/>'
            )
    for gx, gy in sorted(boundary):
        parts.append(
            f'<circle cx="{_fmt(px(gx))}" cy="{_fmt(py(gy))}" r="4" '
            'fill="black" stroke="white" stroke-width="1"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _segment_points(a: Vec2, b: Vec2) -> list[tuple[int, int]]:
    pts = []
    if a.x == b.x:
        if a.x.denominator == 1:
            lo, hi = min(a.y, b.y), max(a.y, b.y)
            pts = [(int(a.x), y) for y in range(rat_ceil(lo), rat_floor(hi) + 1)]
        return pts
    if a.x > b.x:
        a, b = b, a
    slope = (b.y - a.y) / (b.x - a.x)
    for x in range(rat_ceil(a.x), rat_floor(b.x) + 1):
        y = a.y + (x - a.x) * slope
        if y.denominator == 1:
            pts.append((x, int(y)))
    return pts
