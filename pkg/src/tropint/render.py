"""Static SVG pictures of two-dimensional polyhedral complexes."""

from __future__ import annotations

from fractions import Fraction

from .convex import PolyhedralComplex, Polyhedron
from .errors import DimensionMismatch

SCALE = 40
MARGIN = Fraction(1)


def _num(x) -> str:
    s = f"{float(x) * SCALE:.3f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def _far(v, d, length):
    m = max(abs(x) for x in d)
    return tuple(a + length * Fraction(b, m) for a, b in zip(v, d))


def _hull(points):
    """Convex hull (counter-clockwise) by the monotone chain."""
    pts = sorted(set(points))
    if len(pts) < 3:
        return pts

    def turn(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower, upper = [], []
    for q in pts:
        while len(lower) >= 2 and turn(lower[-2], lower[-1], q) <= 0:
            lower.pop()
        lower.append(q)
    for q in reversed(pts):
        while len(upper) >= 2 and turn(upper[-2], upper[-1], q) <= 0:
            upper.pop()
        upper.append(q)
    return lower[:-1] + upper[:-1]


def _cell_points(c: Polyhedron, length) -> list:
    pts = list(c.vertex_list)
    for v in c.vertex_list:
        for r in c.rays:
            pts.append(_far(v, r, length))
        for l in c.lines:
            pts.append(_far(v, l, length))
            pts.append(_far(v, tuple(-x for x in l), length))
    return pts


def render_svg(cx: PolyhedralComplex, ray_length=3, fill: bool = True) -> str:
    """Deterministic SVG text: polygons for 2-cells, segments for 1-cells, dots for vertices."""
    if cx.ambient_dim != 2:
        raise DimensionMismatch("only complexes in the plane can be drawn")
    L = Fraction(ray_length)
    shapes = {0: [], 1: [], 2: []}
    allpts = []
    for c in cx.cells:
        pts = _cell_points(c, L)
        allpts.extend(pts)
        shapes[c.dim].append((c, pts))
    if allpts:
        xs = [p[0] for p in allpts]
        ys = [-p[1] for p in allpts]
        x0, x1 = min(xs) - MARGIN, max(xs) + MARGIN
        y0, y1 = min(ys) - MARGIN, max(ys) + MARGIN
    else:
        x0 = y0 = Fraction(-1)
        x1 = y1 = Fraction(1)
    w, h = x1 - x0, y1 - y0
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{_num(x0)} {_num(y0)} {_num(w)} {_num(h)}" '
        f'width="{_num(w)}" height="{_num(h)}">',
    ]
    for c, pts in shapes[2]:
        poly = " ".join(f"{_num(p[0])},{_num(-p[1])}" for p in _hull(pts))
        color = "#cfe0f3" if fill else "none"
        out.append(f'  <polygon points="{poly}" fill="{color}" stroke="none"/>')
    for c, _ in shapes[1]:
        if c.lines:
            v = c.vertex_list[0]
            a, b = _far(v, c.lines[0], L), _far(v, tuple(-x for x in c.lines[0]), L)
        elif c.rays:
            a = c.vertex_list[0]
            b = _far(a, c.rays[0], L)
        else:
            a, b = c.vertex_list
        out.append(f'  <line x1="{_num(a[0])}" y1="{_num(-a[1])}" x2="{_num(b[0])}" y2="{_num(-b[1])}" '
                   f'stroke="black" stroke-width="2"/>')
    for c, _ in shapes[0]:
        v = c.vertex_list[0]
        label = f"({', '.join(str(x) for x in v)})"
        out.append(f'  <circle cx="{_num(v[0])}" cy="{_num(-v[1])}" r="4" fill="black"/>')
        out.append(f'  <text x="{_num(v[0] + Fraction(1, 8))}" y="{_num(-v[1] - Fraction(1, 8))}" '
                   f'font-size="12">{label}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
