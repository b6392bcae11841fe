"""Diagram output for wall-and-chamber decompositions.

The primary emitter writes SVG 1.1 by hand with a declared rational-to-pixel
map: the scale is chosen so that every wall endpoint lands on an integer
pixel, so the coordinates in the file are exact.  A matplotlib path renders
the same figure to raster or PDF for reports.
"""

from __future__ import annotations

from fractions import Fraction
from xml.sax.saxutils import escape

from .exact import AffinePoly, line_label, rat_str
from .chambers import Decomposition

AMBIENT_CORNERS = ((Fraction(1, 9), Fraction(1, 9)),
                   (Fraction(1), Fraction(1, 5)),
                   (Fraction(1), Fraction(1)))

AMP_LINE = AffinePoly(q0=Fraction(-1), qb=Fraction(-1), qc=Fraction(10))


def _lcm(a: int, b: int) -> int:
    from math import gcd
    return a * b // gcd(a, b)


class PixelMap:
    """Exact mapping (b, c) -> integer pixels; scale is a declared rational."""

    def __init__(self, points, base: int = 720):
        den = 1
        for (x, y) in points:
            den = _lcm(den, Fraction(x).denominator)
            den = _lcm(den, Fraction(y).denominator)
        mult = max(1, base // den + (1 if base % den else 0)) if den < base else 1
        self.scale = den * mult
        self.margin = self.scale // 8 + 40
        lo = Fraction(1, 9)
        self.size = int(self.scale * (1 - lo)) + 2 * self.margin

    def x(self, v) -> int:
        return self.margin + int(self.scale * (Fraction(v) - Fraction(1, 9)))

    def y(self, v) -> int:
        return self.size - self.margin - int(self.scale * (Fraction(v) - Fraction(1, 9)))


def _gather_points(dec: Decomposition):
    pts = list(AMBIENT_CORNERS)
    for w in dec.walls:
        pts.extend(w.segment)
    for ch in dec.chambers:
        pts.extend(ch.region.closure_polygon())
    return pts


def render_svg(dec: Decomposition, out_path: str) -> str:
    """Write the decomposition as an SVG file; returns the path."""
    if not dec.chambers:
        raise ValueError("empty decomposition has nothing to render")
    pm = PixelMap(_gather_points(dec))
    lines = []
    lines.append(f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
                 f'width="{pm.size}" height="{pm.size}" '
                 f'viewBox="0 0 {pm.size} {pm.size}">')
    lines.append(f'<!-- rational-to-pixel map: {pm.scale} pixels per unit, '
                 f'origin (1/9, 1/9) at ({pm.margin}, {pm.size - pm.margin}) -->')
    lines.append('<rect width="100%" height="100%" fill="white"/>')

    # ambient boundary: b = 1 edge, b = c edge, and the dashed bound
    (a0, a1, a2) = AMBIENT_CORNERS
    lines.append(f'<polygon points="{pm.x(a0[0])},{pm.y(a0[1])} '
                 f'{pm.x(a1[0])},{pm.y(a1[1])} {pm.x(a2[0])},{pm.y(a2[1])}" '
                 'fill="#f7f7f2" stroke="none"/>')
    lines.append(f'<line x1="{pm.x(a0[0])}" y1="{pm.y(a0[1])}" '
                 f'x2="{pm.x(a1[0])}" y2="{pm.y(a1[1])}" '
                 'stroke="#888" stroke-dasharray="6,4" stroke-width="2"/>')
    lines.append(f'<text x="{pm.x(Fraction(3, 4))}" y="{pm.y(Fraction(1, 6)) + 26}" '
                 f'font-size="13" fill="#666">{escape(line_label(AMP_LINE))}</text>')
    for (p, q) in ((a1, a2), (a0, a2)):
        lines.append(f'<line x1="{pm.x(p[0])}" y1="{pm.y(p[1])}" '
                     f'x2="{pm.x(q[0])}" y2="{pm.y(q[1])}" '
                     'stroke="#888" stroke-width="2"/>')

    segments = []
    for ch in dec.chambers:
        if ch.region.dimension() == 1:
            seg = ch.region._segment()
            if seg:
                segments.append((seg, True, ""))
    for w in dec.walls:
        segments.append((w.segment, False, line_label(w.poly)))
    for (seg, bold, label) in segments:
        (x1, y1), (x2, y2) = seg
        width = 5 if bold else 2
        color = "#111" if bold else "#333"
        lines.append(f'<line x1="{pm.x(x1)}" y1="{pm.y(y1)}" '
                     f'x2="{pm.x(x2)}" y2="{pm.y(y2)}" '
                     f'stroke="{color}" stroke-width="{width}"/>')
        if label:
            mx = (pm.x(x1) + pm.x(x2)) // 2
            my = (pm.y(y1) + pm.y(y2)) // 2
            lines.append(f'<text x="{mx + 4}" y="{my - 4}" font-size="12" '
                         f'fill="#444">{escape(label)}</text>')

    for ch in dec.chambers:
        if ch.region.dimension() != 2:
            continue
        w = ch.region.witness()
        lines.append(f'<text x="{pm.x(w[0])}" y="{pm.y(w[1])}" font-size="12" '
                     f'text-anchor="middle" fill="#0a3d62">{escape(ch.label)}</text>')
    lines.append("</svg>")
    with open(out_path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")
    return out_path


def render_matplotlib(dec: Decomposition, out_path: str) -> str:
    """Raster/PDF rendering of the same diagram via matplotlib."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(8, 8))
    (a0, a1, a2) = AMBIENT_CORNERS
    ax.fill([float(a0[0]), float(a1[0]), float(a2[0])],
            [float(a0[1]), float(a1[1]), float(a2[1])],
            color="#f7f7f2", zorder=0)
    ax.plot([float(a0[0]), float(a1[0])], [float(a0[1]), float(a1[1])],
            "--", color="#888", lw=1.5)
    for (p, q) in ((a1, a2), (a0, a2)):
        ax.plot([float(p[0]), float(q[0])], [float(p[1]), float(q[1])],
                color="#888", lw=1.5)
    for w in dec.walls:
        (x1, y1), (x2, y2) = w.segment
        ax.plot([float(x1), float(x2)], [float(y1), float(y2)], color="#333", lw=1.2)
    for ch in dec.chambers:
        if ch.region.dimension() == 1:
            seg = ch.region._segment()
            if seg:
                (x1, y1), (x2, y2) = seg
                ax.plot([float(x1), float(x2)], [float(y1), float(y2)],
                        color="#111", lw=3.2)
        else:
            wx, wy = ch.region.witness()
            ax.annotate(ch.label, (float(wx), float(wy)), fontsize=7,
                        ha="center", color="#0a3d62")
    ax.set_xlabel("b")
    ax.set_ylabel("c")
    ax.set_title(dec.label)
    ax.set_aspect("equal")
    fig.savefig(out_path, bbox_inches="tight", dpi=160)
    plt.close(fig)
    return out_path
