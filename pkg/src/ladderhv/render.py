"""Deterministic SVG drawings of regions and path families."""

from __future__ import annotations

from typing import Sequence

from ladderhv.arrays import Bounds, TwoRowedArray
from ladderhv.ladder import LadderRegion, Point

SCALE = 24
MARGIN = 30
COLORS = ("#1f4e79", "#9c2f2f", "#2f7d32", "#7b3f99", "#b8860b", "#006d6d")


def array_path(T: TwoRowedArray, bounds: Bounds) -> list[Point]:
    """Corner points of the east/north path with north-east turns at T."""
    (A1, A2), (E1, E2) = bounds.A, bounds.E
    corners = [Point(A1, A2)]
    y = A2
    for x, top in zip(T.top, T.bottom):
        corners.append(Point(x, y))
        corners.append(Point(x, top))
        y = top
    corners.append(Point(E1, y))
    corners.append(Point(E1, E2))
    out = []
    for p in corners:
        if not out or out[-1] != p:
            out.append(p)
    return out


class Canvas:
    def __init__(self, a: int, b: int):
        self.a, self.b = a, b
        self.parts: list[str] = []

    def xy(self, p) -> tuple[int, int]:
        return MARGIN + SCALE * p[0], MARGIN + SCALE * (self.b - p[1])

    def dot(self, p, r: float, cls: str, fill: str = "#000", stroke: str = "none"):
        x, y = self.xy(p)
        self.parts.append(f'<circle class="{cls}" cx="{x}" cy="{y}" r="{r}" fill="{fill}" stroke="{stroke}"/>')

    def polyline(self, pts: Sequence, cls: str, color: str, dash: str | None = None):
        coords = " ".join("{},{}".format(*self.xy(p)) for p in pts)
        extra = f' stroke-dasharray="{dash}"' if dash else ""
        self.parts.append(f'<polyline class="{cls}" points="{coords}" fill="none" '
                          f'stroke="{color}" stroke-width="2"{extra}/>')

    def label(self, p, text: str):
        x, y = self.xy(p)
        self.parts.append(f'<text x="{x}" y="{y}" font-size="10" text-anchor="middle">{text}</text>')

    def svg(self) -> str:
        w = 2 * MARGIN + SCALE * self.a
        h = 2 * MARGIN + SCALE * self.b
        head = (f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
                f'viewBox="0 0 {w} {h}">')
        return "\n".join([head, '<rect width="100%" height="100%" fill="#fff"/>', *self.parts, "</svg>"]) + "\n"


def render_svg(region: LadderRegion, starts: Sequence[Point], ends: Sequence[Point],
               family: Sequence[TwoRowedArray] = (), walls: Sequence[Sequence[Point]] = ()) -> str:
    c = Canvas(region.a, region.b)
    for x in range(region.a + 1):
        c.label((x, -0.8), str(x))
    for y in range(region.b + 1):
        c.label((-0.8, y - 0.15), str(y))
    for p in region.points():
        c.dot(p, 2, "cell")
    for wall in walls:
        c.polyline(wall, "wall", "#888", dash="2,3")
    for i, T in enumerate(family):
        color = COLORS[i % len(COLORS)]
        c.polyline(array_path(T, Bounds(starts[i], ends[i])), "path", color)
        for p in T.points():
            c.dot(p, 5, "turn", fill=color)
    for p in list(starts) + list(ends):
        c.dot(p, 7, "endpoint", fill="none", stroke="#000")
    return c.svg()
