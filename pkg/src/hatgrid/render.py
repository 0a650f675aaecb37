"""SVG output: one outlined path per tile, U coordinates scaled by 100."""

from __future__ import annotations

import collections
from fractions import Fraction
from xml.sax.saxutils import quoteattr

from .assemble import HatTile, Tiling, centre_line_classes
from .trigrid import Kite, triangle_corners

__all__ = ["kite_polygon", "tile_outline", "to_svg"]

SCALE = 100
SQ3_2 = 3 ** 0.5 / 2

TYPE_FILL = {
    "lightblue": "#9fd3ec",
    "grey": "#b4b4b4",
    "white_pair": "#ffffff",
    "white_isolated": "#f3efe4",
    "flipped": "#24508f",
}
# one colour per corner; half-turned tiles share the corner, hence the fill
CORNER_FILL = ("#e4a23a", "#5fa85b", "#b45a9a")
FLIPPED_CORNER_FILL = ("#8c5a12", "#2f6b2c", "#6e2a5c")
LINE_STROKE = {"unflipped": "#c8372d", "flipped": "#2b6cb0"}

Point = tuple[Fraction, Fraction, Fraction]


def _mid(p: Point, q: Point) -> Point:
    return tuple((p[i] + q[i]) / 2 for i in range(3))


def kite_polygon(kite: Kite) -> list[Point]:
    """Corner, edge midpoint, centroid, edge midpoint (line coordinates)."""
    corners = [tuple(Fraction(x) for x in c) for c in triangle_corners(kite.tri)]
    k = kite.corner
    p, q, r = corners[k], corners[(k + 1) % 3], corners[(k + 2) % 3]
    g = tuple((p[i] + q[i] + r[i]) / 3 for i in range(3))
    return [p, _mid(p, q), g, _mid(p, r)]


def tile_outline(kites) -> list[Point]:
    """Boundary of a union of kites, found by cancelling shared edges."""
    count = collections.Counter()
    for kt in kites:
        poly = kite_polygon(kt)
        for i in range(4):
            count[frozenset((poly[i], poly[(i + 1) % 4]))] += 1
    nxt = collections.defaultdict(list)
    for e, n in count.items():
        if n == 1:
            a, b = tuple(e)
            nxt[a].append(b)
            nxt[b].append(a)
    start = min(nxt)
    out, prev, cur = [start], None, start
    while True:
        step = [x for x in nxt[cur] if x != prev][0]
        if step == start:
            break
        out.append(step)
        prev, cur = cur, step
    return _drop_collinear(out)


def _drop_collinear(poly):
    out = []
    m = len(poly)
    for i in range(m):
        a, b, c = poly[i - 1], poly[i], poly[(i + 1) % m]
        u = (b[0] - a[0], b[1] - a[1])
        v = (c[0] - b[0], c[1] - b[1])
        if u[0] * v[1] - u[1] * v[0] != 0:
            out.append(b)
    return out


def _xy(p) -> tuple[float, float]:
    l0, l1, l2 = (float(x) for x in p)
    s = SCALE / 3 ** 0.5
    # y grows downwards in SVG
    return s * SQ3_2 * (l2 - l1), -s * (l0 - 0.5 * (l1 + l2))


def _path(points) -> str:
    return "M" + " L".join(f"{x:.3f},{y:.3f}" for x, y in map(_xy, points)) + " Z"


def _fill(tile: HatTile, colouring: str) -> str:
    if colouring == "by_type":
        return TYPE_FILL[tile.type.value]
    if colouring == "by_orientation":
        table = FLIPPED_CORNER_FILL if tile.chirality == "flipped" else CORNER_FILL
        return table[tile.orientation.corner]
    raise ValueError(f"unknown colouring {colouring!r}")


def to_svg(t: Tiling, colouring: str = "by_type", decoration: bool = False,
           interior_only: bool = False) -> str:
    tiles = [x for x in t.tiles if not interior_only or t.is_interior(x)]
    body, lines, xs, ys = [], [], [], []
    for tile in tiles:
        outline = tile_outline(tile.kites)
        for p in outline:
            x, y = _xy(p)
            xs.append(x)
            ys.append(y)
        attrs = {"d": _path(outline), "fill": _fill(tile, colouring),
                 "data-type": tile.type.value, "data-corner": str(tile.orientation.corner),
                 "data-pointing": tile.orientation.pointing}
        body.append("<path " + " ".join(f"{k}={quoteattr(v)}" for k, v in attrs.items()) + "/>")
    if decoration:
        classes = centre_line_classes(t)
        for tile in tiles:
            for kt in tile.kites:
                cls = classes.get((kt.corner, kt.tri[kt.corner]), frozenset())
                if len(cls) != 1:
                    continue
                (which,) = cls
                poly = kite_polygon(kt)
                (ax, ay), (bx, by) = _xy(poly[1]), _xy(poly[3])
                lines.append(f'<line x1="{ax:.3f}" y1="{ay:.3f}" x2="{bx:.3f}" y2="{by:.3f}" '
                            f'stroke="{LINE_STROKE[which]}"/>')
    pad = 20
    if xs:
        x0, y0, w, h = min(xs) - pad, min(ys) - pad, max(xs) - min(xs) + 2 * pad, max(ys) - min(ys) + 2 * pad
    else:
        x0 = y0 = 0
        w = h = 2 * pad
    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{x0:.3f} {y0:.3f} {w:.3f} {h:.3f}">',
             '<g stroke="#222" stroke-width="2" stroke-linejoin="round">', *body, "</g>"]
    if lines:
        parts += ['<g stroke-width="6" fill="none">', *lines, "</g>"]
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
