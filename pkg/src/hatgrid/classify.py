"""Hat types from the periodic pattern of reduced ``v_b`` positions.

``v_b`` is confined to a cube of edge 1 + Phi.  Dividing out the cube edge
and measuring from the far corner gives the fractional parts
``f_k = phi*n_k + d_k - a_k`` in [0, 1).  They sum to 1 or 2, so every vertex
lands on one of two triangular cuts through the unit cube; reflecting the
second cut through the cube centre (``g = 1 - f``) lays both on the same
triangle, and the regions on that triangle decide the type.

The region polygons are frozen in ``data/regions.json`` with exact corner
coordinates.  ``build_region_table`` regenerates them.
"""

from __future__ import annotations

import enum
import functools
import json
import os
from importlib import resources
from pathlib import Path
from typing import NamedTuple

from .errors import DegenerateParameters, InconsistencyError
from .exactnum import PHI, GoldenNumber
from .fibline import FibParams
from .realise import v_b, v_f
from .trigrid import IndexVector6, Vertex, index6, vertex_lines

__all__ = [
    "HatType",
    "PatternPoint",
    "fractional_parts",
    "reduce_to_pattern",
    "pattern_point",
    "hat_type",
    "locate",
    "type_constraint_from_lines",
    "build_region_table",
    "load_table",
]

TABLE_ENV = "HATGRID_TABLE_DIR"

ONE = GoldenNumber(1)
PHI2 = PHI * PHI
PHI3 = PHI2 * PHI


class HatType(str, enum.Enum):
    LIGHTBLUE = "lightblue"
    GREY = "grey"
    WHITE_PAIR = "white_pair"
    WHITE_ISOLATED = "white_isolated"
    FLIPPED = "flipped"

    def __str__(self) -> str:
        return self.value


class PatternPoint(NamedTuple):
    """Position on the pattern triangle; ``g`` sums to one."""

    g: tuple[GoldenNumber, GoldenNumber, GoldenNumber]
    pointing: str

    @property
    def u(self) -> tuple[GoldenNumber, GoldenNumber]:
        return self.g[0], self.g[1]

    def mirrored(self) -> PatternPoint:
        g = self.g
        return PatternPoint((g[0], g[2], g[1]), self.pointing)


def fractional_parts(v: Vertex | tuple[int, int], p: FibParams,
                     iv: IndexVector6 | None = None) -> tuple[GoldenNumber, ...]:
    n = vertex_lines(v)
    a = (iv or index6(v, p)).a
    return tuple(PHI * n[k] + p.d[k] - a[k] for k in range(3))


def _fold(f) -> PatternPoint:
    s = f[0] + f[1] + f[2]
    if s == 1:
        return PatternPoint(tuple(f), "up")
    if s == 2:
        return PatternPoint(tuple(ONE - x for x in f), "down")
    raise InconsistencyError(f"fractional parts sum to {s}")


def reduce_to_pattern(vb, plane: str, p: FibParams) -> PatternPoint:
    """Map a ``v_b`` triple into the pattern triangle.

    ``plane`` is ``"up"`` or ``"down"`` as read off the ``v_f`` coordinate sum.
    """
    # a shift of v_b by the cube edge 1 + Phi shifts f by exactly 1
    f = tuple(x - x.floor() for x in (p.d[k] - PHI2 * vb[k] for k in range(3)))
    pt = _fold(f)
    if pt.pointing != plane:
        raise InconsistencyError("v_b and v_f disagree on the plane")
    return pt


def plane_of(iv: IndexVector6) -> str:
    # sum of v_f is phi * sum(a), and sum(a) is -1 or -2
    return "up" if v_f(iv).total() == -PHI else "down"


def pattern_point(v: Vertex | tuple[int, int], p: FibParams, roles: str = "standard",
                  iv: IndexVector6 | None = None) -> PatternPoint:
    """Pattern position of a vertex; mirrored roles read the mirrored pattern."""
    iv = iv or index6(v, p)
    pt = reduce_to_pattern(v_b(iv), plane_of(iv), p)
    return pt.mirrored() if roles == "mirrored" else pt


# -- region table ----------------------------------------------------------

def _clip(poly, axis: int, bound: GoldenNumber, keep_below: bool):
    # one Sutherland-Hodgman pass against g[axis] <= bound (or >= bound)
    def keep(p):
        return p[axis] <= bound if keep_below else p[axis] >= bound

    def cut(p, q):
        t = (bound - p[axis]) / (q[axis] - p[axis])
        return tuple(p[k] + t * (q[k] - p[k]) for k in range(3))

    out = []
    for i, q in enumerate(poly):
        p = poly[i - 1]
        if keep(q):
            if not keep(p):
                out.append(cut(p, q))
            out.append(q)
        elif keep(p):
            out.append(cut(p, q))
    dedup = [x for i, x in enumerate(out) if x != out[i - 1]]
    return dedup if len(dedup) > 1 else out[:1]


def _piece(constraints):
    poly = [(ONE, GoldenNumber(0), GoldenNumber(0)),
            (GoldenNumber(0), ONE, GoldenNumber(0)),
            (GoldenNumber(0), GoldenNumber(0), ONE)]
    for axis, lo, hi in constraints:
        if lo is not None:
            poly = _clip(poly, axis, lo, keep_below=False)
        if hi is not None:
            poly = _clip(poly, axis, hi, keep_below=True)
    return poly


def build_region_table() -> dict:
    """Exact region polygons on the pattern triangle.

    A coordinate in [phi^2, phi) marks a black line through the vertex.
    """
    pieces = []

    def add(kind, colour, constraints):
        poly = _piece(constraints)
        if len(poly) >= 3:
            pieces.append({"type": kind, "colour": colour,
                           "polygon": [[str(x) for x in pt] for pt in poly]})

    for k in range(3):
        add("lightblue", k, [(k, PHI, None)])
    add("white_isolated", None, [(k, None, PHI2) for k in range(3)])
    for j in range(3):
        i, l = (j + 1) % 3, (j + 2) % 3
        add("grey", j, [(i, PHI2, PHI), (l, PHI2, PHI)])
    for k in range(3):
        k1, k2 = (k + 1) % 3, (k + 2) % 3
        add("grey", k2, [(k, PHI2, PHI), (k1, None, PHI2), (k2, None, PHI3)])
        add("white_pair", k, [(k, PHI2, PHI), (k1, None, PHI2), (k2, PHI3, PHI2)])
    return {"format": "hatgrid-regions/1",
            "coordinates": "g0, g1, g2 on the triangle g0 + g1 + g2 = 1",
            "pieces": pieces}


def table_dir() -> Path | None:
    env = os.environ.get(TABLE_ENV)
    return Path(env) if env else None


def load_table(name: str) -> dict:
    """Read a frozen table, preferring ``$HATGRID_TABLE_DIR`` when set."""
    d = table_dir()
    if d is not None:
        return json.loads((d / name).read_text())
    return json.loads(resources.files("hatgrid").joinpath("data", name).read_text())


class _Piece(NamedTuple):
    kind: HatType
    colour: int | None
    poly: tuple


@functools.lru_cache(maxsize=4)
def _pieces(source: str | None) -> tuple[_Piece, ...]:
    table = load_table("regions.json")
    out = []
    for entry in table["pieces"]:
        poly = tuple(tuple(GoldenNumber.parse(x) for x in pt[:2]) for pt in entry["polygon"])
        out.append(_Piece(HatType(entry["type"]), entry["colour"], poly))
    return tuple(out)


def region_pieces() -> tuple[_Piece, ...]:
    d = table_dir()
    return _pieces(str(d) if d else None)


def _inside(poly, x: GoldenNumber, y: GoldenNumber) -> int:
    """1 strictly inside, 0 on the boundary, -1 outside (convex, ccw)."""
    best = 1
    m = len(poly)
    for i in range(m):
        (x0, y0), (x1, y1) = poly[i], poly[(i + 1) % m]
        c = ((x1 - x0) * (y - y0) - (y1 - y0) * (x - x0)).sign()
        if c < 0:
            return -1
        best = min(best, c)
    return best


def locate(pt: PatternPoint | tuple) -> tuple[HatType, int | None]:
    """Region type and colour index of a pattern point."""
    g = pt.g if isinstance(pt, PatternPoint) else pt
    x, y = g[0], g[1]
    for piece in region_pieces():
        where = _inside(piece.poly, x, y)
        if where > 0:
            return piece.kind, piece.colour
        if where == 0:
            raise DegenerateParameters("pattern point on a region boundary")
    raise InconsistencyError("pattern point outside every region")


def hat_type(pt: PatternPoint) -> HatType:
    return locate(pt)[0]


def type_constraint_from_lines(bc: int) -> frozenset[HatType]:
    if bc == 0:
        return frozenset({HatType.LIGHTBLUE, HatType.WHITE_ISOLATED})
    if bc == 1:
        return frozenset({HatType.WHITE_PAIR, HatType.GREY})
    if bc == 2:
        return frozenset({HatType.GREY})
    raise ValueError(f"black line count must be 0, 1 or 2, got {bc}")


def corner_distance_rule(pt: PatternPoint) -> bool:
    """Lightblue test phrased on the cube: every ``v_b`` coordinate is
    closer than 1 to the nearest cube corner.  On the pattern triangle the
    cube edge shrinks to 1, so the bound becomes phi^2."""
    for k in range(3):
        corner = [GoldenNumber(int(i == k)) for i in range(3)]
        if all(abs_gn(pt.g[i] - corner[i]) < PHI2 for i in range(3)):
            return True
    return False


def abs_gn(x: GoldenNumber) -> GoldenNumber:
    return -x if x.sign() < 0 else x
