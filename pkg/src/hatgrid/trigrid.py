"""Lattice bookkeeping for the dual grid T and the unit triangle grid U.

Vertices of T carry three line indices ``(n0, n1, n2)`` with zero sum.

Points of U's plane are written in line coordinates ``lam`` with
``lam0 + lam1 + lam2 == 2``; the lines of U sit at integer ``lam_k``.  A unit
triangle is addressed by ``t = floor(lam)`` of any interior point, so its
coordinate sum is 0 or 1:

* sum 1: corners ``t + e_k``, pointing up
* sum 0: corners ``t + 1 - e_k``, pointing down

A kite is one third of a triangle, named by the corner it touches.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from typing import NamedTuple

from .fibline import BLACK, FibParams, _floor_phi_n, line_colour

__all__ = [
    "Vertex",
    "IndexVector6",
    "Kite",
    "vertex_lines",
    "index6",
    "black_count",
    "enumerate_window",
    "hex_radius",
    "triangle_class",
    "triangle_corners",
    "triangles_at_point",
    "rotate_offsets",
    "reflect_offsets",
    "place",
    "kites_in_ball",
]

Triangle = tuple[int, int, int]


class Vertex(NamedTuple):
    n0: int
    n1: int

    @property
    def lines(self) -> tuple[int, int, int]:
        return (self.n0, self.n1, -self.n0 - self.n1)


class IndexVector6(NamedTuple):
    a: tuple[int, int, int]
    b: tuple[int, int, int]

    def mirrored(self) -> IndexVector6:
        a, b = self.a, self.b
        return IndexVector6((a[0], a[2], a[1]), (b[0], b[2], b[1]))


class Kite(NamedTuple):
    tri: Triangle
    corner: int

    def as_list(self) -> list[int]:
        return [*self.tri, self.corner]


def vertex_lines(v: Vertex | tuple[int, int]) -> tuple[int, int, int]:
    n0, n1 = v
    return (n0, n1, -n0 - n1)


def index6(v: Vertex | tuple[int, int], p: FibParams) -> IndexVector6:
    n = vertex_lines(v)
    a = tuple(_floor_phi_n(p.d[k], n[k]) for k in range(3))
    return IndexVector6(a, tuple(n[k] - a[k] for k in range(3)))


def black_count(v: Vertex | tuple[int, int], p: FibParams) -> int:
    n = vertex_lines(v)
    return sum(line_colour(n[k], p.d[k]) == BLACK for k in range(3))


def hex_radius(v: Iterable[int]) -> int:
    """Hexagonal lattice distance from the origin (works for T and U)."""
    v = tuple(v)
    if len(v) == 2:
        v = vertex_lines(v)
    return max(abs(x) for x in v)


def enumerate_window(radius: int) -> list[Vertex]:
    """All vertices within hexagonal distance ``radius``, sorted by (n0, n1)."""
    if radius < 0:
        raise ValueError("radius must be non-negative")
    out = []
    for n0 in range(-radius, radius + 1):
        lo = max(-radius, -radius - n0)
        hi = min(radius, radius - n0)
        out.extend(Vertex(n0, n1) for n1 in range(lo, hi + 1))
    return out


# -- unit triangles --------------------------------------------------------

def triangle_class(t: Triangle) -> int:
    s = t[0] + t[1] + t[2]
    if s not in (0, 1):
        raise ValueError(f"{t} is not a triangle address")
    return s


def triangle_corners(t: Triangle) -> list[Triangle]:
    if triangle_class(t):
        return [tuple(t[i] + (i == k) for i in range(3)) for k in range(3)]
    return [tuple(t[i] + (i != k) for i in range(3)) for k in range(3)]


def triangles_at_point(p: Triangle) -> list[Triangle]:
    """The six unit triangles meeting at lattice point ``p``."""
    out = []
    for k in range(3):
        out.append(tuple(p[i] - (i == k) for i in range(3)))
        out.append(tuple(p[i] - (i != k) for i in range(3)))
    return out


def kite_point(kite: Kite) -> Triangle:
    """The lattice point at which the kite sits."""
    return triangle_corners(kite.tri)[kite.corner]


def neighbour(t: Triangle, k: int) -> Triangle:
    """Triangle across the edge opposite corner ``k``."""
    step = -1 if triangle_class(t) else 1
    return tuple(t[i] + step * (i == k) for i in range(3))


# -- kite templates --------------------------------------------------------
# Offsets are written relative to a sum-0 centre; placing at a sum-1 centre
# applies the point reflection that swaps the two classes.

Offset = tuple[tuple[int, int, int], int]


def rotate_offsets(tmpl: Iterable[Offset]) -> list[Offset]:
    """Turn by a third about the centre by cycling the family indices."""
    return [((d[1], d[2], d[0]), (k - 1) % 3) for d, k in tmpl]


def reflect_offsets(tmpl: Iterable[Offset]) -> list[Offset]:
    """Mirror exchanging line families 1 and 2."""
    return [((d[0], d[2], d[1]), (0, 2, 1)[k]) for d, k in tmpl]


def place(centre: Triangle, tmpl: Iterable[Offset]) -> list[Kite]:
    s = -1 if triangle_class(centre) else 1
    c0, c1, c2 = centre
    return [Kite((c0 + s * d[0], c1 + s * d[1], c2 + s * d[2]), k) for d, k in tmpl]


def kites_in_ball(anchor, rho: float) -> Iterator[Kite]:
    """Kites of every triangle whose centroid lies within line distance
    ``rho`` of ``anchor`` (a point of U's plane in line coordinates)."""
    a = [float(x) for x in anchor]
    r = int(rho) + 2
    base = [int(x) for x in a]
    for t0 in range(base[0] - r, base[0] + r + 1):
        for t1 in range(base[1] - r, base[1] + r + 1):
            for s in (0, 1):
                t = (t0, t1, s - t0 - t1)
                # centroid offset: +1/3 on each coordinate for sum 1, +2/3 for sum 0
                c = 1 / 3 if s else 2 / 3
                if max(abs(t[i] + c - a[i]) for i in range(3)) <= rho:
                    for k in range(3):
                        yield Kite(t, k)
