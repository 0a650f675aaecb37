"""Geometric realisations of T computed from the six integer indices.

Four 3D pictures of a vertex (``v_r``, ``v_f``, ``v_b``, ``v_phi``), the
centre triangle of its tile in U, and the planar embedding of T into U's
plane.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import InconsistencyError
from .exactnum import PHI, PHI_BIG, GoldenNumber
from .fibline import FibParams
from .trigrid import IndexVector6, Vertex, index6, vertex_lines

__all__ = [
    "Realisation3",
    "Embed2",
    "MODES",
    "v_r",
    "v_f",
    "v_b",
    "v_phi",
    "centre_raw",
    "centre_index",
    "embed_T",
    "embed_in_U",
    "lattice_position",
    "turn_tangent",
    "vertex_centre",
    "window_anchor",
    "interior_ball",
]

MODES = ("standard", "mirrored", "tenkite")

# Added to every raw centre formula so that triangle sums land in {0, 1}.
CENTRE_OFFSET = (1, 1, 0)

PHI2 = PHI * PHI


class Realisation3(NamedTuple):
    x: GoldenNumber
    y: GoldenNumber
    z: GoldenNumber

    def total(self) -> GoldenNumber:
        return self.x + self.y + self.z


def v_r(iv: IndexVector6) -> Realisation3:
    return Realisation3(*(GoldenNumber(iv.a[k] + iv.b[k]) for k in range(3)))


def v_f(iv: IndexVector6) -> Realisation3:
    return Realisation3(*(PHI_BIG * iv.a[k] + iv.b[k] for k in range(3)))


def v_b(iv: IndexVector6) -> Realisation3:
    return Realisation3(*(iv.a[k] - PHI_BIG * iv.b[k] for k in range(3)))


def v_phi(iv: IndexVector6) -> Realisation3:
    return Realisation3(*(PHI_BIG * (iv.a[k] + iv.b[k]) for k in range(3)))


def centre_raw(iv: IndexVector6, mode: str) -> tuple[int, int, int]:
    """The centre formula as written, before the lattice offset."""
    a, b = iv
    if mode == "standard":
        return tuple(a[k] + b[k] - b[(k + 1) % 3] for k in range(3))
    if mode == "mirrored":
        return tuple(a[k] + b[k] - b[(k - 1) % 3] for k in range(3))
    if mode == "tenkite":
        return tuple(a[k] + 2 * b[k] for k in range(3))
    raise ValueError(f"unknown mode {mode!r}")


def centre_index(iv: IndexVector6, mode: str) -> tuple[int, int, int]:
    """Centre triangle address in U, with coordinate sum 0 or 1.

    The 10-kite formula produces sums of the opposite sign, so it is
    point-reflected before the shift; this keeps the pointing class tied to
    the ``v_f`` plane the same way in every mode.
    """
    c = centre_raw(iv, mode)
    if mode == "tenkite":
        c = tuple(-x for x in c)
    t = tuple(c[k] + CENTRE_OFFSET[k] for k in range(3))
    if sum(t) not in (0, 1):
        raise InconsistencyError(f"centre {t} has coordinate sum {sum(t)}")
    return t


# -- planar embedding ------------------------------------------------------

class Embed2(NamedTuple):
    """A point or displacement of U's plane in line coordinates.

    ``lam`` holds the three signed distances to U's line families, measured
    in row heights.  Writing positions as ``sum(lam_k * u_k)`` with three unit
    vectors at 120 degrees keeps every coefficient in Q(phi); the sqrt(3)
    lives in the basis.
    """

    lam: tuple[GoldenNumber, GoldenNumber, GoldenNumber]

    def __sub__(self, other: Embed2) -> Embed2:
        return Embed2(tuple(self.lam[k] - other.lam[k] for k in range(3)))

    def quad(self) -> GoldenNumber:
        """Squared length in units where a U edge has length sqrt(3)."""
        l0, l1, l2 = self.lam
        return l0 * l0 + l1 * l1 + l2 * l2 - l0 * l1 - l1 * l2 - l2 * l0

    def length_sq(self) -> GoldenNumber:
        """Squared length in units where a U edge has length 1 + Phi."""
        return self.quad() * (PHI_BIG ** 4) / 3

    def xy(self, unit: float = 1.0) -> tuple[float, float]:
        """Cartesian position, U edge = ``unit`` (family 0 normal points up)."""
        l0, l1, l2 = (float(x) for x in self.lam)
        s = unit / 3 ** 0.5
        return (s * 0.8660254037844386 * (l2 - l1), s * (l0 - 0.5 * (l1 + l2)))


def _shift(chirality: str) -> int:
    if chirality == "standard":
        return 1
    if chirality == "mirrored":
        return -1
    raise ValueError(f"unknown chirality {chirality!r}")


def embed_T(v: Vertex | tuple[int, int], p: FibParams | None = None,
            chirality: str = "standard") -> Embed2:
    """Linear image of a T vertex in U's plane; the origin stays fixed.

    The map sends ``n`` to ``lam_k = n_k - phi^2 * n_{k+s}`` with s = +1 for
    the standard chirality and -1 for the mirrored one: a similarity with
    scale 2*Phi relative to a U edge of 1 + Phi, turned by +alpha or -alpha.
    ``p`` is accepted for symmetry with :func:`embed_in_U` and unused.
    """
    s = _shift(chirality)
    n = vertex_lines(v)
    return Embed2(tuple(GoldenNumber(n[k]) - PHI2 * n[(k + s) % 3] for k in range(3)))


def embed_in_U(v: Vertex | tuple[int, int], p: FibParams, chirality: str = "standard") -> Embed2:
    """Absolute position of the vertex in U's lattice frame (sum of lam is 2)."""
    s = _shift(chirality)
    base = embed_T(v, p, chirality)
    return Embed2(tuple(base.lam[k] + p.d[(k + s) % 3] + CENTRE_OFFSET[k] for k in range(3)))


def lattice_position(v: Vertex | tuple[int, int]) -> Embed2:
    """Unrotated, unscaled lattice picture of ``v_r``."""
    return Embed2(tuple(GoldenNumber(x) for x in vertex_lines(v)))


def turn_tangent(a: Embed2, b: Embed2) -> GoldenNumber:
    """``tan(angle from a to b) / sqrt(3)``, exact.

    Unit vectors of the basis sit 120 degrees apart, so the cross product
    carries a factor sqrt(3)/2 that is divided out here.
    """
    x, y = a.lam, b.lam
    cross = sum((x[k] * y[(k + 1) % 3] - x[(k + 1) % 3] * y[k] for k in range(3)), GoldenNumber(0))
    dot = sum((x[k] * y[k] for k in range(3)), GoldenNumber(0)) - sum(
        (x[j] * y[k] for j in range(3) for k in range(3) if j != k), GoldenNumber(0)) / 2
    return cross / (2 * dot)


def vertex_centre(v: Vertex | tuple[int, int], p: FibParams, mode: str) -> tuple[int, int, int]:
    return centre_index(index6(v, p), mode)


# U-ball radius per T-ball radius, in line coordinates.  The hat embedding
# turns the T hexagon, so only its inscribed U hexagon is used.
_BALL_SCALE = {"standard": float(PHI) * 3 ** 0.5, "mirrored": float(PHI) * 3 ** 0.5,
               "tenkite": 2 - float(PHI)}


def window_anchor(p: FibParams, mode: str) -> tuple[GoldenNumber, ...]:
    """Where T's origin lands in U's lattice frame for the given mode."""
    if mode == "tenkite":
        return tuple(p.d[k] + CENTRE_OFFSET[k] for k in range(3))
    return embed_in_U((0, 0), p, mode).lam


def interior_ball(p: FibParams, mode: str, radius: int, margin: int = 4) -> tuple[tuple, float]:
    """Anchor and line-distance radius of the U region covered by T's
    ``radius - margin`` ball."""
    return window_anchor(p, mode), _BALL_SCALE[mode] * max(radius - margin, 0)
