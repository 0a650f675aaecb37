"""Kite-level assembly of hat and 10-kite tilings, plus the coverage check.

``generate`` runs the whole pipeline for a window of T::

    >>> from hatgrid.fibline import FibParams
    >>> t = generate(FibParams.from_pair("1/5", "1/7"), radius=8)
    >>> verify(t).clean
    True
"""

from __future__ import annotations

import collections
import functools
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from .classify import HatType, locate, pattern_point
from .errors import GenerationFailed, InconsistencyError
from .fibline import FibParams
from .orient import Orientation, flipped_centres, flipped_orient, fractal_orient
from .realise import centre_index, interior_ball
from .tiles import core, flip_offsets, forms, template
from .trigrid import Kite, Vertex, enumerate_window, index6, kites_in_ball, place

__all__ = [
    "HatTile",
    "Tiling",
    "VerifyReport",
    "assemble_core6",
    "assemble_hat",
    "assemble_tenkite",
    "place_flipped",
    "verify",
    "generate",
    "metatile_counts",
    "centre_line_classes",
    "tile_decoration",
    "decoration_signatures",
]

TILE_MODES = ("hat8", "tenkite")
ROLES = ("standard", "mirrored")
DEFAULT_MARGIN = 4


@dataclass(frozen=True)
class HatTile:
    chirality: str                  # "unflipped" or "flipped"
    type: HatType
    orientation: Orientation
    centre: tuple[int, int, int]
    kites: tuple[Kite, ...]
    vertex: Vertex | None = None    # the T vertex of an unflipped tile

    def __post_init__(self):
        if len(set(self.kites)) != len(self.kites):
            raise InconsistencyError(f"tile at {self.centre} repeats a kite")


@dataclass
class Tiling:
    params: FibParams
    mode: str
    roles: str
    tiles: list[HatTile]
    radius: int
    margin: int = DEFAULT_MARGIN
    _interior: frozenset | None = field(default=None, repr=False, compare=False)

    @property
    def shape(self) -> str:
        return self.mode

    @property
    def centre_mode(self) -> str:
        return "tenkite" if self.mode == "tenkite" else self.roles

    @property
    def interior_radius(self) -> int:
        return max(self.radius - self.margin, 0)

    def interior_kites(self) -> frozenset:
        if self._interior is None:
            anchor, rho = interior_ball(self.params, self.centre_mode, self.radius, self.margin)
            self._interior = frozenset(kites_in_ball(anchor, rho))
        return self._interior

    def is_interior(self, tile: HatTile) -> bool:
        return Kite(tile.centre, 0) in self.interior_kites()


def _check(mode: str, roles: str) -> None:
    if mode not in TILE_MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if roles not in ROLES:
        raise ValueError(f"unknown roles {roles!r}")


def assemble_core6(centre, form: str = "A") -> list[Kite]:
    """The six kites every orientation of a hat shares."""
    tmpl = template("hat8", form, 0)
    shared = core("hat8", form)
    return place(centre, [o for o in tmpl if o in shared])


def _assemble(shape, centre, o: Orientation, chirality, roles) -> list[Kite]:
    unflipped, flipped = forms(shape, roles)
    if chirality not in ("unflipped", "flipped"):
        raise ValueError(f"unknown chirality {chirality!r}")
    form = unflipped if chirality == "unflipped" else flipped
    return place(centre, template(shape, form, o.corner))


def assemble_hat(centre, o: Orientation, chirality: str = "unflipped",
                 roles: str = "standard") -> list[Kite]:
    return _assemble("hat8", centre, o, chirality, roles)


def assemble_tenkite(centre, o: Orientation, chirality: str = "unflipped",
                     roles: str = "standard") -> list[Kite]:
    return _assemble("tenkite", centre, o, chirality, roles)


def place_flipped(tiles: Sequence[HatTile], interior: Iterable[Kite] | None = None,
                  shape: str = "hat8", roles: str = "standard") -> list[HatTile]:
    """Flipped tiles in the gaps framed by lightblue triples.

    A gap whose orientation is still open is skipped when its centre lies
    outside ``interior`` (its neighbours are cut off by the window edge) and
    is an error otherwise.
    """
    occupied = {kt for t in tiles for kt in t.kites}
    lb = [t.centre for t in tiles if t.type is HatType.LIGHTBLUE]
    inner = None if interior is None else set(interior)
    out = []
    for c in flipped_centres([t.centre for t in tiles], lb, shape, roles):
        try:
            o = flipped_orient(c, occupied, shape, roles)
        except InconsistencyError:
            if inner is None or Kite(c, 0) in inner:
                raise
            continue
        kites = _assemble(shape, c, o, "flipped", roles)
        occupied.update(kites)
        out.append(HatTile("flipped", HatType.FLIPPED, o, c, tuple(kites)))
    return out


@dataclass
class VerifyReport:
    missing_kites: list[Kite]
    double_covered: list[Kite]
    counts: dict[str, int]

    @property
    def clean(self) -> bool:
        return not self.missing_kites and not self.double_covered

    def as_dict(self) -> dict:
        return {"missing_kites": [k.as_list() for k in self.missing_kites],
                "double_covered": [k.as_list() for k in self.double_covered],
                "counts": dict(self.counts)}


def verify(t: Tiling) -> VerifyReport:
    """Interior kites must be covered once; no kite anywhere twice."""
    cover = collections.Counter(kt for tile in t.tiles for kt in tile.kites)
    interior = t.interior_kites()
    missing = sorted(kt for kt in interior if kt not in cover)
    double = sorted(kt for kt, n in cover.items() if n > 1)
    counts = {h.value: 0 for h in HatType}
    for tile in t.tiles:
        if t.is_interior(tile):
            counts[tile.type.value] += 1
    return VerifyReport(missing, double, counts)


def generate(p: FibParams, radius: int, mode: str = "hat8", roles: str = "standard",
             margin: int = DEFAULT_MARGIN) -> Tiling:
    """Tiling built from every vertex of T within ``radius`` of the origin.

    Raises :class:`GenerationFailed` carrying the report if coverage fails.
    """
    _check(mode, roles)
    cmode = "tenkite" if mode == "tenkite" else roles
    tiles = []
    for v in enumerate_window(radius):
        iv = index6(v, p)
        pt = pattern_point(v, p, roles, iv)
        kind, _ = locate(pt)
        o = fractal_orient(pt, kind, roles)
        c = centre_index(iv, cmode)
        kites = _assemble(mode, c, o, "unflipped", roles)
        tiles.append(HatTile("unflipped", kind, o, c, tuple(kites), v))
    tiling = Tiling(p, mode, roles, tiles, radius, margin)
    tiles.extend(place_flipped(tiles, tiling.interior_kites(), mode, roles))
    report = verify(tiling)
    if not report.clean:
        raise GenerationFailed(
            f"{len(report.missing_kites)} missing, {len(report.double_covered)} double-covered kites",
            report)
    return tiling


# -- counting and decoration -----------------------------------------------

def metatile_counts(t: Tiling) -> dict[str, int]:
    """Lightblue and flipped tiles counted by whole H clusters.

    A cluster is a flipped tile with its three lightblue neighbours; it is
    counted when the flipped tile is interior.  ``orphans`` counts interior
    lightblue tiles that belong to no flipped tile in the window.
    """
    lb = {tile.centre for tile in t.tiles if tile.type is HatType.LIGHTBLUE}
    offs = flip_offsets(t.mode, t.roles)
    owned: set = set()
    flipped = in_clusters = 0
    for tile in t.tiles:
        if tile.chirality != "flipped":
            continue
        c = tile.centre
        sg = -1 if sum(c) else 1
        nb = {tuple(c[i] + sg * o[i] for i in range(3)) for o in offs}
        if len(nb) != 3 or not nb <= lb or nb & owned:
            raise InconsistencyError(f"flipped tile at {c} is not in a clean H cluster")
        owned |= nb
        if t.is_interior(tile):
            flipped += 1
            in_clusters += 3
    orphans = sum(1 for tile in t.tiles
                  if tile.type is HatType.LIGHTBLUE and t.is_interior(tile) and tile.centre not in owned)
    return {"flipped": flipped, "lightblue": in_clusters, "orphans": orphans}


def centre_line_classes(t: Tiling) -> dict[tuple[int, int], frozenset]:
    """Chiralities whose centre triangles each centre line of U passes.

    The centre line ``(k, m)`` runs midway between lines ``m`` and ``m + 1``
    of family ``k``; it passes triangle ``c`` iff ``c[k] == m``.
    """
    seen = collections.defaultdict(set)
    for tile in t.tiles:
        for k in range(3):
            seen[(k, tile.centre[k])].add(tile.chirality)
    return {key: frozenset(v) for key, v in seen.items()}


def tile_decoration(tile: HatTile, classes) -> tuple[str, ...]:
    """Per kite, in template order: ``own``, ``other``, ``none`` or ``mixed``.

    Kite ``(t, k)`` is crossed by exactly one centre line, ``(k, t[k])``.
    """
    out = []
    for kt in tile.kites:
        cls = classes.get((kt.corner, kt.tri[kt.corner]), frozenset())
        if len(cls) > 1:
            out.append("mixed")
        elif not cls:
            out.append("none")
        else:
            out.append("own" if tile.chirality in cls else "other")
    return tuple(out)


def decoration_signatures(t: Tiling, radius: int | None = None) -> collections.Counter:
    """Counter of (chirality, normalised decoration) over interior tiles."""
    classes = centre_line_classes(t)
    sig = collections.Counter()
    for tile in t.tiles:
        if t.is_interior(tile) and (radius is None or _centre_within(t, tile, radius)):
            sig[(tile.chirality, tile_decoration(tile, classes))] += 1
    return sig


def _centre_within(t: Tiling, tile: HatTile, radius: int) -> bool:
    return Kite(tile.centre, 0) in _ball(t.params, t.centre_mode, radius)


@functools.lru_cache(maxsize=8)
def _ball(p: FibParams, cmode: str, radius: int) -> frozenset:
    anchor, rho = interior_ball(p, cmode, radius, 0)
    return frozenset(kites_in_ball(anchor, rho))
