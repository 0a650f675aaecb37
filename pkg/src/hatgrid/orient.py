"""Tile orientations, two independent ways.

``fractal_orient`` walks a point of the pattern triangle through a few
affine self-maps until it lands in a grey region whose colour is known.
``oracle_orient`` lays out the symmetric cores of all tiles in a window and
lets exact-cover propagation force the remaining kites.  The two must agree
on every vertex the oracle resolves.

An orientation is the centre corner carrying the extra kites plus the
pointing class of the centre triangle.  Turning a tile by half a turn swaps
the pointing and keeps the corner, so the corner doubles as colour class.
"""

from __future__ import annotations

import collections
import functools
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from typing import NamedTuple

from .classify import HatType, PatternPoint, load_table, locate, table_dir
from .errors import DegenerateParameters, InconsistencyError, ResolutionError
from .exactnum import PHI, PHI_BIG, GoldenNumber
from .tiles import core, flip_offsets, forms, template
from .trigrid import Kite, Vertex, place, triangle_class

__all__ = [
    "Orientation",
    "fractal_colour",
    "fractal_orient",
    "build_orientation_table",
    "flipped_centres",
    "flipped_orient",
    "Propagation",
    "oracle_orient",
    "oracle_window",
]

MIRROR = (0, 2, 1)
DEFAULT_CAP = 64


class Orientation(NamedTuple):
    corner: int
    pointing: str

    @property
    def colour(self) -> int:
        return self.corner


def pointing_of(centre) -> str:
    return "up" if triangle_class(centre) else "down"


# -- fractal resolver ------------------------------------------------------

def build_orientation_table() -> dict:
    """Self-maps of the pattern triangle and their colour relabelling.

    A map sends ``g`` to ``anchor + scale * (g[cycle] - anchor[cycle])``,
    reduced back onto the triangle.  The colour at the original point is
    ``recolour[c]`` where ``c`` is the colour at the image.
    """
    phi2 = PHI * PHI
    third = GoldenNumber(1, 0, 3)
    maps = {}
    for k in range(3):
        e = [GoldenNumber(int(i == k)) for i in range(3)]
        maps[f"lightblue/{k}"] = {
            "anchor": e, "scale": PHI_BIG ** 2, "cycle": [0, 1, 2],
            "recolour": [(k + 2) % 3 if x == k else x for x in range(3)],
        }
        c = [GoldenNumber(0)] * 3
        c[k] = GoldenNumber(1, 0, 2)
        c[(k + 1) % 3] = phi2 / 2
        c[(k + 2) % 3] = PHI / 2
        maps[f"white_pair/{k}"] = {
            "anchor": c, "scale": -(PHI_BIG ** 2), "cycle": [1, 2, 0],
            "recolour": [(k + 2) % 3 if x == k else x for x in range(3)],
        }
    maps["white_isolated"] = {
        "anchor": [third] * 3, "scale": -(PHI_BIG ** 4), "cycle": [2, 0, 1],
        "recolour": [0, 1, 2],
    }
    for m in maps.values():
        m["anchor"] = [str(x) for x in m["anchor"]]
        m["scale"] = str(m["scale"])
    return {"format": "hatgrid-orientation/1",
            "base": "grey regions carry their colour in regions.json",
            "provenance": "recolour permutations fitted to the propagation oracle",
            "maps": maps}


class _Map(NamedTuple):
    anchor: tuple
    scale: GoldenNumber
    cycle: tuple
    recolour: tuple


@functools.lru_cache(maxsize=4)
def _maps(source: str | None) -> dict[str, _Map]:
    table = load_table("orientation.json")
    out = {}
    for key, m in table["maps"].items():
        out[key] = _Map(tuple(GoldenNumber.parse(x) for x in m["anchor"]),
                        GoldenNumber.parse(m["scale"]), tuple(m["cycle"]),
                        tuple(m["recolour"]))
    return out


def orientation_maps() -> dict[str, _Map]:
    d = table_dir()
    return _maps(str(d) if d else None)


def _fold(x) -> tuple:
    f = tuple(v - v.floor() for v in x)
    s = f[0] + f[1] + f[2]
    if s == 1:
        return f
    if s == 2:
        return tuple(1 - v for v in f)
    raise ResolutionError("mapped point left the pattern planes")


def fractal_colour(g, cap: int = DEFAULT_CAP) -> tuple[int, int]:
    """Colour at pattern position ``g`` and the number of maps applied."""
    maps = orientation_maps()
    cmap = (0, 1, 2)
    for it in range(cap + 1):
        try:
            kind, colour = locate(g)
        except (DegenerateParameters, InconsistencyError) as exc:
            if it == 0:
                raise
            raise ResolutionError("iteration hit a region boundary") from exc
        if kind is HatType.GREY:
            return cmap[colour], it
        if it == cap:
            break
        m = maps[kind.value if colour is None else f"{kind.value}/{colour}"]
        a, c = m.anchor, m.cycle
        g = _fold(tuple(a[i] + m.scale * (g[c[i]] - a[c[i]]) for i in range(3)))
        cmap = tuple(cmap[m.recolour[x]] for x in range(3))
        if cmap[0] == cmap[1] == cmap[2]:
            return cmap[0], it + 1
    raise ResolutionError(f"no colour after {cap} iterations")


def fractal_orient(pt: PatternPoint, hat_type: HatType | None = None,
                   roles: str = "standard", cap: int = DEFAULT_CAP) -> Orientation:
    """Orientation from a pattern point (already mirrored for mirrored roles)."""
    colour, _ = fractal_colour(pt.g, cap)
    if roles == "mirrored":
        colour = MIRROR[colour]
    # the pointing class of the centre follows the plane of the point
    return Orientation(colour, pt.pointing)


# -- flipped tiles ---------------------------------------------------------

def flipped_centres(centres: Mapping, lightblue: Iterable, shape: str = "hat8",
                    roles: str = "standard") -> list[tuple[int, int, int]]:
    """Unused triangles framed by three lightblue centres in the fixed pattern."""
    lb = set(lightblue)
    used = set(centres.values()) if isinstance(centres, Mapping) else set(centres)
    offs = flip_offsets(shape, roles)
    found = set()
    for c in lb:
        for o in offs:
            for s in (1, -1):
                t = tuple(c[i] - s * o[i] for i in range(3))
                if sum(t) not in (0, 1) or t in used or t in found:
                    continue
                sg = -1 if sum(t) else 1
                if all(tuple(t[i] + sg * q[i] for i in range(3)) in lb for q in offs):
                    found.add(t)
    return sorted(found)


def flipped_orient(centre, occupied, shape: str = "hat8", roles: str = "standard") -> Orientation:
    """The one corner whose flipped tile avoids every occupied kite."""
    _, form = forms(shape, roles)
    ok = [k for k in range(3)
          if not any(kt in occupied for kt in place(centre, template(shape, form, k)))]
    if len(ok) != 1:
        raise InconsistencyError(f"flipped tile at {centre} has {len(ok)} feasible corners")
    return Orientation(ok[0], pointing_of(centre))


# -- propagation oracle ----------------------------------------------------

@dataclass
class Propagation:
    """Exact-cover propagation over tiles with three candidate corners.

    ``slots`` maps a key to its three kite lists.  Kites shared by all three
    lists are owned from the start.  Options touching a kite owned elsewhere
    die; a slot with one live option commits; an interior kite with a single
    live coverer commits that coverer.  ``rounds`` records for each commit
    how many links of forcing separate it from the bare cores.
    """

    slots: dict
    interior: set
    chosen: dict = field(default_factory=dict)
    rounds: dict = field(default_factory=dict)

    def run(self) -> dict:
        slots, interior = self.slots, self.interior
        live = {key: set(range(len(opts))) for key, opts in slots.items()}
        cover = collections.defaultdict(set)
        for key, opts in slots.items():
            for j, kites in enumerate(opts):
                for kt in kites:
                    cover[kt].add((key, j))
        owner: dict = {}
        dead_round: dict = {}
        kite_dead: dict = {}
        kq: collections.deque = collections.deque()
        sq: collections.deque = collections.deque()

        def eliminate(key, j, rnd):
            if j not in live[key]:
                return
            live[key].discard(j)
            dead_round[(key, j)] = rnd
            for kt in slots[key][j]:
                cover[kt].discard((key, j))
                if kite_dead.get(kt, -1) < rnd:
                    kite_dead[kt] = rnd
                kq.append(kt)
            sq.append(key)

        def own(kt, key, rnd):
            prev = owner.get(kt)
            if prev is not None:
                if prev != key:
                    raise InconsistencyError(f"kite {kt} claimed twice")
                return
            owner[kt] = key
            for k2, j2 in list(cover[kt]):
                if k2 != key:
                    eliminate(k2, j2, rnd)

        def commit(key, j, rnd):
            if key in self.chosen:
                if self.chosen[key] != j:
                    raise InconsistencyError(f"slot {key} forced two ways")
                return
            self.chosen[key] = j
            self.rounds[key] = rnd
            for jj in list(live[key]):
                if jj != j:
                    eliminate(key, jj, rnd)
            for kt in slots[key][j]:
                own(kt, key, rnd)

        for key, opts in slots.items():
            shared = set(opts[0]).intersection(*map(set, opts[1:]))
            for kt in shared:
                own(kt, key, 0)
        while sq or kq:
            while sq:
                key = sq.popleft()
                if not live[key]:
                    raise InconsistencyError(f"slot {key} has no feasible corner")
                if len(live[key]) == 1 and key not in self.chosen:
                    j = next(iter(live[key]))
                    cause = max(dead_round[(key, x)] for x in range(len(slots[key])) if x != j)
                    commit(key, j, cause + 1)
            if kq:
                kt = kq.popleft()
                if kt in interior and kt not in owner:
                    c = cover[kt]
                    if not c:
                        raise InconsistencyError(f"kite {kt} cannot be covered")
                    if len(c) == 1:
                        (key, j), = c
                        commit(key, j, kite_dead.get(kt, 0) + 1)
        return self.chosen


@dataclass
class OracleResult:
    orientations: dict          # Vertex -> Orientation
    flipped: dict               # centre -> Orientation
    rounds: dict                # Vertex -> forcing depth
    unresolved: list
    window_radius: int


def oracle_orient(window: Iterable[Vertex], types: Mapping, centres: Mapping, p=None,
                  shape: str = "hat8", roles: str = "standard",
                  interior: set | None = None) -> OracleResult:
    """Orientations forced by propagation inside the given window.

    ``types`` and ``centres`` map every window vertex to its hat type and
    centre triangle.  ``interior`` is the set of kites that must be covered;
    outside it the propagation only excludes.
    """
    window = list(window)
    uform, fform = forms(shape, roles)
    lb = [centres[v] for v in window if types[v] is HatType.LIGHTBLUE]
    flips = flipped_centres({v: centres[v] for v in window}, lb, shape, roles)
    slots = {}
    for v in window:
        c = centres[v]
        slots[("u", v)] = [place(c, template(shape, uform, k)) for k in range(3)]
    for t in flips:
        slots[("f", t)] = [place(t, template(shape, fform, k)) for k in range(3)]
    if interior is None:
        interior = set()
    prop = Propagation(slots, set(interior))
    chosen = prop.run()
    orients, flipped, rounds = {}, {}, {}
    for (tag, key), j in chosen.items():
        if tag == "u":
            orients[key] = Orientation(j, pointing_of(centres[key]))
            rounds[key] = prop.rounds[(tag, key)]
        else:
            flipped[key] = Orientation(j, pointing_of(key))
    unresolved = [v for v in window if v not in orients]
    radius = max((max(abs(x) for x in (v[0], v[1], -v[0] - v[1])) for v in window), default=0)
    return OracleResult(orients, flipped, rounds, unresolved, radius)


@dataclass
class OracleDiff:
    result: OracleResult
    target: int
    compared: int
    mismatches: list            # (vertex, fractal, oracle)
    unresolved_in_target: list


def oracle_window(p, target: int, mode: str = "hat8", roles: str = "standard",
                  margin: int = 4, start: int | None = None,
                  max_factor: int = 8) -> OracleDiff:
    """Run the oracle on a growing window and compare with the resolver.

    The window starts at twice ``target`` and doubles until every vertex
    within ``target`` is forced, but never beyond ``max_factor * target``.
    All resolved vertices of the final window are compared.
    """
    from .classify import pattern_point
    from .realise import centre_index, interior_ball
    from .trigrid import enumerate_window, hex_radius, index6, kites_in_ball

    cmode = "tenkite" if mode == "tenkite" else roles
    radius = start or max(2 * target, 1)
    limit = max(max_factor * target, radius)
    while True:
        win = enumerate_window(radius)
        types, centres, points = {}, {}, {}
        for v in win:
            iv = index6(v, p)
            points[v] = pattern_point(v, p, roles, iv)
            types[v] = locate(points[v])[0]
            centres[v] = centre_index(iv, cmode)
        anchor, rho = interior_ball(p, cmode, radius, margin)
        res = oracle_orient(win, types, centres, p, mode, roles, set(kites_in_ball(anchor, rho)))
        missing = [v for v in res.unresolved if hex_radius(v) <= target]
        if not missing or 2 * radius > limit:
            break
        radius *= 2
    mismatches = []
    for v, o in res.orientations.items():
        f = fractal_orient(points[v], types[v], roles)
        if f != o:
            mismatches.append((v, f, o))
    return OracleDiff(res, target, len(res.orientations), mismatches, missing)


def core_kites(centre, shape: str = "hat8", form: str = "A") -> list[Kite]:
    return place(centre, sorted(core(shape, form)))
