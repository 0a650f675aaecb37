"""Frozen kite templates for the hat and the 10-kite tile.

Offsets are relative to a sum-0 centre triangle (see ``trigrid.place``).
Each shape is stored once, with its extra kites at one corner; the other
corners come from turning the list, which keeps the kite order, so two
tiles can be compared kite by kite.

Coverage of generated windows is what certifies these lists.
"""

from __future__ import annotations

import functools

from .trigrid import Offset, reflect_offsets, rotate_offsets

__all__ = ["HAT", "TENKITE", "template", "core", "flip_offsets", "SHAPES"]

# Eight kites.  The centre triangle, three kites hooked on cyclically, and
# two extra kites meeting at centre corner 0.
HAT: tuple[Offset, ...] = (
    ((-1, 0, 1), 2), ((0, 0, 1), 1), ((0, 0, 0), 0), ((0, 0, 0), 1),
    ((0, 0, 0), 2), ((0, 1, 0), 0), ((0, 1, 0), 2), ((1, 0, 0), 2),
)

# Ten kites.  The centre triangle, three cyclic kites, a second full
# triangle across the edge facing corner 2, and one more kite pair.
TENKITE: tuple[Offset, ...] = (
    ((-1, 0, 1), 1), ((-1, 0, 1), 2), ((0, 0, 0), 0), ((0, 0, 0), 1),
    ((0, 0, 0), 2), ((0, 0, 1), 0), ((0, 0, 1), 1), ((0, 0, 1), 2),
    ((0, 1, 0), 2), ((1, 0, 0), 1),
)

SHAPES = {"hat8": HAT, "tenkite": TENKITE}


def _hat_corner(tmpl) -> int:
    # the two extra kites share a corner 1 - e_k of the centre
    cores = set(tmpl) & set(rotate_offsets(tmpl)) & set(rotate_offsets(rotate_offsets(tmpl)))
    points = set()
    for d, k in tmpl:
        if (d, k) in cores:
            continue
        # offsets summing to 1 belong to the other class
        if sum(d) == 1:
            points.add(tuple(d[i] + (i == k) for i in range(3)))
        else:
            points.add(tuple(d[i] + (i != k) for i in range(3)))
    (pt,) = points
    return pt.index(0)


def _tenkite_corner(tmpl) -> int:
    # the second full triangle sits one step out along family k
    counts: dict = {}
    for d, _ in tmpl:
        counts[d] = counts.get(d, 0) + 1
    (full,) = [d for d, c in counts.items() if c == 3 and d != (0, 0, 0)]
    return full.index(1)


@functools.lru_cache(maxsize=None)
def _by_corner(shape: str, form: str) -> dict[int, tuple[Offset, ...]]:
    base = list(SHAPES[shape])
    if form == "B":
        base = reflect_offsets(base)
    elif form != "A":
        raise ValueError(f"unknown form {form!r}")
    label = _hat_corner if shape == "hat8" else _tenkite_corner
    out = {}
    t = base
    for _ in range(3):
        out[label(t)] = tuple(t)
        t = rotate_offsets(t)
    if sorted(out) != [0, 1, 2]:
        raise AssertionError("template corners are not distinct")
    return out


def template(shape: str, form: str, corner: int) -> tuple[Offset, ...]:
    """Offsets for ``shape`` in mirror form ``"A"`` or ``"B"`` at ``corner``."""
    return _by_corner(shape, form)[corner]


@functools.lru_cache(maxsize=None)
def core(shape: str, form: str) -> frozenset:
    """Kites shared by all three corners of a form: the symmetric core."""
    opts = _by_corner(shape, form)
    return frozenset(opts[0]) & frozenset(opts[1]) & frozenset(opts[2])


def forms(shape: str, roles: str) -> tuple[str, str]:
    """(unflipped form, flipped form) for a chirality role assignment."""
    if roles == "standard":
        return "A", "B"
    if roles == "mirrored":
        return "B", "A"
    raise ValueError(f"unknown roles {roles!r}")


# Where a flipped tile sits: triangle t such that t + s*o is a lightblue
# centre for each o, s = +1 for a sum-0 t and -1 otherwise.
_HAT_FLIP = ((-1, 0, 1), (1, -1, 0), (0, 1, -1))
_TEN_FLIP = ((-1, 1, 1), (1, -1, 1), (1, 1, -1))


def flip_offsets(shape: str, roles: str) -> tuple[tuple[int, int, int], ...]:
    if shape == "tenkite":
        return _TEN_FLIP
    if roles == "standard":
        return _HAT_FLIP
    return tuple(tuple(-x for x in o) for o in _HAT_FLIP)
