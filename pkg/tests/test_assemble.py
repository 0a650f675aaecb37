import collections
import dataclasses

import pytest

from hatgrid.assemble import (HatTile, assemble_core6, assemble_hat, assemble_tenkite,
                              decoration_signatures, generate, metatile_counts, place_flipped,
                              verify)
from hatgrid.classify import HatType
from hatgrid.errors import DegenerateParameters, GenerationFailed, InconsistencyError
from hatgrid.fibline import FibParams
from hatgrid.orient import Orientation
from hatgrid.realise import centre_index
from hatgrid.trigrid import Kite, index6

from conftest import params, tiling

UP, DOWN = (1, 0, 0), (0, 0, 0)


def _rot_kite(k, about):
    # turn a third about the centre of a sum-0 triangle ``about``
    d = tuple(k.tri[i] - about[i] for i in range(3))
    return Kite(tuple(about[i] + d[(i + 1) % 3] for i in range(3)), (k.corner - 1) % 3)


def test_core6():
    for c in (UP, DOWN, (4, -7, 3)):
        core = assemble_core6(c)
        assert len(set(core)) == 6
        assert {Kite(c, k) for k in range(3)} <= set(core)
    core = set(assemble_core6(DOWN))
    assert {_rot_kite(k, DOWN) for k in core} == core


def test_hat_completions():
    kites = [set(assemble_hat(DOWN, Orientation(k, "down"))) for k in range(3)]
    core = set(assemble_core6(DOWN))
    for i in range(3):
        assert len(kites[i]) == 8 and core <= kites[i]
        for j in range(i):
            assert len(kites[i] - kites[j]) == 2


def test_chirality_and_roles():
    o = Orientation(1, "up")
    a = assemble_hat(UP, o, "unflipped", "standard")
    b = assemble_hat(UP, o, "flipped", "mirrored")
    assert a == b
    assert set(assemble_hat(UP, o, "flipped")) != set(a)
    with pytest.raises(ValueError):
        assemble_hat(UP, o, "sideways")


def test_tenkite_has_two_full_triangles():
    for k in range(3):
        kites = assemble_tenkite(DOWN, Orientation(k, "down"))
        per = collections.Counter(kt.tri for kt in kites)
        assert len(kites) == 10
        assert sorted(per.values(), reverse=True) == [3, 3, 2, 1, 1]


def test_tenkite_centres_ignore_roles():
    p = params(0)
    for v in ((0, 0), (3, -2), (-5, 1)):
        iv = index6(v, p)
        assert centre_index(iv, "tenkite") == centre_index(iv, "tenkite")
    a, b = tiling(0, 12, "tenkite"), tiling(0, 12, "tenkite", "mirrored")
    assert [x.centre for x in a.tiles if x.vertex] == [x.centre for x in b.tiles if x.vertex]


@pytest.mark.parametrize("mode, roles", [("hat8", "standard"), ("hat8", "mirrored"),
                                         ("tenkite", "standard")])
def test_generate_is_clean(mode, roles):
    t = tiling(0, 20, mode, roles)
    report = verify(t)
    assert report.clean
    assert len(t.tiles) > 1000
    assert sum(report.counts.values()) > 400


def test_cores_disjoint_and_tiles_disjoint():
    t = tiling(1)
    cores = [kt for x in t.tiles if x.chirality == "unflipped" for kt in assemble_core6(x.centre)]
    assert len(cores) == len(set(cores))
    every = [kt for x in t.tiles for kt in x.kites]
    assert len(every) == len(set(every))


def test_delete_and_duplicate():
    t = tiling(0, 12)
    inner = t.interior_kites()
    victim = next(x for x in t.tiles if set(x.kites) <= inner)
    rest = [x for x in t.tiles if x is not victim]
    gone = verify(dataclasses.replace(t, tiles=rest, _interior=None))
    assert sorted(gone.missing_kites) == sorted(victim.kites) and not gone.double_covered
    twice = verify(dataclasses.replace(t, tiles=t.tiles + [victim], _interior=None))
    assert sorted(twice.double_covered) == sorted(victim.kites) and not twice.missing_kites


def test_flipped_tiles_sit_among_three_lightblue():
    t = tiling(2)
    lb = {x.centre for x in t.tiles if x.type is HatType.LIGHTBLUE}
    counts = metatile_counts(t)
    assert counts["flipped"] * 3 == counts["lightblue"]
    assert counts["orphans"] == 0
    for x in t.tiles:
        if x.chirality == "flipped":
            assert x.type is HatType.FLIPPED
            assert len([c for c in lb if _touches(c, x.centre)]) == 3


def _touches(a, b):
    # two unit triangles share a lattice point
    from hatgrid.trigrid import triangle_corners
    return bool(set(triangle_corners(a)) & set(triangle_corners(b)))


def test_place_flipped_is_idempotent_on_unflipped():
    t = tiling(0, 12)
    unflipped = [x for x in t.tiles if x.chirality == "unflipped"]
    again = place_flipped(unflipped, t.interior_kites())
    assert {(x.centre, x.orientation) for x in again} >= {
        (x.centre, x.orientation) for x in t.tiles if x.chirality == "flipped" and t.is_interior(x)}


def test_mirrored_keeps_lightblue_vertices():
    a, b = tiling(3), tiling(3, roles="mirrored")
    lb = lambda t: {x.vertex for x in t.tiles if x.type is HatType.LIGHTBLUE}
    assert lb(a) == lb(b)


def test_class_consistency():
    t = tiling(0)
    by_vertex = {x.vertex: x for x in t.tiles if x.vertex is not None}
    for v, x in by_vertex.items():
        for d in ((1, 0), (0, 1), (1, -1)):
            y = by_vertex.get((v[0] + d[0], v[1] + d[1]))
            if y is None:
                continue
            same = sum(x.centre) == sum(y.centre)
            if x.type is y.type is HatType.LIGHTBLUE:
                assert same
            white = (HatType.WHITE_PAIR, HatType.WHITE_ISOLATED)
            if x.type in white and y.type in white:
                assert not same


def test_tenkite_decoration():
    t = tiling(0, 19, "tenkite")
    sig = decoration_signatures(t, 15)
    assert {k[0] for k in sig} == {"unflipped", "flipped"}
    assert len({k[1] for k in sig}) == 1
    (deco,) = {k[1] for k in sig}
    assert "mixed" not in deco and "none" not in deco


def test_generation_failure_carries_report():
    t = tiling(0, 10)
    bad = HatTile("unflipped", HatType.GREY, Orientation(0, "up"), (1, 0, 0), (Kite((1, 0, 0), 0),))
    assert bad.kites
    with pytest.raises(InconsistencyError):
        HatTile("unflipped", HatType.GREY, Orientation(0, "up"), (1, 0, 0),
                (Kite((1, 0, 0), 0), Kite((1, 0, 0), 0)))
    exc = GenerationFailed("x", verify(t))
    assert exc.report.clean


def test_bad_inputs():
    with pytest.raises(ValueError):
        generate(params(0), 5, "hat9")
    with pytest.raises(DegenerateParameters):
        generate(FibParams.from_pair("1/2", "-1/2"), 5)
