"""Acceptance criteria, one test each.

Each test records a one-line verdict; ``conftest.py`` prints them at the end
of the run.  Running this file directly prints the same lines.
"""

from __future__ import annotations

import math
import random
import time
from collections import Counter
from decimal import Decimal, getcontext


from hatgrid.assemble import decoration_signatures, generate, metatile_counts, verify
from hatgrid.classify import locate, pattern_point, type_constraint_from_lines
from hatgrid.exactnum import PHI_BIG, GoldenNumber
from hatgrid.fibline import GapLabel, fib_word, word_string
from hatgrid.orient import oracle_window
from hatgrid.realise import Embed2, embed_in_U, embed_T, turn_tangent, v_b, v_f, vertex_centre
from hatgrid.trigrid import black_count, enumerate_window, hex_radius, index6

from conftest import PRESETS, params

VERDICTS: dict[int, str] = {}
MODES = [("hat8", "standard"), ("hat8", "mirrored"), ("tenkite", "standard")]
_TILINGS: dict = {}


def record(n: int, ok: bool, detail: str) -> None:
    VERDICTS[n] = f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}"
    assert ok, VERDICTS[n]


def _tiling(i, mode, roles):
    key = (i, mode, roles)
    if key not in _TILINGS:
        start = time.perf_counter()
        t = generate(params(i), 20, mode, roles)
        _TILINGS[key] = (t, time.perf_counter() - start)
    return _TILINGS[key]


def test_1_end_to_end_legality():
    defects, slowest, runs = 0, 0.0, 0
    for i in range(len(PRESETS)):
        for mode, roles in MODES:
            t, secs = _tiling(i, mode, roles)
            r = verify(t)
            defects += len(r.missing_kites) + len(r.double_covered)
            slowest = max(slowest, secs)
            runs += 1
    record(1, defects == 0 and slowest < 10,
           f"{runs} runs at radius 20, {defects} coverage defects, slowest {slowest:.2f} s")


def test_2_oracle_equivalence():
    compared = mismatched = 0
    for i in range(len(PRESETS)):
        diff = oracle_window(params(i), 20, max_factor=2)
        compared += diff.compared
        mismatched += len(diff.mismatches)
    record(2, mismatched == 0 and compared >= 5000,
           f"{compared} resolved vertices compared, {mismatched} mismatches")


def test_3_fibonacci_statistics():
    start = time.perf_counter()
    d = params(0).d[0]
    w = fib_word(0, 10**5, d)
    ratio = w.count(GapLabel.L) / w.count(GapLabel.S)
    long = word_string(fib_word(-500_000, 10**6, d))
    secs = time.perf_counter() - start
    bad = long.count("SS") + long.count("LLL")
    err = abs(ratio - float(PHI_BIG))
    record(3, err < 1e-4 and bad == 0 and secs < 5,
           f"|L/S - Phi| = {err:.2e}, {bad} forbidden factors in 10^6 gaps, {secs:.2f} s")


def test_4_line_colour_structure():
    triple = outside = total = 0
    for i in range(len(PRESETS)):
        p = params(i)
        for v in enumerate_window(50):
            bc = black_count(v, p)
            total += 1
            if bc == 3:
                triple += 1
                continue
            if locate(pattern_point(v, p))[0] not in type_constraint_from_lines(bc):
                outside += 1
    record(4, triple == 0 and outside == 0,
           f"{total} vertices, {triple} with three black lines, {outside} types outside their line set")


def test_5_metatile_counting():
    rows = []
    ok = True
    for i in range(len(PRESETS)):
        for mode, roles in MODES:
            h = metatile_counts(_tiling(i, mode, roles)[0])
            ok &= h["lightblue"] == 3 * h["flipped"] and h["orphans"] == 0 and h["flipped"] > 0
            rows.append(h["flipped"])
    record(5, ok, f"flipped = lightblue / 3 in all {len(rows)} tilings "
                  f"({min(rows)} to {max(rows)} flipped each), no unclaimed lightblue")


def test_6_geometric_embedding():
    outside = checked = 0
    edge_sq = (2 * PHI_BIG) ** 2
    unit = Embed2((GoldenNumber(1), GoldenNumber(-1), GoldenNumber(0)))
    ok_shape = True
    for chirality, sign in (("standard", 1), ("mirrored", -1)):
        e = embed_T((1, -1), None, chirality)
        ok_shape &= e.length_sq() == edge_sq
        ok_shape &= turn_tangent(unit, e) == sign / (3 + 2 * PHI_BIG)
        for i in range(len(PRESETS)):
            p = params(i)
            for v in enumerate_window(20):
                lam = embed_in_U(v, p, chirality).lam
                inside = all(x.frac() != 0 for x in lam) and \
                    tuple(x.floor() for x in lam) == vertex_centre(v, p, chirality)
                outside += not inside
                checked += 1
    record(6, ok_shape and outside == 0,
           f"{checked} embedded vertices, {outside} outside their centre triangle, "
           f"edge 2*Phi and tan(alpha) = sqrt(3)/(3+2*Phi) exact: {ok_shape}")


def test_7_v_f_planes_and_v_b_confinement():
    cube = float(PHI_BIG ** 2)
    radii = (10, 20, 30, 40, 50)
    ok = True
    notes = []
    for i in range(len(PRESETS)):
        p = params(i)
        planes = set()
        # exact v_b extremes of each coordinate, per ring band
        bands = {r: [] for r in radii}
        for v in enumerate_window(radii[-1]):
            iv = index6(v, p)
            planes.add(v_f(iv).total())
            r = hex_radius(v)
            bands[next(x for x in radii if r <= x)].append(v_b(iv))
        widths, seen = [], []
        for r in radii:
            seen += bands[r]
            widths.append(max(max(b[k] for b in seen) - min(b[k] for b in seen) for k in range(3)))
        mono = all(a <= b for a, b in zip(widths, widths[1:]))
        below = all(w < PHI_BIG ** 2 for w in widths)
        close = cube - float(widths[-1]) < 0.05
        ok &= len(planes) == 2 and mono and below and close
        notes.append(f"{float(widths[-1]):.4f}")
    record(7, ok, f"two v_f planes per preset; v_b width at radius 50: {', '.join(notes)} "
                  f"(1+Phi = {cube:.4f}), monotone from radius 10")


def test_8_decoration_invariance():
    mismatches = tiles = 0
    for i in range(len(PRESETS)):
        for roles in ("standard", "mirrored"):
            sig = decoration_signatures(generate(params(i), 19, "tenkite", roles), 15)
            tiles += sum(sig.values())
            common = Counter()
            for (_, deco), n in sig.items():
                common[deco] += n
            top = common.most_common(1)[0][0]
            ok_deco = "mixed" not in top and "none" not in top
            mismatches += sum(n for deco, n in common.items() if deco != top) + (not ok_deco)
    record(8, mismatches == 0,
           f"{tiles} tiles within radius 15, {mismatches} off the shared own/other pattern")


def _fib(n):
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def test_9_exact_arithmetic_certification():
    getcontext().prec = 50
    phi = (Decimal(5).sqrt() - 1) / 2
    rng = random.Random(20240601)
    bad = 0
    n = 10**6
    fibs = [_fib(k) for k in range(2, 31)]
    for j in range(n):
        den = rng.choice((1, 1, 2, 3, 5, 7, 10, 97, 1000))
        if j % 10 == 0:
            # near ties: F(k) * phi is within 1/F(k) of F(k-1)
            k = rng.randrange(1, len(fibs))
            s = rng.choice((1, -1))
            a, b = s * fibs[k - 1] + rng.randint(-2, 2), -s * fibs[k]
        else:
            a, b = rng.randint(-10**6, 10**6), rng.randint(-10**6, 10**6)
        x = GoldenNumber(a, b, den)
        dx = (Decimal(a) + Decimal(b) * phi) / den
        if x.floor() != math.floor(dx):
            bad += 1
        c = a + rng.randint(-3, 3) if j % 3 else rng.randint(-10**6, 10**6)
        e = b + rng.choice((-1, 0, 1)) if j % 3 else rng.randint(-10**6, 10**6)
        y = GoldenNumber(c, e, den)
        dy = (Decimal(c) + Decimal(e) * phi) / den
        if x.compare(y) != (dx > dy) - (dx < dy):
            bad += 1
    record(9, bad == 0, f"{n} floor and {n} compare checks against 50-digit decimals, {bad} disagreements")


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
            except AssertionError:
                pass
    for n in sorted(VERDICTS):
        print(VERDICTS[n])
