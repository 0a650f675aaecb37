"""Command line entry point: ``hatgrid <command> ...``.

Exit codes: 0 success, 2 bad or degenerate parameters, 3 verification
defects or oracle mismatches.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from .assemble import HatTile, Tiling, generate, metatile_counts, verify
from .classify import HatType, build_region_table
from .errors import DegenerateParameters, GenerationFailed, MalformedRational
from .exactnum import GoldenNumber, PHI_BIG
from .fibline import FibParams, fib_word, word_string
from .orient import Orientation, build_orientation_table, oracle_window
from .trigrid import Kite

EXIT_OK, EXIT_PARAMS, EXIT_DEFECTS = 0, 2, 3
SCHEMA = "hatgrid-tiling/1"


@dataclass(frozen=True)
class RunConfig:
    d0: str
    d1: str
    radius: int = 20
    mode: str = "hat8"
    roles: str = "standard"
    format: str = "json"
    colouring: str = "by_type"
    decoration: bool = False
    margin: int = 4

    def params(self) -> FibParams:
        return FibParams.from_pair(self.d0, self.d1)


# -- JSON ------------------------------------------------------------------

def tiling_to_json(t: Tiling) -> dict:
    return {
        "format": SCHEMA,
        "params": t.params.as_strings(),
        "mode": t.mode,
        "roles": t.roles,
        "window": {"radius": t.radius, "interior": t.interior_radius},
        "tiles": [
            {"chirality": x.chirality, "type": x.type.value,
             "orientation": {"corner": x.orientation.corner, "pointing": x.orientation.pointing},
             "centre": list(x.centre),
             "kites": [k.as_list() for k in x.kites]}
            for x in t.tiles
        ],
    }


def tiling_from_json(doc: dict) -> Tiling:
    prm = doc["params"]
    p = FibParams.from_pair(prm["d0"], prm["d1"])
    if str(p.d[2]) != str(GoldenNumber.parse(prm["d2"])):
        raise DegenerateParameters("d2 does not equal -d0 - d1")
    tiles = [
        HatTile(x["chirality"], HatType(x["type"]),
                Orientation(x["orientation"]["corner"], x["orientation"]["pointing"]),
                tuple(x["centre"]), tuple(Kite(tuple(k[:3]), k[3]) for k in x["kites"]))
        for x in doc["tiles"]
    ]
    w = doc["window"]
    return Tiling(p, doc["mode"], doc["roles"], tiles, w["radius"], w["radius"] - w["interior"])


def dump_json(doc) -> str:
    return json.dumps(doc, indent=1) + "\n"


# -- commands --------------------------------------------------------------

def _write(text: str, out: str | None) -> None:
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def run_generate(cfg: RunConfig, out: str | None = None) -> int:
    try:
        t = generate(cfg.params(), cfg.radius, cfg.mode, cfg.roles, cfg.margin)
    except GenerationFailed as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        _write(dump_json(exc.report.as_dict()), None)
        return EXIT_DEFECTS
    if cfg.format == "svg":
        from .render import to_svg
        _write(to_svg(t, cfg.colouring, cfg.decoration), out)
    else:
        _write(dump_json(tiling_to_json(t)), out)
    return EXIT_OK


def run_verify(path: str) -> int:
    t = tiling_from_json(json.loads(Path(path).read_text()))
    report = verify(t)
    _write(dump_json(report.as_dict()), None)
    return EXIT_OK if report.clean else EXIT_DEFECTS


def stats(cfg: RunConfig, gaps: int = 100_000) -> dict:
    p = cfg.params()
    t = generate(p, cfg.radius, cfg.mode, cfg.roles, cfg.margin)
    report = verify(t)
    h = metatile_counts(t)
    words = []
    for k in range(3):
        c = Counter(fib_word(0, gaps, p.d[k]))
        words.append({"family": k, "L": c["L"], "S": c["S"], "ratio": c["L"] / c["S"]})
    return {
        "params": p.as_strings(), "mode": cfg.mode, "roles": cfg.roles,
        "window": {"radius": t.radius, "interior": t.interior_radius},
        "counts": report.counts,
        "clusters": h,
        "lightblue_per_flipped": h["lightblue"] / h["flipped"] if h["flipped"] else None,
        "gaps": words,
        "golden_ratio": float(PHI_BIG),
    }


def run_stats(cfg: RunConfig, gaps: int = 100_000, as_json: bool = False) -> int:
    s = stats(cfg, gaps)
    if as_json:
        _write(dump_json(s), None)
        return EXIT_OK
    print(f"d = {s['params']['d0']}, {s['params']['d1']}, {s['params']['d2']}  "
          f"mode {s['mode']}/{s['roles']}  radius {s['window']['radius']} "
          f"(interior {s['window']['interior']})")
    for name, n in s["counts"].items():
        print(f"  {name:<15}{n:>7}")
    h = s["clusters"]
    print(f"  H clusters: {h['flipped']} flipped, {h['lightblue']} lightblue, "
          f"{h['orphans']} unclaimed lightblue")
    for w in s["gaps"]:
        print(f"  family {w['family']}: L {w['L']}  S {w['S']}  L/S {w['ratio']:.6f}")
    return EXIT_OK


def run_oracle_diff(cfg: RunConfig, max_factor: int = 8) -> int:
    diff = oracle_window(cfg.params(), cfg.radius, cfg.mode, cfg.roles, cfg.margin,
                         max_factor=max_factor)
    doc = {
        "window_radius": diff.result.window_radius,
        "compared": diff.compared,
        "unresolved_in_target": [list(v) for v in diff.unresolved_in_target],
        "mismatches": [{"vertex": list(v), "fractal": list(f), "oracle": list(o)}
                       for v, f, o in diff.mismatches],
    }
    _write(dump_json(doc), None)
    return EXIT_OK if not diff.mismatches else EXIT_DEFECTS


def run_fibword(d: str, count: int, start: int = 0) -> int:
    word = fib_word(start, count, GoldenNumber.parse(d))
    print(word_string(word))
    return EXIT_OK


def run_regen_tables(out: str) -> int:
    d = Path(out)
    d.mkdir(parents=True, exist_ok=True)
    (d / "regions.json").write_text(dump_json(build_region_table()))
    (d / "orientation.json").write_text(dump_json(build_orientation_table()))
    return EXIT_OK


# -- argument parsing ------------------------------------------------------

def _window_args(sp: argparse.ArgumentParser, radius: int = 20) -> None:
    sp.add_argument("--d0", required=True, help="rational offset of family 0, e.g. 1/5")
    sp.add_argument("--d1", required=True, help="rational offset of family 1")
    sp.add_argument("--radius", type=int, default=radius)
    sp.add_argument("--mode", choices=("hat8", "tenkite"), default="hat8")
    sp.add_argument("--roles", choices=("standard", "mirrored"), default="standard")
    sp.add_argument("--margin", type=int, default=4)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hatgrid", description="Hat tilings from two Fibonacci line offsets.")
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="build and verify a tiling")
    _window_args(g)
    g.add_argument("--format", choices=("json", "svg"), default="json")
    g.add_argument("--colouring", choices=("by_type", "by_orientation"), default="by_type")
    g.add_argument("--decoration", action="store_true", help="draw centre lines of U")
    g.add_argument("-o", "--output", help="output file (default stdout)")

    v = sub.add_parser("verify", help="check coverage of a tiling JSON file")
    v.add_argument("file")

    s = sub.add_parser("stats", help="tile counts and gap frequencies")
    _window_args(s)
    s.add_argument("--gaps", type=int, default=100_000)
    s.add_argument("--json", action="store_true")

    o = sub.add_parser("oracle-diff", help="compare the fractal resolver with propagation")
    _window_args(o)
    o.add_argument("--max-factor", type=int, default=8)

    f = sub.add_parser("fibword", help="print the S/L gap word of one line family")
    f.add_argument("--d", required=True, help="offset, rational or q+r*phi")
    f.add_argument("--count", type=int, default=100)
    f.add_argument("--start", type=int, default=0)

    r = sub.add_parser("regen-tables", help="rewrite the frozen region and orientation tables")
    r.add_argument("--out", required=True)
    return ap


def _config(ns) -> RunConfig:
    return RunConfig(ns.d0, ns.d1, ns.radius, ns.mode, ns.roles,
                     getattr(ns, "format", "json"), getattr(ns, "colouring", "by_type"),
                     getattr(ns, "decoration", False), ns.margin)


_VALUE_FLAGS = ("--d0", "--d1", "--d")


def _glue_negative(argv: list[str]) -> list[str]:
    # argparse reads "-1/5" as an option; fold it into "--d1=-1/5"
    out, i = [], 0
    while i < len(argv):
        a = argv[i]
        if a in _VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1][:1] == "-" \
                and argv[i + 1][1:2].isdigit():
            out.append(f"{a}={argv[i + 1]}")
            i += 2
        else:
            out.append(a)
            i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    ns = build_parser().parse_args(_glue_negative(argv))
    try:
        if ns.command == "generate":
            return run_generate(_config(ns), ns.output)
        if ns.command == "verify":
            return run_verify(ns.file)
        if ns.command == "stats":
            return run_stats(_config(ns), ns.gaps, ns.json)
        if ns.command == "oracle-diff":
            return run_oracle_diff(_config(ns), ns.max_factor)
        if ns.command == "fibword":
            return run_fibword(ns.d, ns.count, ns.start)
        return run_regen_tables(ns.out)
    except (DegenerateParameters, MalformedRational) as exc:
        print(f"hatgrid: {exc}", file=sys.stderr)
        return EXIT_PARAMS


if __name__ == "__main__":
    sys.exit(main())
