"""Projection labelling of one family of parallel lines.

Line ``n`` of a family with offset ``d`` gets ``a = floor(phi*n + d)`` and
``b = n - a``.  The gap between lines n and n+1 is short (S) when ``a`` does
not advance.  A line touching a short gap is blue, otherwise black.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .errors import DegenerateParameters
from .exactnum import GoldenNumber, _floor_sqrt5, parse_rational

__all__ = [
    "FibParams",
    "GapLabel",
    "fib_index",
    "gap_label",
    "line_colour",
    "fib_word",
    "substitute",
    "word_string",
]


class GapLabel(str, enum.Enum):
    S = "S"
    L = "L"

    def __str__(self) -> str:
        return self.value


BLACK = "black"
BLUE = "blue"


def as_golden(x) -> GoldenNumber:
    """Accept a GoldenNumber, a rational, or text such as ``"1/5"``."""
    if isinstance(x, GoldenNumber):
        return x
    if isinstance(x, str) and "phi" in x:
        return GoldenNumber.parse(x)
    return GoldenNumber.coerce(parse_rational(x))


def _check_offset(d: GoldenNumber) -> None:
    if d.in_z_plus_phi_z():
        raise DegenerateParameters(f"offset {d} lies in Z + phi*Z")


@dataclass(frozen=True)
class FibParams:
    """Offsets d0, d1, d2 of the three line families, summing to zero."""

    d: tuple[GoldenNumber, GoldenNumber, GoldenNumber]

    def __post_init__(self) -> None:
        d = tuple(GoldenNumber.coerce(x) for x in self.d)
        if len(d) != 3:
            raise ValueError("need exactly three offsets")
        object.__setattr__(self, "d", d)
        if d[0] + d[1] + d[2] != 0:
            raise DegenerateParameters("offsets must sum to zero")
        for x in d:
            _check_offset(x)

    @classmethod
    def from_pair(cls, d0, d1) -> FibParams:
        """Build from two offsets; the third closes the zero sum."""
        x0, x1 = as_golden(d0), as_golden(d1)
        return cls((x0, x1, -x0 - x1))

    def mirrored(self) -> FibParams:
        """Offsets with line families 1 and 2 exchanged."""
        return FibParams((self.d[0], self.d[2], self.d[1]))

    def as_strings(self) -> dict[str, str]:
        return {f"d{k}": str(x) for k, x in enumerate(self.d)}


def _floor_phi_n(d: GoldenNumber, n: int) -> int:
    # floor(phi*n + d) without building intermediate objects
    a, b, den = d.parts
    b += n * den
    x = 2 * a - b
    if b == 0:
        return x // (2 * den)
    return (x + _floor_sqrt5(b)) // (2 * den)


def fib_index(n: int, d: GoldenNumber) -> tuple[int, int]:
    """Return ``(a, b)`` with ``a = floor(phi*n + d)`` and ``a + b = n``."""
    d = GoldenNumber.coerce(d)
    _check_offset(d)
    a = _floor_phi_n(d, n)
    return a, n - a


def gap_label(n: int, d: GoldenNumber) -> GapLabel:
    """Label of the gap between lines n and n+1."""
    d = GoldenNumber.coerce(d)
    _check_offset(d)
    return GapLabel.S if _floor_phi_n(d, n + 1) == _floor_phi_n(d, n) else GapLabel.L


def line_colour(n: int, d: GoldenNumber) -> str:
    d = GoldenNumber.coerce(d)
    _check_offset(d)
    a0, a1, a2 = (_floor_phi_n(d, m) for m in (n - 1, n, n + 1))
    return BLUE if a0 == a1 or a1 == a2 else BLACK


def fib_word(n_start: int, count: int, d: GoldenNumber) -> list[GapLabel]:
    """Gap labels for lines ``n_start .. n_start + count - 1``."""
    if count < 0:
        raise ValueError("count must be non-negative")
    d = GoldenNumber.coerce(d)
    _check_offset(d)
    out = []
    prev = _floor_phi_n(d, n_start)
    for n in range(n_start + 1, n_start + count + 1):
        cur = _floor_phi_n(d, n)
        out.append(GapLabel.S if cur == prev else GapLabel.L)
        prev = cur
    return out


_ONE_STEP = {GapLabel.S: (GapLabel.L,), GapLabel.L: (GapLabel.S, GapLabel.L)}


def substitute(seq: Iterable[GapLabel], steps: str | int = "one") -> list[GapLabel]:
    """Apply ``S -> L, L -> S L`` once (``"one"``) or twice (``"two"``)."""
    times = {"one": 1, "two": 2, 1: 1, 2: 2}.get(steps)
    if times is None:
        raise ValueError(f"steps must be 'one' or 'two', got {steps!r}")
    out = [GapLabel(x) for x in seq]
    for _ in range(times):
        out = [y for x in out for y in _ONE_STEP[x]]
    return out


def word_string(seq: Sequence[GapLabel]) -> str:
    return "".join(x.value for x in seq)
