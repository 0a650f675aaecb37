"""Exact arithmetic in Q(phi), phi = (sqrt(5) - 1) / 2.

A value is stored as ``(a + b*phi) / den`` with integers and a positive,
fully reduced denominator, so equal numbers always compare equal field by
field.  Signs and floors never touch floating point: writing
``a + b*phi = ((2a - b) + b*sqrt(5)) / 2`` reduces both to integer square
root bounds.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import total_ordering
from math import gcd, isqrt
from numbers import Rational

from .errors import MalformedRational

__all__ = [
    "GoldenNumber",
    "make",
    "parse_rational",
    "PHI",
    "PHI_BIG",
    "ZERO",
    "ONE",
]

_PHI_FLOAT = 0.6180339887498949


def parse_rational(text: str | int | Fraction) -> Fraction:
    """Read ``"p/q"``, an integer, or a decimal literal exactly."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    s = str(text).strip()
    try:
        return Fraction(s)
    except ZeroDivisionError as exc:
        raise MalformedRational(f"zero denominator in {text!r}") from exc
    except ValueError as exc:
        raise MalformedRational(f"not a rational literal: {text!r}") from exc


def _sign_sqrt5(x: int, y: int) -> int:
    # sign of x + y*sqrt(5)
    if x >= 0 and y >= 0:
        return int(x > 0 or y > 0)
    if x <= 0 and y <= 0:
        return -1
    lhs, rhs = x * x, 5 * y * y
    if x > 0:
        return 1 if lhs > rhs else -1
    return 1 if rhs > lhs else -1


def _floor_sqrt5(y: int) -> int:
    # floor(y*sqrt(5)); irrational unless y == 0
    if y >= 0:
        return isqrt(5 * y * y)
    return -isqrt(5 * y * y) - 1


@total_ordering
class GoldenNumber:
    __slots__ = ("_a", "_b", "_den")

    def __init__(self, a: int = 0, b: int = 0, den: int = 1) -> None:
        if den == 0:
            raise MalformedRational("zero denominator")
        if den < 0:
            a, b, den = -a, -b, -den
        g = gcd(gcd(a, b), den)
        if g > 1:
            a, b, den = a // g, b // g, den // g
        self._a = a
        self._b = b
        self._den = den

    @classmethod
    def coerce(cls, x) -> GoldenNumber:
        if isinstance(x, GoldenNumber):
            return x
        if isinstance(x, int):
            return cls(x, 0, 1)
        if isinstance(x, Rational):
            return cls(x.numerator, 0, x.denominator)
        if isinstance(x, str):
            return cls.parse(x)
        raise TypeError(f"cannot convert {type(x).__name__} to GoldenNumber")

    @classmethod
    def from_qr(cls, q, r) -> GoldenNumber:
        q, r = Fraction(q), Fraction(r)
        den = q.denominator * r.denominator // gcd(q.denominator, r.denominator)
        return cls(q.numerator * (den // q.denominator),
                   r.numerator * (den // r.denominator), den)

    @property
    def q(self) -> Fraction:
        return Fraction(self._a, self._den)

    @property
    def r(self) -> Fraction:
        return Fraction(self._b, self._den)

    @property
    def parts(self) -> tuple[int, int, int]:
        return self._a, self._b, self._den

    def is_rational(self) -> bool:
        return self._b == 0

    def in_z_plus_phi_z(self) -> bool:
        """True when the value is ``i + j*phi`` for integers i, j."""
        return self._den == 1

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        try:
            o = GoldenNumber.coerce(other)
        except TypeError:
            return NotImplemented
        d1, d2 = self._den, o._den
        if d1 == d2:
            return GoldenNumber(self._a + o._a, self._b + o._b, d1)
        return GoldenNumber(self._a * d2 + o._a * d1, self._b * d2 + o._b * d1, d1 * d2)

    __radd__ = __add__

    def __neg__(self) -> GoldenNumber:
        return GoldenNumber(-self._a, -self._b, self._den)

    def __pos__(self) -> GoldenNumber:
        return self

    def __sub__(self, other):
        try:
            o = GoldenNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = GoldenNumber.coerce(other)
        except TypeError:
            return NotImplemented
        a1, b1, a2, b2 = self._a, self._b, o._a, o._b
        # phi^2 = 1 - phi
        bb = b1 * b2
        return GoldenNumber(a1 * a2 + bb, a1 * b2 + a2 * b1 - bb, self._den * o._den)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        """Field norm: the product with the Galois conjugate."""
        a, b = self._a, self._b
        return Fraction(a * a - a * b - b * b, self._den * self._den)

    def inverse(self) -> GoldenNumber:
        a, b = self._a, self._b
        n = a * a - a * b - b * b
        if n == 0:
            raise ZeroDivisionError("GoldenNumber division by zero")
        # conjugate of phi is -1 - phi
        return GoldenNumber((a - b) * self._den, -b * self._den, n)

    def __truediv__(self, other):
        try:
            o = GoldenNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return GoldenNumber.coerce(other) * self.inverse()

    def __pow__(self, k: int) -> GoldenNumber:
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out, base = ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- order -------------------------------------------------------------

    def sign(self) -> int:
        return _sign_sqrt5(2 * self._a - self._b, self._b)

    def compare(self, other) -> int:
        """-1, 0 or 1 as self is less than, equal to or greater than other."""
        return (self - GoldenNumber.coerce(other)).sign()

    def __eq__(self, other) -> bool:
        if isinstance(other, GoldenNumber):
            return self._a == other._a and self._b == other._b and self._den == other._den
        if isinstance(other, (int, Rational)):
            return self._b == 0 and Fraction(self._a, self._den) == other
        return NotImplemented

    def __lt__(self, other) -> bool:
        try:
            return self.compare(other) < 0
        except TypeError:
            return NotImplemented

    def __hash__(self) -> int:
        if self._b == 0:
            return hash(Fraction(self._a, self._den))
        return hash((self._a, self._b, self._den))

    def __bool__(self) -> bool:
        return self._a != 0 or self._b != 0

    def __floor__(self) -> int:
        a, b, den = self._a, self._b, self._den
        x = 2 * a - b
        if b == 0:
            return x // (2 * den)
        # x + b*sqrt(5) sits strictly between two consecutive integers
        return (x + _floor_sqrt5(b)) // (2 * den)

    def floor(self) -> int:
        return self.__floor__()

    def frac(self) -> GoldenNumber:
        return self - self.__floor__()

    def __float__(self) -> float:
        return float(Fraction(self._a, self._den)) + float(Fraction(self._b, self._den)) * _PHI_FLOAT

    # -- text --------------------------------------------------------------

    def __repr__(self) -> str:
        return f"GoldenNumber({self})"

    def __str__(self) -> str:
        q, r = self.q, self.r
        if r == 0:
            return str(q)
        if r == 1:
            rs = "phi"
        elif r == -1:
            rs = "-phi"
        else:
            rs = f"{r}*phi"
        if q == 0:
            return rs
        return f"{q}{rs}" if rs.startswith("-") else f"{q}+{rs}"

    _TERM = re.compile(r"([+-]?)([0-9./]*(?:[eE][+-]?[0-9]+)?)(\*?phi)?")

    @classmethod
    def parse(cls, text: str) -> GoldenNumber:
        """Read forms such as ``"1/5"``, ``"phi"``, ``"1/2-3/4*phi"``."""
        s = text.replace(" ", "")
        if not s:
            raise MalformedRational("empty GoldenNumber literal")
        q, r = Fraction(0), Fraction(0)
        pos = 0
        while pos < len(s):
            m = cls._TERM.match(s, pos)
            if not m or m.end() == pos:
                raise MalformedRational(f"cannot parse {text!r}")
            sgn, num, has_phi = m.groups()
            if not num and not has_phi:
                raise MalformedRational(f"cannot parse {text!r}")
            if num and num.endswith("/"):
                raise MalformedRational(f"cannot parse {text!r}")
            val = parse_rational(num) if num else Fraction(1)
            if sgn == "-":
                val = -val
            if has_phi:
                r += val
            else:
                q += val
            pos = m.end()
        return cls.from_qr(q, r)


def make(q, r=0) -> GoldenNumber:
    """Canonical ``q + r*phi`` from rationals (or their string forms)."""
    return GoldenNumber.from_qr(parse_rational(q), parse_rational(r))


ZERO = GoldenNumber(0)
ONE = GoldenNumber(1)
PHI = GoldenNumber(0, 1)  # small golden ratio, about 0.618
PHI_BIG = GoldenNumber(1, 1)  # 1 + phi, about 1.618
