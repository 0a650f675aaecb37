from decimal import Decimal, getcontext
from fractions import Fraction
import math

import pytest
from hypothesis import given, strategies as st

from hatgrid.errors import MalformedRational
from hatgrid.exactnum import ONE, PHI, PHI_BIG, ZERO, GoldenNumber, make, parse_rational

getcontext().prec = 60
PHI_DEC = (Decimal(5).sqrt() - 1) / 2

small = st.integers(-10**4, 10**4)
dens = st.integers(1, 50)
golden = st.builds(GoldenNumber, small, small, dens)


def dec(x: GoldenNumber) -> Decimal:
    a, b, den = x.parts
    return (Decimal(a) + Decimal(b) * PHI_DEC) / Decimal(den)


def test_make_examples():
    assert make(1, 0) == ONE
    assert make(0, 1) == PHI
    assert make(1, 1) == PHI_BIG


def test_golden_identities():
    assert PHI * PHI_BIG == 1
    assert PHI * PHI == 1 - PHI
    assert PHI_BIG * PHI_BIG == PHI_BIG + 1 == 2 + PHI


def test_compare_examples():
    assert PHI_BIG.compare(1 + PHI) == 0
    assert PHI < 1
    assert 3 * PHI < 2
    assert (3 * PHI).compare(2) == -1


def test_floor_examples():
    assert PHI.floor() == 0
    assert (-PHI).floor() == -1
    assert (5 * PHI).floor() == 3
    assert math.floor(-PHI_BIG) == -2


def test_zero_denominator_rejected():
    with pytest.raises(MalformedRational):
        make(Fraction(1), "1/0")
    with pytest.raises(MalformedRational):
        parse_rational("3/0")


def test_canonical_form():
    x = GoldenNumber(4, -6, -8)
    assert x.parts == (-2, 3, 4)
    assert x.q == Fraction(-1, 2) and x.r == Fraction(3, 4)


@pytest.mark.parametrize("text, value", [
    ("1/5", make("1/5")),
    ("0.25", make("1/4")),
    ("-3", make(-3)),
    ("phi", PHI),
    ("1+phi", PHI_BIG),
    ("1/2-3/4*phi", make("1/2", "-3/4")),
])
def test_parse(text, value):
    assert GoldenNumber.parse(text) == value


@given(golden)
def test_str_round_trip(x):
    assert GoldenNumber.parse(str(x)) == x


@given(golden, golden, golden)
def test_ring_axioms(x, y, z):
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x - x == ZERO


@given(golden)
def test_inverse(x):
    if x:
        assert x * x.inverse() == 1
        assert (x / x) == 1


@given(golden, golden)
def test_equality_is_representation(x, y):
    assert (x == y) == (x.parts == y.parts)
    assert (x.compare(y) == 0) == (x == y)


@given(golden)
def test_sign_floor_against_decimal(x):
    assert x.floor() == math.floor(dec(x))
    assert x.sign() == (dec(x) > 0) - (dec(x) < 0)


@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))
def test_norm_multiplicative(a, b):
    x = GoldenNumber(a, b)
    assert x.norm() == Fraction(a * a - a * b - b * b)
