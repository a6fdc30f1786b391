from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from altsylvester.rational import Ordering, cmp, floor, format_rational, parse_rational


@pytest.mark.parametrize("x, expected", [(Fraction(7, 2), 3), (Fraction(-7, 2), -4), (Fraction(5), 5)])
def test_floor(x, expected):
    assert floor(x) == expected


def test_arithmetic_examples():
    assert Fraction(1, 2) + Fraction(1, 2) == 1
    assert Fraction(2, 3) * Fraction(3, 2) == 1
    # 1*7 - 2*3 = 1 over 21
    assert Fraction(1, 3) - Fraction(2, 7) == Fraction(1, 21)
    with pytest.raises(ZeroDivisionError):
        Fraction(1, 3) / Fraction(0)


@pytest.mark.parametrize("x, y, expected", [
    (Fraction(1, 3), Fraction(2, 7), Ordering.GREATER),
    (Fraction(5, 7), Fraction(5, 7), Ordering.EQUAL),
    (Fraction(-1, 2), Fraction(0), Ordering.LESS),
])
def test_cmp(x, y, expected):
    assert cmp(x, y) is expected


@given(st.fractions())
def test_floor_brackets(x):
    f = floor(x)
    assert f <= x < f + 1


@given(st.fractions(), st.fractions(), st.fractions())
def test_field_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert x * y == y * x
    assert x * (y + z) == x * y + x * z
    assert x + (-x) == 0
    if x:
        assert x * (1 / x) == 1
    for v in (x + y, x * y, x - z):
        assert v.denominator > 0


@given(st.fractions())
def test_text_round_trip(x):
    assert parse_rational(format_rational(x)) == x


def test_text_form():
    assert format_rational(Fraction(6, 2)) == "3"
    assert format_rational(Fraction(-5, 7)) == "-5/7"
    assert parse_rational("10/4") == Fraction(5, 2)
    with pytest.raises(ValueError):
        parse_rational("1/2/3")
    with pytest.raises(ZeroDivisionError):
        parse_rational("1/0")
