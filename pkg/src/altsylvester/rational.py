"""Exact rationals.

``fractions.Fraction`` already keeps values in lowest terms with a positive
denominator, so it is used directly as the rational type. This module adds
the pieces the rest of the package needs on top of it: floor toward -inf,
three-way comparison, and the ``p/q`` text form.
"""
from __future__ import annotations

import enum
import re
from fractions import Fraction

Rational = Fraction

_RATIONAL_RE = re.compile(r"\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*\Z")


class Ordering(enum.Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    # only produced by budgeted comparisons of infinite expansions
    UNDECIDED = "undecided"

    def __str__(self):
        return self.value

    def flip(self) -> "Ordering":
        if self is Ordering.LESS:
            return Ordering.GREATER
        if self is Ordering.GREATER:
            return Ordering.LESS
        return self


def floor(x) -> int:
    """Greatest integer <= x (toward -inf, unlike ``int()``)."""
    x = Fraction(x)
    return x.numerator // x.denominator


def frac_part(x) -> Fraction:
    x = Fraction(x)
    return x - floor(x)


def cmp(x, y) -> Ordering:
    if x < y:
        return Ordering.LESS
    if x > y:
        return Ordering.GREATER
    return Ordering.EQUAL


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL_RE.match(text)
    if not m:
        raise ValueError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(x) -> str:
    """``p/q`` with the ``/q`` dropped when q = 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
