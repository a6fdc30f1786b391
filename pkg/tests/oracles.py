"""Independent reference computations used by the tests.

Deliberately naive: Fractions, math.floor and direct summation, sharing no
code with the package's kernels.
"""
import math
from fractions import Fraction


def brute_expand(alpha, c, limit=1000):
    """(q0, [a_1, ...]) by the textbook recursion on Fractions."""
    alpha = Fraction(alpha)
    q0 = math.floor(alpha)
    A = alpha - q0
    terms = []
    n = 1
    while A != 0:
        assert n <= limit
        a = math.floor(Fraction(c(n)) / A)
        terms.append(a)
        A = Fraction(c(n), a) - A
        n += 1
    return q0, terms


def alt_sum(q0, terms, c):
    return Fraction(q0) + sum(Fraction((-1) ** k * c(k + 1), a) for k, a in enumerate(terms))


def brute_digit(A, c):
    """floor(c / A) by scanning, for small values only."""
    d = 0
    while Fraction(c, d + 1) >= A:
        d += 1
    return d
