"""Pure-Python inner loops. ``_kernel.pyx`` must stay behaviourally identical.

All functions work on integer pairs (numerator, denominator) rather than
Fractions: the expansion loop is the hot path and Fraction construction
dominates otherwise.
"""
from math import gcd


def expand_fraction(num, den, c_at, max_terms):
    """Digits of num/den (den > 0).

    Returns ``(q0, terms, terminated)``; ``terminated`` is False only when
    ``max_terms`` digits were produced and A is still non-zero.
    """
    q0, p = divmod(num, den)
    q = den
    g = gcd(p, q)
    if g > 1:
        p //= g
        q //= g
    terms = []
    n = 1
    while p:
        if n > max_terms:
            return q0, terms, False
        c = c_at(n)
        a = (c * q) // p
        terms.append(a)
        # A_{n+1} = c/a - p/q
        p = c * q - a * p
        q = a * q
        g = gcd(p, q)
        if g > 1:
            p //= g
            q //= g
        n += 1
    return q0, terms, True


def expand_trace(num, den, c_at, max_terms):
    """Like ``expand_fraction`` but also returns the remainders.

    The third item is the list of (p, q) for A_1, ..., A_{m+1}; the last one
    is (0, 1) when the expansion terminated.
    """
    q0, p = divmod(num, den)
    q = den
    g = gcd(p, q)
    p //= g
    q //= g
    terms = []
    states = [(p, q)]
    n = 1
    while p:
        if n > max_terms:
            return q0, terms, states, False
        c = c_at(n)
        a = (c * q) // p
        terms.append(a)
        p = c * q - a * p
        q = a * q
        g = gcd(p, q)
        p //= g
        q //= g
        states.append((p, q))
        n += 1
    return q0, terms, states, True


def partial_sum(q0, terms, cvals):
    """q0 + sum_{k} (-1)^(k-1) c_k / a_k as a reduced (num, den) pair."""
    num = q0
    den = 1
    sign = 1
    for a, c in zip(terms, cvals):
        # num/den + sign*c/a
        num = num * a + sign * c * den
        den = den * a
        g = gcd(num, den)
        if g > 1:
            num //= g
            den //= g
        sign = -sign
    return num, den
