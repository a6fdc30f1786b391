# cython: language_level=3
"""Compiled twin of ``_kernel_py``.

While every quantity of a step fits in 31 bits the recursion runs on C
``long long``; after that it continues on Python integers.
"""
from math import gcd

cdef long long _LIMIT = 1 << 31


cdef inline long long _cgcd(long long a, long long b):
    cdef long long t
    if a < 0:
        a = -a
    while b:
        t = a % b
        a = b
        b = t
    return a


def expand_fraction(num, den, c_at, Py_ssize_t max_terms):
    cdef long long sp, sq, sc, sa, sg
    cdef Py_ssize_t n = 1
    q0, p = divmod(num, den)
    q = den
    g = gcd(p, q)
    if g > 1:
        p //= g
        q //= g
    terms = []
    while p:
        if n > max_terms:
            return q0, terms, False
        c = c_at(n)
        if p < _LIMIT and q < _LIMIT and c < _LIMIT:
            sp = p
            sq = q
            sc = c
            sa = (sc * sq) // sp
            if sa < _LIMIT:
                terms.append(sa)
                sp = sc * sq - sa * sp
                sq = sa * sq
                sg = _cgcd(sp, sq)
                if sg > 1:
                    sp //= sg
                    sq //= sg
                p = sp
                q = sq
                n += 1
                continue
        a = (c * q) // p
        terms.append(a)
        p = c * q - a * p
        q = a * q
        g = gcd(p, q)
        if g > 1:
            p //= g
            q //= g
        n += 1
    return q0, terms, True


def expand_trace(num, den, c_at, Py_ssize_t max_terms):
    cdef Py_ssize_t n = 1
    q0, p = divmod(num, den)
    q = den
    g = gcd(p, q)
    p //= g
    q //= g
    terms = []
    states = [(p, q)]
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
    cdef int sign = 1
    num = q0
    den = 1
    for a, c in zip(terms, cvals):
        if sign > 0:
            num = num * a + c * den
        else:
            num = num * a - c * den
        den = den * a
        g = gcd(num, den)
        if g > 1:
            num //= g
            den //= g
        sign = -sign
    return num, den
