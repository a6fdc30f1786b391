"""Constructive reals on top of GAS expansions.

A ``Real`` is one of

* ``Exact``  - a rational with its (lazily computed) canonical expansion,
* ``Stream`` - a digit sequence, possibly infinite,
* ``Node``   - an arithmetic operation on other reals.

Nodes are evaluated by exact rational interval arithmetic. A bare expansion
X is enclosed by its truncations X_{2n} <= X <= X_{2n+1}; an operation node
combines the enclosures of its children the way the field operations are
defined on truncations (sum of lower truncations for +, negated upper
truncations for -, products of lower truncations for nonnegative factors,
reciprocals of upper truncations for positive inverses). The enclosures
shrink as the truncation depth grows.

All reals in one computation share a multiplier sequence satisfying the
divisor chain c_n | c_{n+1}; violations surface as ``DivisorChainViolation``
when the offending c_n is first used.

Equality is deliberately not offered: only budgeted comparison exists.
"""
from __future__ import annotations

import threading
from bisect import bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import islice
from typing import Iterable, Optional, Sequence

from .canon import check_T
from .cseq import CSeq
from .errors import BudgetExceeded, InversionOfZero, PrefixExhausted, Undecided
from .expansion import Expansion, expand_rational, reconstruct
from .rational import Ordering, floor, format_rational

DEFAULT_PRECISION = Fraction(1, 2 ** 128)
DEFAULT_BUDGET = 256
DEFAULT_DIGITS = 64

ENCLOSURE_SCHEMA = {
    "type": "object",
    "required": ["lower", "upper", "terms_used"],
    "properties": {
        "lower": {"type": "string", "pattern": r"^-?\d+(/\d+)?$"},
        "upper": {"type": "string", "pattern": r"^-?\d+(/\d+)?$"},
        "terms_used": {"type": "integer", "minimum": 0},
    },
    "additionalProperties": False,
}

UNDECIDED_SCHEMA = {
    "type": "object",
    "required": ["undecided_at"],
    "properties": {"undecided_at": {"type": "integer", "minimum": 0}},
    "additionalProperties": False,
}


class _Unresolved(Exception):
    """The current truncation depth cannot settle a sign; go deeper."""


@dataclass(frozen=True)
class Enclosure:
    lower: Fraction
    upper: Fraction
    terms_used: int = 0

    @property
    def width(self) -> Fraction:
        return self.upper - self.lower

    def __contains__(self, v):
        return self.lower <= v <= self.upper

    def to_json(self) -> dict:
        return {"lower": format_rational(self.lower), "upper": format_rational(self.upper),
                "terms_used": self.terms_used}


class Real:
    cseq: CSeq

    def __add__(self, other):
        return add(self, _coerce(other, self.cseq))

    __radd__ = __add__

    def __neg__(self):
        return neg(self)

    def __sub__(self, other):
        return add(self, neg(_coerce(other, self.cseq)))

    def __rsub__(self, other):
        return add(_coerce(other, self.cseq), neg(self))

    def __mul__(self, other):
        return mul(self, _coerce(other, self.cseq))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return mul(self, inv(_coerce(other, self.cseq)))

    def __rtruediv__(self, other):
        return mul(_coerce(other, self.cseq), inv(self))


class Exact(Real):
    __slots__ = ("value", "cseq", "_expansion", "_lock")

    def __init__(self, value, cseq: CSeq):
        self.value = Fraction(value)
        self.cseq = cseq
        self._expansion = None
        self._lock = threading.Lock()

    @property
    def expansion(self) -> Expansion:
        if self._expansion is None:
            with self._lock:
                if self._expansion is None:
                    self._expansion = expand_rational(self.value, self.cseq)
        return self._expansion

    def __repr__(self):
        return f"Exact({format_rational(self.value)})"


class Stream(Real):
    __slots__ = ("expansion", "cseq", "_value")

    def __init__(self, expansion: Expansion):
        self.expansion = expansion
        self.cseq = expansion.cseq
        self._value = None

    def exact_value(self) -> Optional[Fraction]:
        if not self.expansion.terminated:
            return None
        if self._value is None:
            self._value = reconstruct(self.expansion)
        return self._value

    def __repr__(self):
        return f"Stream({self.expansion.literal()})"


class Node(Real):
    __slots__ = ("op", "children", "cseq")

    def __init__(self, op: str, children: Sequence[Real], cseq: CSeq):
        self.op = op
        self.children = tuple(children)
        self.cseq = cseq

    def __repr__(self):
        return f"Node({self.op}, {', '.join(map(repr, self.children))})"


def _chained(cseq: CSeq) -> CSeq:
    return cseq if cseq.divisor_chain_required else cseq.with_chain(True)


def exact(value, cseq: CSeq) -> Exact:
    return Exact(value, _chained(cseq))


def from_expansion(e: Expansion) -> Stream:
    return Stream(e)


def _coerce(v, cseq):
    if isinstance(v, Real):
        return v
    return Exact(v, cseq)


def _context(*xs: Real) -> CSeq:
    rule = xs[0].cseq.rule
    for x in xs[1:]:
        if x.cseq.rule != rule:
            raise ValueError("reals built on different multiplier sequences")
    return xs[0].cseq


def add(x: Real, y: Real) -> Real:
    cs = _context(x, y)
    if isinstance(x, Exact) and isinstance(y, Exact):
        return Exact(x.value + y.value, cs)
    return Node("add", (x, y), cs)


def neg(x: Real) -> Real:
    if isinstance(x, Exact):
        return Exact(-x.value, x.cseq)
    return Node("neg", (x,), x.cseq)


def mul(x: Real, y: Real) -> Real:
    cs = _context(x, y)
    if isinstance(x, Exact) and isinstance(y, Exact):
        return Exact(x.value * y.value, cs)
    return Node("mul", (x, y), cs)


def inv(x: Real) -> Real:
    if isinstance(x, Exact):
        if x.value == 0:
            raise InversionOfZero("0 has no inverse")
        return Exact(1 / x.value, x.cseq)
    return Node("inv", (x,), x.cseq)


def sub(x: Real, y: Real) -> Real:
    return add(x, neg(y))


def div(x: Real, y: Real) -> Real:
    return mul(x, inv(y))


# -- interval evaluation ----------------------------------------------------

def _neg_iv(iv):
    lo, hi = iv
    return -hi, -lo


def _mul_iv(x, y):
    """Product of two intervals following the sign cases of the product.

    Both factors nonnegative: lower*lower .. upper*upper. The other sign
    combinations reduce to it through negation. An interval straddling 0 is
    split at 0 and the pieces are combined.
    """
    (xl, xh), (yl, yh) = x, y
    if xl >= 0 and yl >= 0:
        return xl * yl, xh * yh
    if xh <= 0 and yh <= 0:
        return _mul_iv(_neg_iv(x), _neg_iv(y))
    if xh <= 0 and yl >= 0:
        return _neg_iv(_mul_iv(_neg_iv(x), y))
    if xl >= 0 and yh <= 0:
        return _neg_iv(_mul_iv(x, _neg_iv(y)))
    if xl < 0 < xh:
        a, b = _mul_iv((xl, 0), y), _mul_iv((0, xh), y)
    else:
        a, b = _mul_iv(x, (yl, 0)), _mul_iv(x, (0, yh))
    return min(a[0], b[0]), max(a[1], b[1])


def _inv_iv(iv):
    lo, hi = iv
    if lo > 0:
        return 1 / hi, 1 / lo
    if hi < 0:
        return _neg_iv(_inv_iv(_neg_iv(iv)))
    if lo == hi == 0:
        raise InversionOfZero("inverting a value that is exactly 0")
    raise _Unresolved


def _stream_iv(e: Expansion, depth: int):
    """(X_{2d}, X_{2d+1}) or the best pair the known terms allow."""
    if e.terminated and 2 * depth >= e.known():
        v = reconstruct(e)
        return (v, v), e.known()
    k = 2 * depth + 1
    if not e.terminated and not e.is_stream and e.known() < k:
        k = e.known() if e.known() % 2 else e.known() - 1
        if k < 1:
            return (Fraction(e.q0), Fraction(e.q0 + 1)), 0
    try:
        e.term(k)
    except PrefixExhausted:
        raise _Unresolved from None
    return (reconstruct(e, k - 1), reconstruct(e, k)), k


def _interval(x: Real, depth: int):
    if isinstance(x, Exact):
        return (x.value, x.value), 0
    if isinstance(x, Stream):
        return _stream_iv(x.expansion, depth)
    ivs, used = [], 0
    for ch in x.children:
        iv, u = _interval(ch, depth)
        ivs.append(iv)
        used += u
    if x.op == "add":
        (al, ah), (bl, bh) = ivs
        return (al + bl, ah + bh), used
    if x.op == "neg":
        return _neg_iv(ivs[0]), used
    if x.op == "mul":
        return _mul_iv(*ivs), used
    if x.op == "inv":
        return _inv_iv(ivs[0]), used
    raise ValueError(f"unknown operation {x.op!r}")


def enclose(x: Real, precision=DEFAULT_PRECISION, budget: int = DEFAULT_BUDGET) -> Enclosure:
    """Rational interval around ``x`` no wider than ``precision``."""
    precision = Fraction(precision)
    if precision <= 0:
        raise ValueError("precision must be positive")
    for depth in range(1, budget + 1):
        try:
            (lo, hi), used = _interval(x, depth)
        except _Unresolved:
            continue
        if hi - lo <= precision:
            return Enclosure(lo, hi, used)
    raise BudgetExceeded(f"no enclosure of width <= {precision} within {budget} rounds")


def refine(x: Real, depth: int) -> Enclosure:
    """The enclosure at a fixed truncation depth, however wide."""
    for d in range(depth, 0, -1):
        try:
            (lo, hi), used = _interval(x, d)
        except _Unresolved:
            continue
        return Enclosure(lo, hi, used)
    raise BudgetExceeded(f"no enclosure within depth {depth}")


def truncate(x: Real, n: int) -> Fraction:
    """Value of the truncation X_n of an Exact or Stream real."""
    if isinstance(x, Node):
        raise TypeError("truncation needs a real given by its expansion")
    e = x.expansion
    if not e.terminated:
        e.term(n)
    return reconstruct(e, n)


# -- digit extraction ---------------------------------------------------------

def _digits_from_interval(lo, hi, cseq, count):
    """Digits common to every number in [lo, hi].

    Returns (q0, terms, terminated); stops early when a digit cannot be
    certified. A digit a at index n is certified when
    c_n/(a+1) < A_lo and A_hi <= c_n/a.
    """
    if lo == hi:
        e = expand_rational(lo, cseq)
        return e.q0, list(e.terms[:count]), len(e.terms) <= count
    q0 = floor(lo)
    terms = []
    if floor(hi) != q0:
        return None, terms, False
    Alo, Ahi = lo - q0, hi - q0
    for n in range(1, count + 1):
        if Alo <= 0:
            break
        c = cseq.eval(n)
        a = c * Ahi.denominator // Ahi.numerator
        if not Fraction(c, a + 1) < Alo:
            break
        terms.append(a)
        q = Fraction(c, a)
        Alo, Ahi = q - Ahi, q - Alo
    return q0, terms, False


def digits(x: Real, count: int = DEFAULT_DIGITS, budget: int = DEFAULT_BUDGET) -> Expansion:
    """q0 and a_1..a_count of the expansion of ``x``.

    Digits are emitted only when the current enclosure certifies them, so a
    value sitting exactly on a digit boundary is decided only once its
    enclosure collapses to a point. Raises ``Undecided(k)`` when the budget
    runs out while digit k is still open (k = 0 means the integer part).
    The result is terminated when the expansion ends within ``count``
    digits, otherwise it is an open prefix of length ``count``.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    if isinstance(x, Exact):
        e = x.expansion
        if e.known() <= count:
            return e
        return Expansion(e.q0, e.terms[:count], e.cseq, terminated=False)
    best = -1
    for depth in range(1, budget + 1):
        try:
            (lo, hi), _ = _interval(x, depth)
        except _Unresolved:
            continue
        q0, terms, done = _digits_from_interval(lo, hi, x.cseq, count)
        if q0 is not None and (done or len(terms) == count):
            return Expansion(q0, terms, x.cseq, terminated=done)
        best = max(best, len(terms) if q0 is not None else -1)
    raise Undecided(best + 1)


def compare_reals(x: Real, y: Real, budget: int = DEFAULT_BUDGET) -> Ordering:
    """Sign of x - y by enclosure refinement; UNDECIDED if never separated."""
    d = sub(x, y)
    if isinstance(d, Exact):
        return Ordering.LESS if d.value < 0 else Ordering.GREATER if d.value > 0 else Ordering.EQUAL
    for depth in range(1, budget + 1):
        try:
            (lo, hi), _ = _interval(d, depth)
        except _Unresolved:
            continue
        if hi < 0:
            return Ordering.LESS
        if lo > 0:
            return Ordering.GREATER
        if lo == hi == 0:
            return Ordering.EQUAL
    return Ordering.UNDECIDED


# -- finite suprema -------------------------------------------------------------

class _DigitSource:
    """q_k of a member, fetched lazily."""

    def __init__(self, x: Real, budget: int):
        self.x = x
        self.budget = budget
        self.e = x.expansion if isinstance(x, (Exact, Stream)) else None

    def q(self, k: int) -> Fraction:
        if isinstance(self.x, Node):
            if self.e is None or (not self.e.terminated and self.e.known() < k):
                self.e = digits(self.x, max(k, 1), self.budget)
        try:
            return self.e.q(k)
        except PrefixExhausted:
            raise Undecided(k) from None


def _extremum(xs: Sequence[Real], budget: int, upper: bool) -> Real:
    if not xs:
        raise ValueError("need a nonempty set")
    _context(*xs)
    sources = [_DigitSource(x, budget) for x in xs]
    alive = list(range(len(xs)))
    for k in range(0, budget + 1):
        vals = {i: sources[i].q(k) for i in alive}
        # digit 0 and odd digits: larger q is larger; even digits reversed
        take_max = (k == 0 or k % 2 == 1) == upper
        target = max(vals.values()) if take_max else min(vals.values())
        alive = [i for i in alive if vals[i] == target]
        if len(alive) == 1 or (k >= 1 and target == 0):
            _require_canonical(xs)
            return xs[alive[0]]
    raise Undecided(budget, what="digit while separating members at")


def _require_canonical(xs):
    # only the digits already read decided the order; validate exactly those
    # (a deeper check could force huge terms of fast-growing streams)
    for x in xs:
        if isinstance(x, Stream):
            e = x.expansion
            report = check_T(e, e.known())
            if not report.valid:
                raise ValueError(f"member {x!r} is not a canonical expansion: {report}")


def sup_finite(xs: Sequence[Real], budget: int = DEFAULT_DIGITS) -> Real:
    """Largest member, found digit by digit (alternating max/min of q_k)."""
    return _extremum(xs, budget, upper=True)


def inf_finite(xs: Sequence[Real], budget: int = DEFAULT_DIGITS) -> Real:
    return _extremum(xs, budget, upper=False)


# -- convergence evidence ---------------------------------------------------------

@dataclass
class LReport:
    """Finite evidence for |a_n - b_n| -> 0.

    ``thresholds[m]`` is the least N such that |a_n - b_n| < 1/m for every
    probed n >= N; ``counter_evidence`` lists the m with no such N.
    """
    m_max: int
    n_probe: int
    thresholds: dict = field(default_factory=dict)
    counter_evidence: list = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.counter_evidence

    @property
    def first_counter(self) -> Optional[int]:
        return self.counter_evidence[0] if self.counter_evidence else None


def check_L(pairs: Iterable, m_max: int, n_probe: int) -> LReport:
    diffs = [abs(Fraction(a) - Fraction(b)) for a, b in islice(pairs, n_probe)]
    if not diffs:
        raise ValueError("no pairs to probe")
    # suffix maxima are non-increasing; negate so bisect sees ascending keys
    suffix = [Fraction(0)] * len(diffs)
    run = Fraction(0)
    for i in range(len(diffs) - 1, -1, -1):
        run = max(run, diffs[i])
        suffix[i] = run
    keys = [-s for s in suffix]
    report = LReport(m_max, len(diffs))
    for m in range(1, m_max + 1):
        # first i with suffix[i] < 1/m
        i = bisect_right(keys, -Fraction(1, m))
        if i < len(keys):
            report.thresholds[m] = i + 1
        else:
            report.counter_evidence.append(m)
    return report
