"""The generalized alternating-Sylvester (GAS) expansion.

For a real alpha and multipliers c_1, c_2, ... the recursion is

    q_0 = floor(alpha),  A_1 = alpha - q_0,
    a_n = floor(c_n / A_n),  q_n = c_n / a_n,  A_{n+1} = q_n - A_n,

and alpha = q_0 + q_1 - q_2 + q_3 - ...  An expansion stores the integers
a_n; q_n is derived. A zero remainder ends the expansion (every later q_n
is 0) and is recorded by ``terminated``.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from . import _core
from .cseq import CSeq, parse as parse_cseq
from .errors import BudgetExceeded, ParseError, PrefixExhausted
from .rational import floor

DEFAULT_MAX_TERMS = 10_000

EXPANSION_SCHEMA = {
    "type": "object",
    "required": ["q0", "terms", "terminated", "cseq"],
    "properties": {
        "q0": {"type": "integer"},
        "terms": {"type": "array", "items": {"type": "integer", "minimum": 1}},
        "terminated": {"type": "boolean"},
        "cseq": {"type": "string"},
    },
    "additionalProperties": False,
}


class Expansion:
    """A GAS digit sequence (q0; a_1, a_2, ...) under a multiplier sequence.

    Three flavours share this class:

    * terminated: ``terms`` is the whole expansion;
    * a non-terminated literal: ``terms`` is a known prefix and asking for
      more raises ``PrefixExhausted``;
    * a stream: ``source(n)`` produces a_n on demand. Produced terms are
      memoized under a lock, so each is computed once.
    """

    __slots__ = ("q0", "cseq", "_terms", "terminated", "_source", "_lock")

    def __init__(self, q0: int, terms, cseq: CSeq, terminated: bool = True,
                 source: Optional[Callable[[int], int]] = None):
        if terminated and source is not None:
            raise ValueError("a terminated expansion cannot have a term source")
        self.q0 = int(q0)
        self.cseq = cseq
        self._terms = [int(a) for a in terms]
        self.terminated = terminated
        self._source = source
        self._lock = threading.Lock()

    @classmethod
    def stream(cls, q0, source, cseq, prefix=()):
        return cls(q0, prefix, cseq, terminated=False, source=source)

    @property
    def terms(self) -> tuple:
        """The terms known so far (all of them when terminated)."""
        return tuple(self._terms)

    @property
    def is_stream(self) -> bool:
        return self._source is not None

    def known(self) -> int:
        return len(self._terms)

    def term(self, n: int) -> int:
        """a_n, or 0 when the expansion terminated before index n."""
        if n <= len(self._terms):
            return self._terms[n - 1]
        if self.terminated:
            return 0
        if self._source is None:
            raise PrefixExhausted(n)
        with self._lock:
            while len(self._terms) < n:
                self._terms.append(int(self._source(len(self._terms) + 1)))
        return self._terms[n - 1]

    def q(self, n: int) -> Fraction:
        if n == 0:
            return Fraction(self.q0)
        a = self.term(n)
        return Fraction(self.cseq.eval(n), a) if a else Fraction(0)

    def prefix(self, k: int) -> tuple:
        """First k terms (fewer if the expansion terminated earlier)."""
        if self.terminated:
            return tuple(self._terms[:k])
        self.term(k)
        return tuple(self._terms[:k])

    def __len__(self):
        if not self.terminated:
            raise TypeError("length of a non-terminated expansion is unknown")
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, Expansion):
            return NotImplemented
        if self.is_stream or other.is_stream:
            return self is other
        return (self.q0 == other.q0 and self._terms == other._terms
                and self.terminated == other.terminated
                and self.cseq.rule == other.cseq.rule)

    def __hash__(self):
        if self.is_stream:
            return id(self)
        return hash((self.q0, tuple(self._terms), self.terminated, self.cseq.rule))

    def __repr__(self):
        return f"Expansion({self.literal()!r}, cseq={self.cseq.render()!r})"

    def literal(self) -> str:
        """``q0;a1,a2,...`` with a trailing ``;...`` when not terminated."""
        s = f"{self.q0};" + ",".join(str(a) for a in self._terms)
        if not self.terminated:
            s += ";..."
        return s

    def describe(self) -> str:
        state = "terminated" if self.terminated else "open"
        return f"q0={self.q0} terms={','.join(str(a) for a in self._terms)} {state}"

    def to_json(self) -> dict:
        return {"q0": self.q0, "terms": list(self._terms),
                "terminated": self.terminated, "cseq": self.cseq.render()}

    @classmethod
    def from_json(cls, obj: dict, chain: bool = False) -> "Expansion":
        return cls(obj["q0"], obj["terms"], parse_cseq(obj["cseq"], chain),
                   terminated=obj["terminated"])


def parse_literal(text: str, cseq: CSeq) -> Expansion:
    """Parse ``q0;a1,a2,...[;...]`` or the ``describe()`` form
    ``q0=Q terms=a1,a2,... terminated|open``."""
    s = text.strip()
    if s.startswith("q0="):
        parts = s.split()
        try:
            q0 = int(parts[0][3:])
            if len(parts) != 3 or not parts[1].startswith("terms="):
                raise ValueError
            body = parts[1][6:]
            terms = [int(t) for t in body.split(",")] if body else []
            if parts[2] not in ("terminated", "open"):
                raise ValueError
        except ValueError:
            raise ParseError(text, 0, "q0=<int> terms=<a1,...> terminated|open") from None
        return Expansion(q0, terms, cseq, terminated=parts[2] == "terminated")
    head, sep, rest = s.partition(";")
    try:
        q0 = int(head)
    except ValueError:
        raise ParseError(text, 0, "integer q0") from None
    terminated = True
    if rest.endswith(";..."):
        terminated = False
        rest = rest[:-4]
    elif rest == "...":
        terminated = False
        rest = ""
    terms = []
    if rest:
        offset = len(head) + 1
        for chunk in rest.split(","):
            if not chunk.isdigit() or int(chunk) < 1:
                raise ParseError(text, offset, "positive integer term")
            terms.append(int(chunk))
            offset += len(chunk) + 1
    return Expansion(q0, terms, cseq, terminated=terminated)


@dataclass(frozen=True)
class StepState:
    A: Fraction
    index: int = 1


@dataclass(frozen=True)
class Step:
    a: int
    q: Fraction
    next: StepState


def step(state: StepState, c: int) -> Optional[Step]:
    """One step of the recursion; ``None`` when A = 0 (terminated)."""
    A = state.A
    if A < 0:
        raise ValueError(f"remainder must be non-negative, got {A}")
    if A == 0:
        return None
    a = floor(Fraction(c) / A)
    q = Fraction(c, a)
    return Step(a, q, StepState(q - A, state.index + 1))


def expand_rational(alpha, cseq: CSeq, max_terms: int = DEFAULT_MAX_TERMS) -> Expansion:
    """Full expansion of a rational; always terminates for rational input.

    ``BudgetExceeded`` is raised only if ``max_terms`` is smaller than the
    true length, which never exceeds the numerator of frac(alpha).
    """
    if max_terms < 1:
        raise ValueError("max_terms must be >= 1")
    alpha = Fraction(alpha)
    q0, terms, done = _core.expand_fraction(alpha.numerator, alpha.denominator,
                                            cseq.eval, max_terms)
    if not done:
        raise BudgetExceeded(f"expansion of {alpha} needs more than {max_terms} terms")
    return Expansion(q0, terms, cseq, terminated=True)


def expand_with_remainders(alpha, cseq: CSeq, max_terms: int = DEFAULT_MAX_TERMS):
    """Expansion plus the exact remainders [A_1, ..., A_{m+1}]."""
    alpha = Fraction(alpha)
    q0, terms, states, done = _core.expand_trace(alpha.numerator, alpha.denominator,
                                                 cseq.eval, max_terms)
    if not done:
        raise BudgetExceeded(f"expansion of {alpha} needs more than {max_terms} terms")
    return Expansion(q0, terms, cseq), [Fraction(p, q) for p, q in states]


def reconstruct(e: Expansion, upto: Optional[int] = None) -> Fraction:
    """q0 + sum_{k<=m} (-1)^(k-1) c_k/a_k, m = min(upto, available terms)."""
    if upto is not None and e.is_stream:
        e.term(upto)
    m = e.known() if upto is None else min(upto, e.known())
    terms = e.terms[:m]
    cvals = [e.cseq.eval(k) for k in range(1, m + 1)]
    num, den = _core.partial_sum(e.q0, terms, cvals)
    return Fraction(num, den)


def truncation(e: Expansion, n: int) -> Fraction:
    """Value of X_n = (q0, q1, ..., qn, 0, ...); requires n known terms."""
    if n > e.known() and not e.terminated:
        e.term(n)
    return reconstruct(e, n)


def tail_remainder(e: Expansion, n: int, upto: int):
    """Enclosure (lower, upper) of A_n from partial sums of its tail.

    A_n = q_n - q_{n+1} + q_{n+2} - ...; the partial sums with ``upto`` and
    ``upto + 1`` terms bracket it because the q's decrease.
    """
    if n < 1 or upto < 1:
        raise ValueError("n and upto must be >= 1")
    if e.terminated and n > e.known():
        return Fraction(0), Fraction(0)
    s = Fraction(0)
    prev = None
    for j in range(upto + 1):
        prev = s
        qk = e.q(n + j)
        s += qk if j % 2 == 0 else -qk
    return (s, prev) if upto % 2 else (prev, s)


def fundamental_violations(alpha, cseq: CSeq, max_terms: int = DEFAULT_MAX_TERMS):
    """Check the step-wise properties of an expansion of ``alpha``.

    Returns a list of ``(name, n)`` pairs, empty when all hold:

    P1  c_n/(a_n+1) < A_n <= c_n/a_n             (A_n != 0)
    P2  a_{n+1} + 1 > (c_{n+1}/c_n) a_n (a_n+1)  (A_{n+1} != 0)
    P3  A_n > A_{n+1} if A_n != 0, else A_n >= A_{n+1}
    P4  a_n >= c_n  (q_n <= 1)
    P5  a_{n+1} > a_n                            (A_{n+1} != 0)
    P6  A_{n+1} < 1/(a_n+1)                      (A_n != 0)
    P7  q_{n+1} < q_n                            (q_{n+1} != 0)
    """
    e, A = expand_with_remainders(alpha, cseq, max_terms)
    a = (0,) + e.terms
    m = len(e.terms)
    c = [0] + [cseq.eval(k) for k in range(1, m + 2)]
    bad = []
    for n in range(1, m + 1):
        An, An1 = A[n - 1], A[n]
        if not (Fraction(c[n], a[n] + 1) < An <= Fraction(c[n], a[n])):
            bad.append(("P1", n))
        if not An > An1:
            bad.append(("P3", n))
        if a[n] < c[n]:
            bad.append(("P4", n))
        if not An1 < Fraction(1, a[n] + 1):
            bad.append(("P6", n))
        if n < m:
            # A_{n+1} != 0 exactly when a term n+1 exists
            if not (a[n + 1] + 1) * c[n] > c[n + 1] * a[n] * (a[n] + 1):
                bad.append(("P2", n))
            if not a[n + 1] > a[n]:
                bad.append(("P5", n))
            if not Fraction(c[n + 1], a[n + 1]) < Fraction(c[n], a[n]):
                bad.append(("P7", n))
    if A[m] != 0:
        bad.append(("termination", m))
    return bad
