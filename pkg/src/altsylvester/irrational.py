"""Irrationality certificates for f(-l) = sum_{n>=1} (-l)^n / p_n.

A sequence p_1, p_2, ... lies in the growth class P(K) (K >= 1) when
p_{n+1} >= K p_n (p_n + 1) for all large n. For l in 1..floor(K) the value
f(-l) splits as

    f(-l) = head + tail,  head = sum_{n<2N} (-1)^n l^n / p_n  (rational),
    tail  = sum_{n>=1} (-1)^(n-1) c_n / a_n,
            a_n = p_{n+2N-1},  c_n = l^(n+2N-1),

and the tail is a canonical, never-terminating GAS expansion, so its value
is irrational. ``certify`` checks every finite premise of that argument on a
prefix; ``crosscheck`` independently re-derives the tail digits from the
series itself.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil
from typing import Optional, Sequence

from .canon import check_T
from .cseq import CSeq, constant, explicit
from .errors import GrowthViolation, HeadIndexOverflow, LExceedsK, ParseError
from .expansion import Expansion
from .rational import floor, format_rational, parse_rational

CERTIFICATE_SCHEMA = {
    "type": "object",
    "required": ["l", "N", "head", "checked_prefix", "growth_K"],
    "properties": {
        "l": {"type": "integer", "minimum": 1},
        "N": {"type": "integer", "minimum": 1},
        "head": {"type": "string", "pattern": r"^-?\d+(/\d+)?$"},
        "checked_prefix": {"type": "integer", "minimum": 1},
        "growth_K": {"type": "string", "pattern": r"^-?\d+(/\d+)?$"},
    },
    "additionalProperties": False,
}


class GrowthSeq:
    """Positive integers p_1, p_2, ... with a growth factor K.

    Either an explicit prefix, or the recurrence p_{n+1} = ceil(K p_n (p_n+1)).
    Terms are produced on demand and memoized under a lock.
    """

    def __init__(self, K, prefix: Sequence[int] = (), start: Optional[int] = None,
                 name: Optional[str] = None, N: Optional[int] = None):
        self.K = Fraction(K)
        if self.K < 1:
            raise ValueError("K must be >= 1")
        if not prefix and start is None:
            raise ValueError("need a prefix or a starting term")
        self._terms = [int(p) for p in prefix] or [int(start)]
        if any(p < 1 for p in self._terms):
            raise ValueError("terms must be positive integers")
        self._recurrent = start is not None and not prefix
        self.name = name
        self.N = N
        self._lock = threading.Lock()

    @classmethod
    def recurrence(cls, start: int, K, name=None) -> "GrowthSeq":
        return cls(K, start=start, name=name, N=1)

    @classmethod
    def sylvester(cls) -> "GrowthSeq":
        """2, 6, 42, 1806, ... (K = 1)."""
        return cls.recurrence(2, 1, name="sylvester")

    @classmethod
    def sylvester_k(cls, k) -> "GrowthSeq":
        """1, then p_{n+1} = ceil(k p_n (p_n + 1)); k = 2 gives 1, 4, 40, 3280, ..."""
        return cls.recurrence(1, k, name=f"sylvesterK:{format_rational(Fraction(k))}")

    @property
    def finite(self) -> bool:
        return not self._recurrent

    def __len__(self):
        if self._recurrent:
            raise TypeError("recurrence sequences are infinite")
        return len(self._terms)

    def term(self, n: int) -> int:
        if n < 1:
            raise ValueError("index must be >= 1")
        if n <= len(self._terms):
            return self._terms[n - 1]
        if not self._recurrent:
            raise IndexError(f"sequence has only {len(self._terms)} terms")
        K = self.K
        with self._lock:
            while len(self._terms) < n:
                p = self._terms[-1]
                self._terms.append(ceil(K * p * (p + 1)))
        return self._terms[n - 1]

    def __getitem__(self, n):
        return self.term(n)

    def __repr__(self):
        return f"GrowthSeq({self.name or list(self._terms)!r}, K={self.K})"


def parse_growth_seq(text: str, K=None) -> GrowthSeq:
    """``sylvester`` | ``sylvesterK:<k>`` | ``list:p1,p2,...`` (needs K)."""
    if text == "sylvester":
        return GrowthSeq.sylvester()
    if text.startswith("sylvesterK:"):
        k = parse_rational(text[len("sylvesterK:"):])
        return GrowthSeq.sylvester_k(k)
    if text.startswith("list:"):
        try:
            prefix = [int(t) for t in text[5:].split(",")]
        except ValueError:
            raise ParseError(text, 5, "comma-separated positive integers") from None
        return GrowthSeq(1 if K is None else K, prefix=prefix, name=text)
    raise ParseError(text, 0, "'sylvester', 'sylvesterK:<k>' or 'list:...'")


def _grows(p_next, p, K: Fraction) -> bool:
    # p_next >= K p (p + 1), cleared of K's denominator
    return p_next * K.denominator >= K.numerator * p * (p + 1)


@dataclass(frozen=True)
class PKResult:
    member: bool
    N: int
    violation: Optional[int] = None
    first_violation: Optional[int] = None


def check_PK(seq, K, probe: int) -> PKResult:
    """Least N such that p_{n+1} >= K p_n (p_n+1) for all N <= n < probe.

    ``violation`` is the last failing n (that is what fixes N);
    ``first_violation`` the first. Membership requires at least one checked
    index, i.e. N < probe.
    """
    if probe < 2:
        raise ValueError("probe must be >= 2")
    K = Fraction(K)
    term = seq.term if isinstance(seq, GrowthSeq) else (lambda n: seq[n - 1])
    first = last = None
    for n in range(1, probe):
        if not _grows(term(n + 1), term(n), K):
            first = n if first is None else first
            last = n
    N = 1 if last is None else last + 1
    return PKResult(N < probe, N, last, first)


def eval_f(seq, z: int, terms: int) -> Fraction:
    """Exact partial sum sum_{n=1..terms} z^n / p_n."""
    if terms < 1:
        raise ValueError("terms must be >= 1")
    term = seq.term if isinstance(seq, GrowthSeq) else (lambda n: seq[n - 1])
    return sum((Fraction(z ** n, term(n)) for n in range(1, terms + 1)), Fraction(0))


def tail_cseq(l: int, N: int, length: int) -> CSeq:
    """c_n = l^(n+2N-1) for n = 1..length."""
    if l == 1:
        return constant(1)
    return explicit([l ** (n + 2 * N - 1) for n in range(1, length + 1)])


@dataclass
class Certificate:
    l: int
    N: int
    head: Fraction
    checked_prefix: int
    K: Fraction
    seq: GrowthSeq = field(repr=False)
    tail_terms: tuple = field(repr=False, default=())
    conditions: dict = field(default_factory=dict)

    def tail_c(self, n: int) -> int:
        return self.l ** (n + 2 * self.N - 1)

    def tail_expansion(self, length: Optional[int] = None) -> Expansion:
        """The tail as an open expansion (0; a_1, ..., a_length; ...)."""
        length = self.checked_prefix if length is None else length
        terms = [self.tail_terms[n - 1] if n <= len(self.tail_terms)
                 else self.seq.term(n + 2 * self.N - 1) for n in range(1, length + 1)]
        return Expansion(0, terms, tail_cseq(self.l, self.N, length), terminated=False)

    def to_json(self) -> dict:
        return {"l": self.l, "N": self.N, "head": format_rational(self.head),
                "checked_prefix": self.checked_prefix,
                "growth_K": format_rational(self.K)}


def certify(seq: GrowthSeq, l: int, prefix: int, probe: Optional[int] = None) -> Certificate:
    """Build an irrationality certificate for f(-l; seq).

    N is the larger of the growth threshold and the least N with
    p_{2N} >= l^{2N}; the latter makes the first tail digit satisfy
    a_1 >= c_1, and the tail growth then keeps a_n >= c_n for every n.
    """
    K = seq.K
    if l < 1:
        raise ValueError("l must be a positive integer")
    if l > floor(K):
        raise LExceedsK(l, floor(K))
    if prefix < 1:
        raise ValueError("prefix must be >= 1")
    if probe is None:
        probe = len(seq) if seq.finite else prefix + 1
    pk = check_PK(seq, K, probe)
    if not pk.member:
        raise GrowthViolation(pk.violation, f"not in P({format_rational(K)}) within {probe} terms")
    N = pk.N
    while True:
        if 2 * N > probe:
            raise HeadIndexOverflow(f"no N with p_2N >= l^2N and 2N <= {probe}")
        if seq.term(2 * N) >= l ** (2 * N):
            break
        N += 1
    if seq.finite and 2 * N + prefix - 1 > len(seq):
        raise HeadIndexOverflow(f"need p_{2 * N + prefix - 1}, sequence has {len(seq)} terms")

    head = sum((Fraction((-l) ** n, seq.term(n)) for n in range(1, 2 * N)), Fraction(0))
    tail = [seq.term(n + 2 * N - 1) for n in range(1, prefix + 1)]
    for n in range(1, prefix + 1):
        a, c = tail[n - 1], l ** (n + 2 * N - 1)
        if a < c:
            raise GrowthViolation(n, f"a_{n} < c_{n}")
        # c_{n+1}/c_n = l
        if n < prefix and tail[n] < l * a * (a + 1):
            raise GrowthViolation(n, f"a_{n + 1} < {l} a_{n} (a_{n} + 1)")
    conditions = {"C2": True, "U": True, "nonterminating": True,
                  "growth_threshold": pk.N}
    return Certificate(l, N, head, prefix, K, seq, tuple(tail), conditions)


@dataclass(frozen=True)
class CrosscheckReport:
    ok: bool
    mismatch: Optional[int] = None
    reason: str = ""

    def __bool__(self):
        return self.ok


def crosscheck(cert: Certificate, terms: int) -> CrosscheckReport:
    """Re-derive the first ``terms`` tail digits and compare with the claim.

    Two independent routes:

    * the claimed digits must pass the canonical-sequence test;
    * digit n of the tail value is recomputed from the series. With
      Q_k = c_k / p_{k+2N-1} strictly decreasing, the remainder
      A_n = Q_n - Q_{n+1} + Q_{n+2} - ... satisfies Q_n - Q_{n+1} < A_n < Q_n,
      so a is the digit iff c_n/(a+1) <= Q_n - Q_{n+1} and Q_n <= c_n/a.
      Digits 1..n-1 matching is what makes A_n the true remainder.
    """
    if terms < 1:
        raise ValueError("terms must be >= 1")
    claimed = [cert.tail_terms[n - 1] if n <= len(cert.tail_terms)
               else cert.seq.term(n + 2 * cert.N - 1) for n in range(1, terms + 1)]
    e = Expansion(0, claimed, tail_cseq(cert.l, cert.N, terms), terminated=False)
    report = check_T(e, terms)
    bad_T = None if report.valid else report.index

    bad_echo = None
    shift = 2 * cert.N - 1
    for n in range(1, terms + 1):
        c, c1 = cert.tail_c(n), cert.tail_c(n + 1)
        p, p1 = cert.seq.term(n + shift), cert.seq.term(n + 1 + shift)
        # the q's must strictly decrease: c1/p1 < c/p
        if not c1 * p < c * p1:
            bad_echo = n
            break
        a = claimed[n - 1]
        upper_ok = p >= a                                   # c/p <= c/a
        lower_ok = c * p * p1 <= (a + 1) * (c * p1 - c1 * p)  # c/(a+1) <= c/p - c1/p1
        if not (upper_ok and lower_ok):
            bad_echo = n
            break

    if bad_echo is None and bad_T is None:
        return CrosscheckReport(True)
    if bad_echo is not None:
        return CrosscheckReport(False, bad_echo, "digit echo")
    return CrosscheckReport(False, bad_T, f"canonical test ({report.violated})")
