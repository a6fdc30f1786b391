"""Multiplier sequences {c_n} and their small text grammar.

Grammar::

    const:<k> | pow:<l> | list:<k1>,<k2>,...[;tail:(const:<k>|pow:<l>)]

``pow:l`` means c_n = l**n. Tail rules of an explicit list are evaluated at
the absolute index, so ``list:2,4;tail:pow:2`` is 2, 4, 8, 16, ...
A list without a tail is finite; asking for a term past its end raises
``IndexError``.

``CSeq.eval`` memoizes under a lock, so one instance can be shared between
threads.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass, field
from typing import Optional, Union

from .errors import DivisorChainViolation, ParseError


@dataclass(frozen=True)
class Constant:
    k: int

    def at(self, n: int) -> int:
        return self.k

    def render(self) -> str:
        return f"const:{self.k}"


@dataclass(frozen=True)
class Geometric:
    l: int

    def at(self, n: int) -> int:
        return self.l ** n

    def render(self) -> str:
        return f"pow:{self.l}"


@dataclass(frozen=True)
class Explicit:
    prefix: tuple
    tail: Optional[Union[Constant, Geometric]] = None

    def at(self, n: int) -> int:
        if n <= len(self.prefix):
            return self.prefix[n - 1]
        if self.tail is None:
            raise IndexError(f"explicit sequence has only {len(self.prefix)} terms (asked for c_{n})")
        return self.tail.at(n)

    def render(self) -> str:
        s = "list:" + ",".join(str(k) for k in self.prefix)
        if self.tail is not None:
            s += ";tail:" + self.tail.render()
        return s


Rule = Union[Constant, Geometric, Explicit]


@dataclass(frozen=True)
class CSeq:
    rule: Rule
    divisor_chain_required: bool = False
    _cache: dict = field(default_factory=dict, init=False, compare=False, repr=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, init=False, compare=False, repr=False)

    def __post_init__(self):
        _validate_rule(self.rule)

    def eval(self, n: int) -> int:
        """Return c_n (n >= 1).

        With ``divisor_chain_required`` the pair (c_{n-1}, c_n) is checked
        and a break raises ``DivisorChainViolation(n)``.
        """
        if n < 1:
            raise ValueError(f"index must be >= 1, got {n}")
        c = self._raw(n)
        if self.divisor_chain_required and n > 1:
            prev = self._raw(n - 1)
            if c % prev:
                raise DivisorChainViolation(n, prev, c)
        return c

    def _raw(self, n):
        c = self._cache.get(n)
        if c is None:
            with self._lock:
                c = self._cache.get(n)
                if c is None:
                    c = self.rule.at(n)
                    self._cache[n] = c
        return c

    __call__ = eval

    def chain_break(self, upto: int) -> Optional[int]:
        """First n <= upto with c_{n-1} not dividing c_n, or None."""
        prev = self.rule.at(1)
        for n in range(2, upto + 1):
            try:
                cur = self.rule.at(n)
            except IndexError:
                return None
            if cur % prev:
                return n
            prev = cur
        return None

    def render(self) -> str:
        return self.rule.render()

    def __str__(self):
        return self.render()

    def with_chain(self, required: bool = True) -> "CSeq":
        return CSeq(self.rule, required)


def _validate_rule(rule):
    if isinstance(rule, Constant):
        ok = isinstance(rule.k, int) and rule.k >= 1
    elif isinstance(rule, Geometric):
        ok = isinstance(rule.l, int) and rule.l >= 1
    elif isinstance(rule, Explicit):
        ok = (len(rule.prefix) > 0
              and all(isinstance(k, int) and k >= 1 for k in rule.prefix)
              and (rule.tail is None or isinstance(rule.tail, (Constant, Geometric))))
        if ok and rule.tail is not None:
            _validate_rule(rule.tail)
    else:
        ok = False
    if not ok:
        raise ValueError(f"invalid multiplier rule: {rule!r}")


def constant(k: int = 1, chain: bool = False) -> CSeq:
    return CSeq(Constant(k), chain)


def geometric(l: int, chain: bool = False) -> CSeq:
    return CSeq(Geometric(l), chain)


def explicit(prefix, tail=None, chain: bool = False) -> CSeq:
    return CSeq(Explicit(tuple(prefix), tail), chain)


class _Scanner:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def error(self, expected):
        raise ParseError(self.text, self.pos, expected)

    def literal(self, word):
        if not self.text.startswith(word, self.pos):
            self.error(repr(word))
        self.pos += len(word)

    def peek(self, word):
        return self.text.startswith(word, self.pos)

    def positive_int(self):
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("positive integer")
        value = int(self.text[start:self.pos])
        if value < 1:
            self.pos = start
            self.error("positive integer")
        return value

    def end(self):
        if self.pos != len(self.text):
            self.error("end of input")


def _simple_rule(sc: _Scanner):
    if sc.peek("const:"):
        sc.literal("const:")
        return Constant(sc.positive_int())
    if sc.peek("pow:"):
        sc.literal("pow:")
        return Geometric(sc.positive_int())
    sc.error("'const:' or 'pow:'")


def parse(text: str, divisor_chain_required: bool = False) -> CSeq:
    sc = _Scanner(text)
    if sc.peek("list:"):
        sc.literal("list:")
        prefix = [sc.positive_int()]
        while sc.peek(","):
            sc.literal(",")
            prefix.append(sc.positive_int())
        tail = None
        if sc.peek(";"):
            sc.literal(";")
            sc.literal("tail:")
            tail = _simple_rule(sc)
        rule = Explicit(tuple(prefix), tail)
    else:
        rule = _simple_rule(sc)
    sc.end()
    return CSeq(rule, divisor_chain_required)
