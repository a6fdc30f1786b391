"""Canonical digit sequences: membership test and the digitwise order.

A sequence (q0; a_1, a_2, ...) under a divisor-chain multiplier sequence is
canonical (it is the GAS expansion of its own value) exactly when

  C1  q0 is an integer
  C2  a_n >= c_n, i.e. q_n <= 1
  C3  if q_1 = 1 then q_2 != 0
  C4  once a q_n is zero all later ones are      (structural here)
  C5  every q_n != 0 has the form c_n / a_n with a_n a positive integer
  U   a_{n+1} >= (c_{n+1}/c_n) a_n (a_n + 1)
  C6  equality in U at n is allowed only if q_{n+2} != 0
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import BudgetExceeded, PrefixExhausted
from .expansion import Expansion, expand_rational, reconstruct
from .rational import Ordering

DEFAULT_HORIZON = 64

TCHECK_SCHEMA = {
    "type": "object",
    "required": ["valid", "violated", "index", "checked_upto"],
    "properties": {
        "valid": {"type": "boolean"},
        "violated": {"enum": ["C1", "C2", "C3", "C4", "C5", "C6", "U", "chain", None]},
        "index": {"type": ["integer", "null"]},
        "checked_upto": {"type": "integer", "minimum": 0},
    },
    "additionalProperties": False,
}


@dataclass(frozen=True)
class TCheckReport:
    valid: bool
    violated: Optional[str] = None
    index: Optional[int] = None
    checked_upto: int = 0

    def __bool__(self):
        return self.valid

    def to_json(self) -> dict:
        return {"valid": self.valid, "violated": self.violated,
                "index": self.index, "checked_upto": self.checked_upto}

    def __str__(self):
        if self.valid:
            return f"valid (checked {self.checked_upto} terms)"
        return f"invalid {self.violated} at {self.index}"


def _fail(code, index, horizon):
    return TCheckReport(False, code, index, horizon)


def check_T(e: Expansion, upto: int = DEFAULT_HORIZON) -> TCheckReport:
    """Test the canonical conditions on ``e``.

    Terminated expansions are checked completely; otherwise the first
    ``upto`` terms (or the known prefix of a literal, if shorter) are.
    """
    if e.terminated:
        horizon = e.known()
    elif e.is_stream:
        e.term(upto)
        horizon = upto
    else:
        horizon = min(upto, e.known())

    if not isinstance(e.q0, int):
        return _fail("C1", 0, horizon)
    chain_at = e.cseq.chain_break(max(horizon, 1))
    if chain_at is not None:
        return _fail("chain", chain_at, horizon)

    a = e.terms[:horizon]
    c = [e.cseq.rule.at(n) for n in range(1, horizon + 1)]
    for n in range(1, horizon + 1):
        an, cn = a[n - 1], c[n - 1]
        if an < 1:
            return _fail("C5", n, horizon)
        if an < cn:
            return _fail("C2", n, horizon)
        if n == 1 and an == cn and e.terminated and horizon == 1:
            return _fail("C3", 1, horizon)
        if n < horizon:
            lhs = a[n] * cn
            rhs = c[n] * an * (an + 1)
            if lhs < rhs:
                return _fail("U", n, horizon)
            # q_{n+2} = 0 iff the terminated expansion stops at n+1
            if lhs == rhs and e.terminated and n + 1 == horizon:
                return _fail("C6", n, horizon)
    return TCheckReport(True, None, None, horizon)


def refixpoint(e: Expansion) -> bool:
    """True iff re-expanding the value of ``e`` gives back ``e`` term for term."""
    if not e.terminated:
        raise ValueError("refixpoint needs a terminated expansion")
    try:
        again = expand_rational(reconstruct(e), e.cseq, max_terms=e.known() + 1)
    except BudgetExceeded:
        return False
    return again == e


def compare(x: Expansion, y: Expansion, budget: int = DEFAULT_HORIZON) -> Ordering:
    """Order two canonical expansions by their first differing digit.

    Past the end of a terminated expansion q_n is 0, which ranks below every
    non-zero q. With equal c_n, a larger a_n means a smaller q_n. At an odd
    index the smaller q gives the smaller number, at an even index the
    larger q does.
    """
    if x.cseq.rule != y.cseq.rule:
        raise ValueError("expansions use different multiplier sequences")
    if x.q0 != y.q0:
        return Ordering.LESS if x.q0 < y.q0 else Ordering.GREATER
    if x.terminated and y.terminated:
        budget = max(x.known(), y.known()) + 1
    for i in range(1, budget + 1):
        try:
            ax, ay = x.term(i), y.term(i)
        except PrefixExhausted:
            return Ordering.UNDECIDED
        if ax == ay:
            if ax == 0:
                return Ordering.EQUAL
            continue
        x_q_smaller = ax == 0 or (ay != 0 and ax > ay)
        if i % 2:
            return Ordering.LESS if x_q_smaller else Ordering.GREATER
        return Ordering.GREATER if x_q_smaller else Ordering.LESS
    return Ordering.UNDECIDED
