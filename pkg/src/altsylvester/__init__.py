"""Generalized alternating-Sylvester expansions as exact real numbers."""
from ._core import BACKEND
from .canon import TCheckReport, check_T, compare, refixpoint
from .cseq import CSeq, constant, explicit, geometric
from .cseq import parse as parse_cseq
from .errors import (BudgetExceeded, DivisorChainViolation, GasError, GrowthViolation,
                     HeadIndexOverflow, InversionOfZero, LExceedsK, ParseError,
                     PrefixExhausted, Undecided)
from .expansion import (Expansion, expand_rational, parse_literal, reconstruct, step,
                        StepState, tail_remainder)
from .rational import Ordering, cmp, floor, format_rational, parse_rational

__version__ = "0.1.0"
