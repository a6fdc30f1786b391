"""Exception types shared across the package."""


class GasError(Exception):
    """Base class for domain errors (mapped to exit code 1 by the CLI)."""


class ParseError(GasError, ValueError):
    def __init__(self, text, position, expected):
        self.text = text
        self.position = position
        self.expected = expected
        super().__init__(f"at position {position} in {text!r}: expected {expected}")


class DivisorChainViolation(GasError):
    """c_{n-1} does not divide c_n."""

    def __init__(self, n, prev, cur):
        self.n = n
        super().__init__(f"divisor chain broken at n={n}: {prev} does not divide {cur}")


class BudgetExceeded(GasError):
    pass


class PrefixExhausted(BudgetExceeded):
    """A non-terminated expansion literal has no more known terms."""

    def __init__(self, n):
        self.n = n
        super().__init__(f"term {n} is beyond the known prefix")


class InversionOfZero(GasError, ZeroDivisionError):
    pass


class Undecided(GasError):
    """A budgeted decision procedure ran out of budget at ``index``."""

    def __init__(self, index, what="digit"):
        self.index = index
        super().__init__(f"undecided at {what} {index}")


class LExceedsK(GasError):
    def __init__(self, l, K):
        super().__init__(f"l={l} exceeds floor(K)={K}")


class GrowthViolation(GasError):
    def __init__(self, index, detail=""):
        self.index = index
        super().__init__(f"growth condition fails at index {index}{': ' + detail if detail else ''}")


class HeadIndexOverflow(GasError):
    pass
