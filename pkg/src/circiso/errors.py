"""Exception hierarchy for circiso."""


class CircIsoError(Exception):
    """Base class for all library errors."""


class InvalidModulus(CircIsoError, ValueError):
    pass


class ZeroJump(CircIsoError, ValueError):
    """A connection-set value reduced to 0 mod n."""


class NotAUnit(CircIsoError, ValueError):
    """Multiplier is not coprime to n, so the Adam's map is not a bijection."""


class InvalidR(CircIsoError, ValueError):
    """gcd(n, r) == 1: the theta transformation degenerates to the identity."""


class NoMultipleOfM(CircIsoError, ValueError):
    pass


class OrderMismatch(CircIsoError, ValueError):
    pass


class NotABijection(CircIsoError, ValueError):
    pass


class NotAWitnessVerdict(CircIsoError, ValueError):
    pass


class BudgetExceeded(CircIsoError, RuntimeError):
    pass


class BadIndex(CircIsoError, ValueError):
    pass


class InvalidParams(CircIsoError, ValueError):
    pass


class DegenerateSet(CircIsoError, ValueError):
    pass


class GcdNotOne(CircIsoError, ValueError):
    pass


class TheoremViolation(CircIsoError, AssertionError):
    """A generated family failed one of its structural checks.

    ``check`` names the failing sub-check so reports can point at it.
    """

    def __init__(self, check: str, message: str):
        super().__init__(f"{check}: {message}")
        self.check = check


class ParseError(CircIsoError, ValueError):
    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.text = text
        self.position = position


class MissingGolden(CircIsoError, FileNotFoundError):
    pass
