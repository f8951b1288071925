"""Exception types shared across the package."""


class CypresError(Exception):
    """Base class for all library errors."""


class DomainError(CypresError, ValueError):
    """An argument lies outside the domain of the operation."""


class ZeroPolynomial(CypresError, ValueError):
    pass


class NotDivisible(CypresError, ArithmeticError):
    pass


class NotApplicable(CypresError):
    """The hypotheses of a reduction step do not hold for the input."""


class NumericInstability(CypresError, ArithmeticError):
    pass


class WordSyntaxError(CypresError, SyntaxError):
    """Malformed cyclic word or polynomial literal; ``offset`` is the byte offset."""

    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class CoefficientOverflow(CypresError, ArithmeticError):
    """A coefficient exceeded the bit-size cap set by ``CYPRES_MAX_BITS``."""
