"""Exceptions raised by ring and polynomial operations."""


class NotInvertible(ZeroDivisionError):
    """The element has no multiplicative inverse in its ring."""


class DimensionMismatch(ValueError):
    """Matrix operands do not have the dimension the ring expects."""


class NotCentral(ValueError):
    """The divisor's leading coefficient does not commute with the divisor."""


class NotMonic(ValueError):
    """The operation requires a monic divisor."""


class UnsupportedSigma(ValueError):
    """The operation is only defined when the twist endomorphism is the identity."""


class NegativeLeftShift(ValueError):
    """Left whole shifts by a negative amount are not defined for skew polynomials."""


class NoConvergence(RuntimeError):
    """An iteration exceeded its convergence cap; indicates a bug or unsupported input."""


class ParseError(ValueError):
    """A polynomial document could not be parsed or failed validation."""
