"""Exception types raised by the ringcodes package.

Every domain error derives from RingCodesError so callers (notably the CLI)
can distinguish bad input from genuine bugs.
"""

from __future__ import annotations


class RingCodesError(Exception):
    """Base class for all errors raised by this package."""


class InvalidModulusError(RingCodesError, ValueError):
    """Modulus outside the supported range (must be an integer >= 2)."""


class NotInvertibleError(RingCodesError, ValueError):
    """Inverse requested for an element that is not a unit."""


class WrongClassError(RingCodesError, ValueError):
    """Element is not of the class (unit / zero divisor) the operation needs."""


class UnsupportedRingError(RingCodesError, ValueError):
    """Operation requires a prime-power modulus."""


class NoValuationError(RingCodesError, ValueError):
    """Zero has no p-adic decomposition p^k * u."""


class ShapeError(RingCodesError, ValueError):
    """Vector/matrix dimensions or permutation indices do not line up."""


class MatrixFormatError(RingCodesError, ValueError):
    """Matrix text could not be parsed."""


class EnumerationCapError(RingCodesError):
    """Requested enumeration exceeds the configured work budget."""

    def __init__(self, required: int, cap: int):
        self.required = required
        self.cap = cap
        super().__init__(
            f"enumeration needs {required} component evaluations, cap is {cap}"
        )


class MembershipError(RingCodesError, ValueError):
    """Vector is not a codeword of the code under inspection."""


class ZeroCodewordError(RingCodesError, ValueError):
    """The zero codeword is excluded from minimality questions."""


class OmissionViolatedError(RingCodesError, ValueError):
    """Extra block reintroduces a column of the omitted kind."""

    def __init__(self, column: tuple[int, int], message: str):
        self.column = column
        super().__init__(message)
