"""
Error types raised across the package.

The CLI maps NonGeneric (and ZeroCofactor) to exit code 3 and every other
HexanetError to exit code 2.
"""
from typing import Any, List, Optional


class HexanetError(Exception):
    """Base class for all library errors"""


class RingMismatch(HexanetError, TypeError):
    """Arithmetic between scalars of different rings"""


class NonGeneric(HexanetError, ArithmeticError):
    """A minor or network value that must be nonzero vanished"""

    def __init__(self, message: str, position: Optional[Any] = None):
        super().__init__(message)
        self.position = position


class ZeroCofactor(NonGeneric):
    """The cofactor of the unknown entry is zero"""


class NotNormalized(HexanetError, ValueError):
    pass


class InvalidTiling(HexanetError, ValueError):
    def __init__(self, message: str, violations: Optional[List[Any]] = None):
        super().__init__(message)
        self.violations = violations or []


class NotFlippable(HexanetError, ValueError):
    pass


class BoundExceeded(HexanetError, ValueError):
    pass


class NonLaurent(HexanetError, ArithmeticError):
    """A symbolic division did not cancel to a single-term divisor"""


class NotHermitian(HexanetError, ValueError):
    pass


class InvalidInput(HexanetError, ValueError):
    """Input outside the domain an operation is defined on"""


class PrerequisiteMissing(HexanetError, KeyError):
    pass


class CalibrationError(HexanetError, AssertionError):
    """Stored calibration data disagrees with the computed oracle"""
