"""
Exception types raised by sensize.
"""

from typing import List, Optional


class SensizeError(Exception):
    """Base class for every error raised by sensize."""


class DomainError(SensizeError, ValueError):
    """An argument lies outside the domain of an operation."""


class SpecError(SensizeError, ValueError):
    """A test specification or effect-size pairing is not valid."""


class NumericError(SensizeError, ArithmeticError):
    """A series, continued fraction or search failed to converge."""


class DegenerateDataError(SensizeError, ValueError):
    """Input data carry no information (zero variance, all-zero counts)."""


class ConfigError(SensizeError, ValueError):
    """A simulation configuration failed validation."""

    def __init__(self, message: str, errors: Optional[List[str]] = None) -> None:
        super().__init__(message)
        self.errors = errors or []
