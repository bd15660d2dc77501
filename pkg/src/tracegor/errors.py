"""Exception hierarchy.

Every error is either an :class:`InputError` (bad or unsupported input, CLI exit
code 2) or a :class:`ResourceBoundError` (a configured cap or search window was
too small, CLI exit code 3).
"""

from __future__ import annotations


class TraceGorError(Exception):
    """Base class for all package errors."""


class InputError(TraceGorError):
    pass


class ResourceBoundError(TraceGorError):
    pass


class DimensionMismatch(InputError, ValueError):
    pass


class ZeroVector(InputError, ValueError):
    pass


class DegenerateCone(InputError, ValueError):
    pass


class EmptyGenerators(InputError, ValueError):
    pass


class NonPositiveDegree(InputError, ValueError):
    pass


class GroupNotFull(InputError, ValueError):
    pass


class NonIntegralDegree(InputError, ValueError):
    pass


class UnsupportedDimension(InputError):
    pass


class UnsupportedRing(InputError):
    pass


class GcdNotOne(InputError, ValueError):
    pass


class EmptyInput(InputError, ValueError):
    pass


class NotSemiStandard(InputError):
    """Raised by :func:`h_vector` when the degree-one part does not generate an m-primary ideal."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class SpecError(InputError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)
        self.line = line
        self.column = column


class LatticeOverflow(ResourceBoundError, OverflowError):
    pass


class DegreeCapExceeded(ResourceBoundError):
    pass


class WindowUnstable(ResourceBoundError):
    pass


class StabilizationFailed(ResourceBoundError):
    pass


class GradingSearchFailed(ResourceBoundError):
    """No positive grading was found within the retry budget."""
