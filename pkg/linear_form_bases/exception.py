"""Exceptions module."""

from __future__ import annotations

from collections.abc import Mapping
from typing import Any


class LinearFormBasesError(Exception):
    """Base class of all library errors."""


class ArithmeticRangeError(LinearFormBasesError):
    """Raised when an exact result leaves the signed 64-bit range."""


class FormError(LinearFormBasesError):
    """Raised when linear form coefficients are invalid."""


class ZeroCoefficientError(FormError):
    """Raised when a form coefficient is zero."""


class NonCoprimeError(FormError):
    """Raised when form coefficients are not relatively prime."""


class ExcludedProductError(FormError):
    """Raised when u1*u2 is one of 1, -1, -2."""


class BezoutInputError(LinearFormBasesError):
    """Raised when a gcd of two zeros is requested."""


class InvariantError(LinearFormBasesError):
    """Raised when an internal invariant does not hold."""


class TargetSpecError(LinearFormBasesError):
    """Raised when a target specification is inconsistent."""


class ZeroSetSpecError(LinearFormBasesError):
    """Raised when a zero set description is invalid."""


class WorkCapExceededError(LinearFormBasesError):
    """Raised when a brute-force enumeration would exceed its work cap."""


class GadicParamError(LinearFormBasesError):
    """Raised when g-adic parameters are out of range."""


class HypothesisViolatedError(LinearFormBasesError):
    """Raised when the zero set meets F(A') or the target."""

    def __init__(self, message: str, value: int) -> None:
        """Create a new error."""
        super().__init__(message)
        self.value = value


class SearchExhaustedError(LinearFormBasesError):
    """Raised when no admissible t exists within the search radius."""

    def __init__(
        self,
        max_radius: int,
        histogram: Mapping[str, int],
        step: int | None = None,
        target: int | None = None,
        construction: Any = None,
    ) -> None:
        """Create a new error."""
        where = f" at step {step} (target {target})" if step is not None else ""
        super().__init__(
            f"no admissible t with |t| <= {max_radius}{where}; "
            f"rejections: {dict(histogram)}"
        )
        self.max_radius = max_radius
        self.histogram = dict(histogram)
        self.step = step
        self.target = target
        self.construction = construction


class SetFileError(LinearFormBasesError):
    """Raised when a set file can not be parsed."""

    def __init__(self, message: str, line: int | None = None) -> None:
        """Create a new error."""
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ConfigError(LinearFormBasesError):
    """Raised when command line options are inconsistent."""
