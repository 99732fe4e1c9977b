"""Checked 64-bit integer arithmetic."""

from .const import INT64_MAX, INT64_MIN
from .exception import ArithmeticRangeError


def checked(value: int) -> int:
    """Return value if it fits in a signed 64-bit integer."""
    if value < INT64_MIN or value > INT64_MAX:
        raise ArithmeticRangeError(f"{value} exceeds the 64-bit integer range")
    return value


def checked_mul(a: int, b: int) -> int:
    """Multiply with overflow check."""
    return checked(a * b)


def checked_add(*terms: int) -> int:
    """Add with overflow check on the partial sums."""
    total = 0
    for term in terms:
        total = checked(total + term)
    return total


def checked_pow(base: int, exponent: int) -> int:
    """Raise to a nonnegative power with overflow check."""
    return checked(base**exponent)


def ensure_span(coefficients: tuple[int, ...], max_abs: int) -> None:
    """Check that every form value over elements bounded by max_abs fits.

    Vectorised tabulation relies on this before doing int64 arithmetic.
    """
    checked(sum(abs(u) for u in coefficients) * max_abs)
