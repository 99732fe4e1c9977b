"""Powers of a base zero set."""

from __future__ import annotations

from collections.abc import Iterator, Mapping
from dataclasses import dataclass
from typing import Any

from ..exception import ZeroSetSpecError
from .base_zero_set import BaseZeroSet


@dataclass(frozen=True)
class PowersOfBase(BaseZeroSet):
    """The set {1, k, k^2, ...} for a base k >= 2."""

    _kind = "powers-of-base"
    base: int

    def __post_init__(self) -> None:
        """Check the base."""
        if isinstance(self.base, bool) or not isinstance(self.base, int):
            raise ZeroSetSpecError("powers-of-base needs an integer `base`")
        if self.base < 2:
            raise ZeroSetSpecError(f"powers-of-base needs base >= 2, got {self.base}")

    def contains(self, n: int) -> bool:
        """Return whether n is a member."""
        if n < 1:
            return False
        while n % self.base == 0:
            n //= self.base
        return n == 1

    def params(self) -> dict[str, Any]:
        """Return the JSON parameters."""
        return {"base": self.base}

    @classmethod
    def from_params(cls, params: Mapping[str, Any]) -> PowersOfBase:
        """Create the set from JSON parameters."""
        return cls(params.get("base"))  # type: ignore[arg-type]

    def members_between(self, lo: int, hi: int) -> Iterator[int]:
        """Yield the powers in [lo, hi]."""
        power = 1
        while power <= hi:
            if power >= lo:
                yield power
            power *= self.base
