"""Perfect squares zero set."""

from __future__ import annotations

import math
from collections.abc import Iterator, Mapping
from dataclasses import dataclass
from typing import Any

from .base_zero_set import BaseZeroSet


@dataclass(frozen=True)
class PerfectSquares(BaseZeroSet):
    """The set {0, 1, 4, 9, ...}."""

    _kind = "perfect-squares"

    def contains(self, n: int) -> bool:
        """Return whether n is a member."""
        return n >= 0 and math.isqrt(n) ** 2 == n

    def params(self) -> dict[str, Any]:
        """Return the JSON parameters."""
        return {}

    @classmethod
    def from_params(cls, params: Mapping[str, Any]) -> PerfectSquares:
        """Create the set from JSON parameters."""
        return cls()

    def members_between(self, lo: int, hi: int) -> Iterator[int]:
        """Yield the squares in [lo, hi]."""
        if hi < 0:
            return
        root = 0 if lo <= 0 else math.isqrt(lo - 1) + 1
        while root * root <= hi:
            yield root * root
            root += 1
