"""Finite list zero set."""

from __future__ import annotations

import bisect
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from typing import Any

from ..exception import ZeroSetSpecError
from .base_zero_set import BaseZeroSet


@dataclass(frozen=True, init=False)
class FiniteList(BaseZeroSet):
    """A user supplied finite set of integers."""

    _kind = "finite-list"
    values: tuple[int, ...]

    def __init__(self, values: Iterable[int]) -> None:
        """Create the set, sorting and dropping duplicates."""
        object.__setattr__(self, "values", tuple(sorted(set(values))))

    def contains(self, n: int) -> bool:
        """Return whether n is a member."""
        i = bisect.bisect_left(self.values, n)
        return i < len(self.values) and self.values[i] == n

    def params(self) -> dict[str, Any]:
        """Return the JSON parameters."""
        return {"values": list(self.values)}

    @classmethod
    def from_params(cls, params: Mapping[str, Any]) -> FiniteList:
        """Create the set from JSON parameters."""
        values = params.get("values")
        if not isinstance(values, list) or not all(
            isinstance(v, int) and not isinstance(v, bool) for v in values
        ):
            raise ZeroSetSpecError("finite-list needs an integer list `values`")
        return cls(values)

    def members_between(self, lo: int, hi: int) -> Iterator[int]:
        """Yield the members of [lo, hi]."""
        start = bisect.bisect_left(self.values, lo)
        stop = bisect.bisect_right(self.values, hi)
        return iter(self.values[start:stop])
