"""Finite union zero set."""

from __future__ import annotations

import heapq
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from typing import Any

from ..exception import ZeroSetSpecError
from .base_zero_set import BaseZeroSet


@dataclass(frozen=True, init=False)
class Union(BaseZeroSet):
    """A finite union of catalog sets; density zero by the union bound."""

    _kind = "union"
    parts: tuple[BaseZeroSet, ...]

    def __init__(self, parts: Iterable[BaseZeroSet]) -> None:
        """Create the union."""
        parts = tuple(parts)
        if not all(isinstance(part, BaseZeroSet) for part in parts):
            raise ZeroSetSpecError("union parts must be zero sets")
        object.__setattr__(self, "parts", parts)

    def contains(self, n: int) -> bool:
        """Return whether n is a member."""
        return any(part.contains(n) for part in self.parts)

    def params(self) -> dict[str, Any]:
        """Return the JSON parameters."""
        return {"parts": [part.to_json() for part in self.parts]}

    @classmethod
    def from_params(cls, params: Mapping[str, Any]) -> Union:
        """Create the union from JSON parameters."""
        from . import zero_set_from_json

        parts = params.get("parts")
        if not isinstance(parts, list):
            raise ZeroSetSpecError("union needs a `parts` list")
        return cls(zero_set_from_json(part) for part in parts)

    def members_between(self, lo: int, hi: int) -> Iterator[int]:
        """Yield the members of [lo, hi] once each."""
        previous: int | None = None
        for n in heapq.merge(*(part.members_between(lo, hi) for part in self.parts)):
            if n != previous:
                yield n
                previous = n
