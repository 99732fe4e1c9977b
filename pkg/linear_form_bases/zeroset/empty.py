"""Empty zero set."""

from __future__ import annotations

from collections.abc import Iterator, Mapping
from dataclasses import dataclass
from typing import Any

from .base_zero_set import BaseZeroSet


@dataclass(frozen=True)
class EmptySet(BaseZeroSet):
    """The empty set."""

    _kind = "empty"

    def contains(self, n: int) -> bool:
        """Return whether n is a member."""
        return False

    def params(self) -> dict[str, Any]:
        """Return the JSON parameters."""
        return {}

    @classmethod
    def from_params(cls, params: Mapping[str, Any]) -> EmptySet:
        """Create the set from JSON parameters."""
        return cls()

    def members_between(self, lo: int, hi: int) -> Iterator[int]:
        """Yield nothing."""
        return iter(())
