"""Module defining a base zero set class."""

from __future__ import annotations

from abc import ABC, ABCMeta, abstractmethod
from collections.abc import Iterator, Mapping
from typing import Any


class _classproperty(property):
    def __get__(self, owner_self: object, owner_cls: ABCMeta) -> str:  # type: ignore
        ret: str = self.fget(owner_cls)  # type: ignore
        return ret


class BaseZeroSet(ABC):
    """Base class of the decidable, density zero sets used as f^-1(0).

    Subclasses are frozen dataclasses, so every catalog value is immutable
    and hashable.
    """

    _kind: str | None = None

    @_classproperty
    def kind(self) -> str | None:
        """Return the catalog name of the set shape."""
        return self._kind

    @abstractmethod
    def contains(self, n: int) -> bool:
        """Return whether n is a member."""

    @abstractmethod
    def params(self) -> dict[str, Any]:
        """Return the JSON parameters of this set, without the kind."""

    @classmethod
    @abstractmethod
    def from_params(cls, params: Mapping[str, Any]) -> BaseZeroSet:
        """Create a set from its JSON parameters."""

    def members_between(self, lo: int, hi: int) -> Iterator[int]:
        """Yield the members of [lo, hi] in ascending order."""
        for n in range(lo, hi + 1):
            if self.contains(n):
                yield n

    def count_between(self, lo: int, hi: int) -> int:
        """Count the members of [lo, hi]."""
        if lo > hi:
            return 0
        return sum(1 for _ in self.members_between(lo, hi))

    def to_json(self) -> dict[str, Any]:
        """Serialize to a JSON object."""
        return {"kind": self.kind, **self.params()}

    def __contains__(self, n: object) -> bool:
        return isinstance(n, int) and self.contains(n)
