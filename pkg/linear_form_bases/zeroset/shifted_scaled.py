"""Affine image zero set."""

from __future__ import annotations

from collections.abc import Iterator, Mapping
from dataclasses import dataclass
from typing import Any

from ..exception import ZeroSetSpecError
from .base_zero_set import BaseZeroSet


@dataclass(frozen=True)
class ShiftedScaled(BaseZeroSet):
    """The set {scale*x + shift : x in inner}, scale != 0.

    Dilations and translations keep density zero.
    """

    _kind = "shifted-scaled"
    scale: int
    shift: int
    inner: BaseZeroSet

    def __post_init__(self) -> None:
        """Check the parameters."""
        for name in ("scale", "shift"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise ZeroSetSpecError(f"shifted-scaled needs an integer `{name}`")
        if self.scale == 0:
            raise ZeroSetSpecError("shifted-scaled needs a nonzero `scale`")
        if not isinstance(self.inner, BaseZeroSet):
            raise ZeroSetSpecError("shifted-scaled needs an `inner` zero set")

    def contains(self, n: int) -> bool:
        """Return whether n is a member."""
        offset = n - self.shift
        return offset % self.scale == 0 and self.inner.contains(offset // self.scale)

    def params(self) -> dict[str, Any]:
        """Return the JSON parameters."""
        return {"scale": self.scale, "shift": self.shift, "inner": self.inner.to_json()}

    @classmethod
    def from_params(cls, params: Mapping[str, Any]) -> ShiftedScaled:
        """Create the set from JSON parameters."""
        from . import zero_set_from_json

        inner = params.get("inner")
        if not isinstance(inner, Mapping):
            raise ZeroSetSpecError("shifted-scaled needs an `inner` object")
        return cls(params.get("scale"), params.get("shift", 0), zero_set_from_json(inner))  # type: ignore[arg-type]

    def members_between(self, lo: int, hi: int) -> Iterator[int]:
        """Yield the members of [lo, hi]."""
        if lo > hi:
            return iter(())
        if self.scale > 0:
            x_lo = -((self.shift - lo) // self.scale)
            x_hi = (hi - self.shift) // self.scale
            return (self.scale * x + self.shift for x in self.inner.members_between(x_lo, x_hi))
        step = -self.scale
        x_lo = -((hi - self.shift) // step)
        x_hi = (self.shift - lo) // step
        members = [self.scale * x + self.shift for x in self.inner.members_between(x_lo, x_hi)]
        return reversed(members)
