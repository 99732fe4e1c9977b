"""Module defining target representation functions."""

from __future__ import annotations

import math
from collections.abc import Mapping
from dataclasses import dataclass, field
from types import MappingProxyType

from .const import INF
from .exception import TargetSpecError
from .zeroset import BaseZeroSet, EmptySet, FiniteList, Union

# a target value is a nonnegative int or INF
Multiplicity = int | float


def _check_value(value: object, where: str) -> Multiplicity:
    if value == INF and isinstance(value, float):
        return INF
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise TargetSpecError(f"{where} must be a nonnegative integer or inf, got {value!r}")
    return value


@dataclass(frozen=True)
class TargetSpec:
    """Finitely described f: Z -> N0 u {inf}.

    f(n) is overrides[n] if present, else 0 on the zero set, else default.
    """

    default: Multiplicity = 1
    overrides: Mapping[int, Multiplicity] = field(default_factory=dict)
    zero_set: BaseZeroSet = field(default_factory=EmptySet)

    def __post_init__(self) -> None:
        """Check consistency and freeze the overrides."""
        if not isinstance(self.zero_set, BaseZeroSet):
            raise TargetSpecError("zero_set must be a zero set")
        default = _check_value(self.default, "default")
        if default == 0:
            raise TargetSpecError(
                "default 0 makes f^-1(0) co-finite, which has positive density"
            )
        overrides: dict[int, Multiplicity] = {}
        for n, value in self.overrides.items():
            value = _check_value(value, f"override for {n}")
            if value > 0 and self.zero_set.contains(n):
                raise TargetSpecError(
                    f"override f({n}) = {value} contradicts zero set membership"
                )
            overrides[n] = value
        object.__setattr__(self, "overrides", MappingProxyType(dict(sorted(overrides.items()))))

    @classmethod
    def constant(cls, value: Multiplicity) -> TargetSpec:
        """Return the constant function f = value."""
        return cls(default=value)

    @property
    def effective_zero_set(self) -> BaseZeroSet:
        """Return W = f^-1(0), overrides of 0 included."""
        zeros = [n for n, value in self.overrides.items() if value == 0]
        if not zeros:
            return self.zero_set
        if isinstance(self.zero_set, EmptySet):
            return FiniteList(zeros)
        return Union((self.zero_set, FiniteList(zeros)))

    def __call__(self, n: int) -> Multiplicity:
        return eval_target(self, n)

    def __hash__(self) -> int:
        return hash((self.default, tuple(self.overrides.items()), self.zero_set))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TargetSpec):
            return NotImplemented
        return (
            self.default == other.default
            and dict(self.overrides) == dict(other.overrides)
            and self.zero_set == other.zero_set
        )


def eval_target(spec: TargetSpec, n: int) -> Multiplicity:
    """Evaluate f(n)."""
    if n in spec.overrides:
        return spec.overrides[n]
    if spec.zero_set.contains(n):
        return 0
    return spec.default


def format_multiplicity(value: Multiplicity) -> int | str:
    """Return the JSON form of a target value."""
    return "inf" if math.isinf(value) else int(value)
