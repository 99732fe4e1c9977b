"""Module defining the zero set catalog."""

import inspect
import sys
from collections.abc import Mapping
from typing import Any

from ..exception import ZeroSetSpecError
from .base_zero_set import BaseZeroSet
from .empty import EmptySet
from .finite_list import FiniteList
from .perfect_squares import PerfectSquares
from .powers_of_base import PowersOfBase
from .shifted_scaled import ShiftedScaled
from .union import Union

KIND2CLASS: dict[str, type[BaseZeroSet]] = {}
for name, obj in inspect.getmembers(sys.modules[__name__]):
    if inspect.isclass(obj) and issubclass(obj, BaseZeroSet) and obj.kind:
        KIND2CLASS[obj.kind] = obj


def zero_set_from_json(data: Mapping[str, Any]) -> BaseZeroSet:
    """Create a zero set from its JSON object."""
    if not isinstance(data, Mapping):
        raise ZeroSetSpecError("zero set must be a JSON object")
    kind = data.get("kind")
    zero_set_class = KIND2CLASS.get(kind)  # type: ignore[arg-type]
    if zero_set_class is None:
        raise ZeroSetSpecError(
            f"unknown zero set kind `{kind}`; known: {sorted(KIND2CLASS)}"
        )
    return zero_set_class.from_params(data)


def parse_zero_set(text: str) -> BaseZeroSet:
    """Parse the compact form: empty, squares, powers:K, finite:a,b,c."""
    name, _, argument = text.strip().partition(":")
    try:
        if name == "empty" and not argument:
            return EmptySet()
        if name == "squares" and not argument:
            return PerfectSquares()
        if name == "powers":
            return PowersOfBase(int(argument))
        if name == "finite":
            return FiniteList(int(v) for v in argument.split(",") if v.strip())
    except ValueError as ex:
        raise ZeroSetSpecError(f"malformed zero set `{text}`: {ex}") from ex
    raise ZeroSetSpecError(f"malformed zero set `{text}`")


__all__ = [
    "BaseZeroSet",
    "EmptySet",
    "FiniteList",
    "KIND2CLASS",
    "PerfectSquares",
    "PowersOfBase",
    "ShiftedScaled",
    "Union",
    "parse_zero_set",
    "zero_set_from_json",
]
