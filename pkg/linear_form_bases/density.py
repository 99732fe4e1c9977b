"""Counting functions and empirical density profiles."""

from __future__ import annotations

import bisect
import csv
import io
import logging
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .forms import IntSet
from .zeroset import BaseZeroSet, Union

_LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class DensityProfile:
    """Exact values of S(-x, x) / (2x + 1) at increasing radii x."""

    radii: tuple[int, ...]
    counts: tuple[int, ...]
    ratios: tuple[Fraction, ...]

    @property
    def decreasing(self) -> bool:
        """Return whether the ratios never increase."""
        return all(a >= b for a, b in zip(self.ratios, self.ratios[1:]))

    def to_json(self) -> dict[str, Any]:
        """Serialize with ratios as floats and exact fractions."""
        return {
            "radii": list(self.radii),
            "counts": list(self.counts),
            "ratios": [float(r) for r in self.ratios],
            "exact": [f"{r.numerator}/{r.denominator}" for r in self.ratios],
            "decreasing": self.decreasing,
        }

    def to_csv(self) -> str:
        """Serialize as CSV rows radius,count,ratio."""
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["radius", "count", "ratio"])
        for radius, count, ratio in zip(self.radii, self.counts, self.ratios):
            writer.writerow([radius, count, repr(float(ratio))])
        return buffer.getvalue()


def counting_function(S: IntSet | BaseZeroSet, x1: int, x2: int) -> int:
    """Count the members of S in [x1, x2]."""
    if x1 > x2:
        raise ValueError(f"empty interval [{x1}, {x2}]")
    if isinstance(S, IntSet):
        return bisect.bisect_right(S.elements, x2) - bisect.bisect_left(S.elements, x1)
    return S.count_between(x1, x2)


def density_profile(S: IntSet | BaseZeroSet, radii: Sequence[int]) -> DensityProfile:
    """Profile S at each radius."""
    radii = tuple(radii)
    if any(x <= 0 for x in radii) or any(a >= b for a, b in zip(radii, radii[1:])):
        raise ValueError(f"radii must be positive and strictly increasing, got {radii}")
    counts = tuple(counting_function(S, -x, x) for x in radii)
    ratios = tuple(Fraction(count, 2 * x + 1) for x, count in zip(radii, counts))
    profile = DensityProfile(radii, counts, ratios)
    if len(radii) > 1 and not profile.decreasing:
        _LOGGER.warning("density profile does not decrease: %s", [float(r) for r in ratios])
    return profile


def union_bound_profile(
    parts: Sequence[BaseZeroSet], radii: Sequence[int]
) -> list[tuple[int, int, int]]:
    """Return (radius, union count, sum of part counts) per radius.

    The union count never exceeds the sum, which bounds the upper density
    of a finite union by the sum of the parts' densities.
    """
    union = Union(parts)
    rows = []
    for x in radii:
        union_count = counting_function(union, -x, x)
        part_sum = sum(counting_function(part, -x, x) for part in parts)
        rows.append((x, union_count, part_sum))
    return rows
