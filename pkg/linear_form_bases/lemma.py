"""Fundamental lemma engine: two-element augmentations and the t search."""

from __future__ import annotations

import logging
from collections import Counter
from collections.abc import Iterator, Mapping
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any

from .arith import checked, checked_add, checked_mul
from .const import DEFAULT_MAX_RADIUS
from .exception import HypothesisViolatedError, InvariantError, SearchExhaustedError
from .forms import BezoutPair, IntSet, LinearForm
from .oracle import added_pair_counts, representation_counts
from .zeroset import BaseZeroSet

_LOGGER = logging.getLogger(__name__)


class RejectionCase(str, Enum):
    """Conclusion case that fails for a rejected t."""

    degenerate_pair = "degenerate-pair"
    target_count = "target-count"
    preserved_count = "preserved-count"
    new_value_count = "new-value-count"
    zero_set_hit = "zero-set-hit"


@dataclass(frozen=True)
class Augmentation:
    """Candidate C_t = A' u B_t with B_t = {b*v1 + u2*t, b*v2 - u1*t}."""

    t: int
    b: int
    pair: tuple[int, int]
    c_set: IntSet


@dataclass(frozen=True)
class AdmissibilityReport:
    """Verdict of check_admissible."""

    t: int
    admissible: bool
    case: RejectionCase | None = None
    witness: int | None = None
    stats: Mapping[str, int] = field(default_factory=dict)

    @property
    def verdict(self) -> str:
        """Return `admissible` or `rejected`."""
        return "admissible" if self.admissible else "rejected"

    def to_json(self) -> dict[str, Any]:
        """Serialize for the explain output."""
        return {
            "t": self.t,
            "verdict": self.verdict,
            "case": self.case.value if self.case else None,
            "witness": self.witness,
            "stats": dict(self.stats),
        }


def make_augmentation(
    A: IntSet, b: int, t: int, form: LinearForm, bez: BezoutPair
) -> Augmentation:
    """Build B_t and C_t; F(b*v1 + u2*t, b*v2 - u1*t) = b by construction."""
    x1 = checked_add(checked_mul(b, bez.v1), checked_mul(form.u2, t))
    x2 = checked_add(checked_mul(b, bez.v2), -checked_mul(form.u1, t))
    if form(x1, x2) != b:
        raise InvariantError(
            f"F({x1}, {x2}) != {b}; is {bez} a Bezout pair of ({form.u1}, {form.u2})?"
        )
    return Augmentation(t, b, (x1, x2), A.union((x1, x2)))


def _check_hypothesis(A_counts: Mapping[int, int], b: int, zero_set: BaseZeroSet) -> None:
    if zero_set.contains(b):
        raise HypothesisViolatedError(f"target {b} lies in the zero set", b)
    for n in A_counts:
        if zero_set.contains(n):
            raise HypothesisViolatedError(f"F(A') value {n} lies in the zero set", n)


def _judge(
    A: IntSet,
    A_counts: Mapping[int, int],
    aug: Augmentation,
    zero_set: BaseZeroSet,
    form: LinearForm,
) -> AdmissibilityReport:
    """Verify the conclusion cases for C_t against precomputed R_{A',F}.

    R can only change on values gained from pairs touching B_t, so only those
    are inspected.
    """
    b = aug.b
    x1, x2 = aug.pair
    if x1 == x2 or x1 in A or x2 in A:
        witness = x1 if x1 == x2 or x1 in A else x2
        return AdmissibilityReport(aug.t, False, RejectionCase.degenerate_pair, witness)

    gained = added_pair_counts(A, aug.pair, form)
    checked_values = 1
    if gained.get(b, 0) != 1:
        return AdmissibilityReport(
            aug.t, False, RejectionCase.target_count, b, {"values_checked": checked_values}
        )
    changed = next((n for n in gained if n != b and n in A_counts), None)
    if changed is not None:
        return AdmissibilityReport(
            aug.t, False, RejectionCase.preserved_count, changed,
            {"values_checked": checked_values + 1},
        )
    new_values = 0
    for n, count in gained.items():
        if n == b:
            continue
        checked_values += 1
        new_values += 1
        if zero_set.contains(n):
            return AdmissibilityReport(
                aug.t, False, RejectionCase.zero_set_hit, n,
                {"values_checked": checked_values},
            )
        if count != 1:
            return AdmissibilityReport(
                aug.t, False, RejectionCase.new_value_count, n,
                {"values_checked": checked_values},
            )
    image_size = len(A_counts) + new_values + (b not in A_counts)
    return AdmissibilityReport(
        aug.t, True, stats={"values_checked": checked_values, "image_size": image_size}
    )


def _confirm(A: IntSet, A_counts: Mapping[int, int], aug: Augmentation, form: LinearForm) -> None:
    """Recount R_{C_t,F} in full and compare it with R_{A',F} plus the gained values."""
    expected = Counter(A_counts) + Counter(added_pair_counts(A, aug.pair, form))
    if representation_counts(aug.c_set, form) != dict(expected):
        raise InvariantError(f"t = {aug.t}: full recount of R_(C_t,F) disagrees with the update")


def check_admissible(
    A: IntSet,
    b: int,
    zero_set: BaseZeroSet,
    aug: Augmentation,
    form: LinearForm,
) -> AdmissibilityReport:
    """Decide whether C_t satisfies the fundamental lemma's conclusion.

    Admissible iff the pair is two new elements, R at b grows by exactly one,
    R is unchanged on F(A') minus b, every new value is represented once and
    no value of F(C_t) lies in the zero set. Values of F(A') are outside the
    zero set by hypothesis, which is re-checked here.
    """
    A_counts = representation_counts(A, form)
    _check_hypothesis(A_counts, b, zero_set)
    return _judge(A, A_counts, aug, zero_set, form)


def scan_order(max_radius: int) -> Iterator[int]:
    """Yield 0, 1, -1, 2, -2, ... up to |t| <= max_radius."""
    yield 0
    for t in range(1, max_radius + 1):
        yield t
        yield -t


def find_admissible_t(
    A: IntSet,
    b: int,
    zero_set: BaseZeroSet,
    form: LinearForm,
    bez: BezoutPair,
    max_radius: int = DEFAULT_MAX_RADIUS,
) -> tuple[int, Augmentation, AdmissibilityReport]:
    """Return the first admissible t in scan order."""
    checked(b)
    A_counts = representation_counts(A, form)
    _check_hypothesis(A_counts, b, zero_set)
    histogram: Counter[str] = Counter()
    for t in scan_order(max_radius):
        aug = make_augmentation(A, b, t, form, bez)
        report = _judge(A, A_counts, aug, zero_set, form)
        if report.admissible:
            _confirm(A, A_counts, aug, form)
            _LOGGER.debug(
                "b = %s: admissible t = %s after %s rejections", b, t, sum(histogram.values())
            )
            return t, aug, report
        assert report.case is not None
        histogram[report.case.value] += 1
    _LOGGER.warning("b = %s: no admissible t with |t| <= %s", b, max_radius)
    raise SearchExhaustedError(max_radius, histogram)


def collision_coefficients(form: LinearForm) -> tuple[int, int, int, int]:
    """Return the t-coefficients of the four F(A', B_t) / F(B_t, A') collision equations."""
    u1, u2 = form.u1, form.u2
    return (
        checked(u2 * (u2 - u1)),
        checked(u1 * u1 + u2 * u2),
        checked(-2 * u1 * u2),
        checked(u1 * (u1 - u2)),
    )


def admissible_fraction(
    A: IntSet,
    b: int,
    zero_set: BaseZeroSet,
    form: LinearForm,
    bez: BezoutPair,
    lo: int,
    hi: int,
) -> Fraction:
    """Return the fraction of t in [lo, hi] that are admissible."""
    if lo > hi:
        raise ValueError(f"empty window [{lo}, {hi}]")
    A_counts = representation_counts(A, form)
    _check_hypothesis(A_counts, b, zero_set)
    admissible = sum(
        _judge(A, A_counts, make_augmentation(A, b, t, form, bez), zero_set, form).admissible
        for t in range(lo, hi + 1)
    )
    return Fraction(admissible, hi - lo + 1)
