"""Brute-force representation functions and Sidon predicates."""

from __future__ import annotations

import logging
from collections.abc import Iterator, Mapping
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Any

import numpy as np

from .arith import checked, ensure_span
from .const import DEFAULT_WORK_CAP
from .exception import WorkCapExceededError
from .forms import IntSet, LinearForm, MaryForm

_LOGGER = logging.getLogger(__name__)

AnyForm = LinearForm | MaryForm


@dataclass(frozen=True)
class RepTable:
    """Values of R_{A,F} on the closed window [lo, hi].

    Only nonzero counts are stored; lookups outside them return 0.
    """

    lo: int
    hi: int
    counts: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        """Freeze the counts."""
        object.__setattr__(
            self, "counts", MappingProxyType({n: c for n, c in sorted(self.counts.items()) if c})
        )

    def __getitem__(self, n: int) -> int:
        if not self.lo <= n <= self.hi:
            raise KeyError(n)
        return self.counts.get(n, 0)

    def items(self) -> Iterator[tuple[int, int]]:
        """Yield the nonzero (n, count) entries in ascending n."""
        return iter(self.counts.items())

    @property
    def max_count(self) -> int:
        """Return the largest count in the window."""
        return max(self.counts.values(), default=0)

    @property
    def total(self) -> int:
        """Return the sum of all counts."""
        return sum(self.counts.values())

    def to_json(self) -> dict[str, Any]:
        """Serialize with zero counts omitted."""
        return {
            "lo": self.lo,
            "hi": self.hi,
            "counts": {str(n): c for n, c in self.counts.items()},
        }


@dataclass(frozen=True)
class Verdict:
    """Outcome of a predicate over a window, with a witness on failure."""

    holds: bool
    witness: int | None = None
    count: int | None = None

    def __bool__(self) -> bool:
        return self.holds

    def to_json(self) -> dict[str, Any]:
        """Serialize the verdict."""
        return {"holds": self.holds, "witness": self.witness, "count": self.count}


def _as_array(values: IntSet, coefficients: tuple[int, ...]) -> np.ndarray:
    ensure_span(coefficients, values.max_abs)
    return np.fromiter(values, dtype=np.int64, count=len(values))


def _tuple_values(A: IntSet, coefficients: tuple[int, ...], bound: int | None) -> np.ndarray:
    """Return F(a) for every tuple a in A^m, with multiplicity."""
    if bound is not None and len(A) ** len(coefficients) > bound:
        raise WorkCapExceededError(
            f"|A|^m = {len(A)}^{len(coefficients)} exceeds the work cap {bound}"
        )
    elements = _as_array(A, coefficients)
    values = np.zeros(1, dtype=np.int64)
    for u in coefficients:
        values = (values[:, None] + u * elements[None, :]).ravel()
    return values


def _count(values: np.ndarray, lo: int | None = None, hi: int | None = None) -> dict[int, int]:
    if lo is not None and hi is not None:
        values = values[(values >= lo) & (values <= hi)]
    keys, counts = np.unique(values, return_counts=True)
    return {int(n): int(c) for n, c in zip(keys, counts)}


def representation_counts(A: IntSet, form: AnyForm, bound: int | None = None) -> dict[int, int]:
    """Return the full sparse table n -> R_{A,F}(n)."""
    return _count(_tuple_values(A, form.coefficients, bound))


def added_pair_counts(A: IntSet, pair: tuple[int, int], form: LinearForm) -> dict[int, int]:
    """Return R_{A u pair,F} - R_{A,F} for a pair of new elements.

    Only the ordered pairs with a coordinate in `pair` are summed, 4|A| + 4 of them.
    """
    if pair[0] in A or pair[1] in A or pair[0] == pair[1]:
        raise ValueError(f"{pair} is not a pair of new elements")
    ensure_span(form.coefficients, max(A.max_abs, abs(pair[0]), abs(pair[1])))
    elements = np.fromiter(A, dtype=np.int64, count=len(A))
    new = np.array(pair, dtype=np.int64)
    values = np.concatenate(
        (
            (form.u1 * new[:, None] + form.u2 * elements[None, :]).ravel(),
            (form.u1 * elements[:, None] + form.u2 * new[None, :]).ravel(),
            (form.u1 * new[:, None] + form.u2 * new[None, :]).ravel(),
        )
    )
    return _count(values)


def rep_count(A: IntSet, form: LinearForm, n: int) -> int:
    """Count ordered pairs (a1, a2) in A^2 with u1*a1 + u2*a2 = n."""
    checked(n)
    count = 0
    for a1 in A:
        rest = checked(n - checked(form.u1 * a1))
        a2, remainder = divmod(rest, form.u2)
        if remainder == 0 and a2 in A:
            count += 1
    return count


def rep_table(A: IntSet, form: LinearForm, lo: int, hi: int) -> RepTable:
    """Tabulate R_{A,F} on [lo, hi] in one pass over A^2."""
    if lo > hi:
        raise ValueError(f"empty window [{lo}, {hi}]")
    checked(lo)
    checked(hi)
    counts = _count(_tuple_values(A, form.coefficients, None), lo, hi)
    return RepTable(lo, hi, counts)


def image(A: IntSet, B: IntSet, form: LinearForm) -> IntSet:
    """Return F(A, B) = {u1*a + u2*b : a in A, b in B}."""
    if not A or not B:
        return IntSet()
    left = _as_array(A, form.coefficients) * form.u1
    right = _as_array(B, form.coefficients) * form.u2
    values = np.unique((left[:, None] + right[None, :]).ravel())
    return IntSet(tuple(int(v) for v in values))


def mary_image(A: IntSet, form: MaryForm, bound: int = DEFAULT_WORK_CAP) -> IntSet:
    """Return F(A) for an m-ary form."""
    values = np.unique(_tuple_values(A, form.coefficients, bound))
    return IntSet(tuple(int(v) for v in values))


def mary_rep_table(
    A: IntSet, form: MaryForm, lo: int, hi: int, bound: int = DEFAULT_WORK_CAP
) -> RepTable:
    """Tabulate R_{A,F} on [lo, hi] for an m-ary form."""
    if lo > hi:
        raise ValueError(f"empty window [{lo}, {hi}]")
    return RepTable(lo, hi, _count(_tuple_values(A, form.coefficients, bound), lo, hi))


def mary_rep_count(A: IntSet, form: MaryForm, n: int, bound: int = DEFAULT_WORK_CAP) -> int:
    """Count tuples in A^m with F(tuple) = n by nested enumeration."""
    coefficients = form.coefficients
    if len(A) ** len(coefficients) > bound:
        raise WorkCapExceededError(
            f"|A|^m = {len(A)}^{len(coefficients)} exceeds the work cap {bound}"
        )
    if not A:
        return 0
    ensure_span(coefficients, A.max_abs)
    checked(n)
    elements = A.elements
    nonnegative = elements[0] >= 0
    # positive_tail[k]: every coefficient from position k on is positive
    positive_tail = [all(u > 0 for u in coefficients[k:]) for k in range(len(coefficients))]

    def _count_from(position: int, partial: int) -> int:
        if position == len(coefficients):
            return int(partial == n)
        if nonnegative and positive_tail[position] and partial > n:
            return 0
        u = coefficients[position]
        total = 0
        for a in elements:
            value = partial + u * a
            if nonnegative and positive_tail[position] and value > n:
                break
            total += _count_from(position + 1, value)
        return total

    return _count_from(0, 0)


def is_b_f_g(
    A: IntSet,
    form: AnyForm,
    g: int,
    lo: int,
    hi: int,
    bound: int = DEFAULT_WORK_CAP,
) -> Verdict:
    """Check R_{A,F}(n) <= g for every n in [lo, hi]; g = 1 is the Sidon test."""
    if g < 1:
        raise ValueError(f"g must be positive, got {g}")
    if isinstance(form, LinearForm):
        if len(A) ** 2 > bound:
            raise WorkCapExceededError(f"|A|^2 = {len(A) ** 2} exceeds the work cap {bound}")
        table = rep_table(A, form, lo, hi)
    else:
        table = mary_rep_table(A, form, lo, hi, bound)
    for n, count in table.items():
        if count > g:
            _LOGGER.debug("B_F[%s] test failed at %s with %s representations", g, n, count)
            return Verdict(False, n, count)
    return Verdict(True)


def is_basis_for(
    A: IntSet, form: AnyForm, lo: int, hi: int, bound: int = DEFAULT_WORK_CAP
) -> Verdict:
    """Check R_{A,F}(n) >= 1 for every n in [lo, hi]."""
    if isinstance(form, LinearForm):
        table = rep_table(A, form, lo, hi)
    else:
        table = mary_rep_table(A, form, lo, hi, bound)
    for n in range(lo, hi + 1):
        if n not in table.counts:
            return Verdict(False, n, 0)
    return Verdict(True)
