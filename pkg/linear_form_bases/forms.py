"""Module defining linear forms, Bezout data and finite integer sets."""

from __future__ import annotations

import bisect
import logging
import math
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from functools import reduce

from .arith import checked, checked_add, checked_mul
from .const import EXCLUDED_PRODUCTS
from .exception import (
    BezoutInputError,
    ExcludedProductError,
    FormError,
    InvariantError,
    NonCoprimeError,
    ZeroCoefficientError,
)

_LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class LinearForm:
    """Binary linear form F(x1, x2) = u1*x1 + u2*x2.

    Build through validate_form; a directly constructed form carries no
    certificate and is only fit for the oracle.
    """

    u1: int
    u2: int
    certificate: tuple[int, ...] = field(default=(), compare=False, repr=False)

    @property
    def coefficients(self) -> tuple[int, ...]:
        """Return (u1, u2)."""
        return (self.u1, self.u2)

    @property
    def is_eligible(self) -> bool:
        """Return whether the fundamental lemma applies to this form."""
        return bool(self.certificate)

    def __call__(self, x1: int, x2: int) -> int:
        """Evaluate the form with overflow check."""
        return checked_add(checked_mul(self.u1, x1), checked_mul(self.u2, x2))

    def swapped(self) -> LinearForm:
        """Return the form with its coefficients exchanged."""
        if self.is_eligible:
            return validate_form(self.u2, self.u1)
        return LinearForm(self.u2, self.u1)


@dataclass(frozen=True, init=False)
class MaryForm:
    """m-ary linear form u1*x1 + ... + um*xm, m >= 2."""

    coefficients: tuple[int, ...]

    def __init__(self, coefficients: Iterable[int]) -> None:
        """Create the form."""
        object.__setattr__(self, "coefficients", tuple(coefficients))

    @property
    def m(self) -> int:
        """Return the number of variables."""
        return len(self.coefficients)

    def __call__(self, *xs: int) -> int:
        """Evaluate the form with overflow check."""
        if len(xs) != self.m:
            raise ValueError(f"expected {self.m} arguments, got {len(xs)}")
        return checked_add(*(checked_mul(u, x) for u, x in zip(self.coefficients, xs)))


@dataclass(frozen=True)
class BezoutPair:
    """Integers (v1, v2) with u1*v1 + u2*v2 = 1."""

    v1: int
    v2: int

    def verify(self, form: LinearForm) -> bool:
        """Return whether the pair satisfies the Bezout identity for form."""
        return form(self.v1, self.v2) == 1


@dataclass(frozen=True)
class IntSet:
    """Finite, strictly increasing sequence of 64-bit integers."""

    elements: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        """Check ordering and range."""
        for element in self.elements:
            checked(element)
        for left, right in zip(self.elements, self.elements[1:]):
            if left >= right:
                raise ValueError("IntSet elements must be strictly increasing")

    @classmethod
    def of(cls, values: Iterable[int]) -> IntSet:
        """Create a set from any iterable, sorting and dropping duplicates."""
        return cls(tuple(sorted(set(values))))

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, value: object) -> bool:
        if not isinstance(value, int):
            return False
        i = bisect.bisect_left(self.elements, value)
        return i < len(self.elements) and self.elements[i] == value

    def union(self, other: Iterable[int]) -> IntSet:
        """Return the union with other."""
        return IntSet.of((*self.elements, *other))

    @property
    def max_abs(self) -> int:
        """Return the largest absolute value, 0 for the empty set."""
        if not self.elements:
            return 0
        return max(-self.elements[0], self.elements[-1])

    def to_list(self) -> list[int]:
        """Return the elements as a list."""
        return list(self.elements)


def seven_coefficients(form: LinearForm, check: bool = True) -> list[int]:
    """Return the t-coefficients of the cross and pure values of F(B_t).

    The first four occur in F(A', B_t) and F(B_t, A'), the last three in
    F(B_t) minus b. For eligible forms all seven are pairwise distinct.
    """
    u1, u2 = form.u1, form.u2
    coefficients = [
        checked(-u1 * u1),
        checked(-u1 * u2),
        checked(u1 * u2),
        checked(u2 * u2),
        checked(u2 * u2 - u1 * u1),
        checked(u2 * (u1 + u2)),
        checked(-u1 * (u1 + u2)),
    ]
    if check and len(set(coefficients)) != 7:
        raise InvariantError(
            f"coefficients of ({u1}, {u2}) are not pairwise distinct: {coefficients}"
        )
    return coefficients


def validate_form(u1: int, u2: int, require_eligible: bool = True) -> LinearForm:
    """Validate coefficients and return a certified binary form."""
    if u1 == 0 or u2 == 0:
        raise ZeroCoefficientError(f"coefficients must be nonzero, got ({u1}, {u2})")
    checked(u1)
    checked(u2)
    if math.gcd(u1, u2) != 1:
        raise NonCoprimeError(
            f"coefficients must be relatively prime, gcd({u1}, {u2}) = {math.gcd(u1, u2)}"
        )
    product = checked(u1 * u2)
    if product in EXCLUDED_PRODUCTS:
        if require_eligible:
            raise ExcludedProductError(
                f"u1*u2 = {product} is excluded (must not be 1, -1 or -2)"
            )
        return LinearForm(u1, u2)
    return LinearForm(u1, u2, tuple(seven_coefficients(LinearForm(u1, u2))))


def validate_mary_form(coefficients: Iterable[int]) -> MaryForm:
    """Validate an m-ary form: m >= 2, nonzero, relatively prime."""
    coefficients = tuple(coefficients)
    if len(coefficients) < 2:
        raise FormError(f"an m-ary form needs m >= 2 coefficients, got {len(coefficients)}")
    if any(u == 0 for u in coefficients):
        raise ZeroCoefficientError(f"coefficients must be nonzero, got {coefficients}")
    for u in coefficients:
        checked(u)
    if reduce(math.gcd, coefficients) != 1:
        raise NonCoprimeError(f"coefficients must be relatively prime, got {coefficients}")
    return MaryForm(coefficients)


def _euclid(a: int, b: int) -> tuple[int, int, int]:
    """Run the extended Euclidean algorithm on nonnegative inputs."""
    r0, r1 = a, b
    s0, s1 = 1, 0
    t0, t1 = 0, 1
    while r1 != 0:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    return r0, s0, t0


def extended_gcd(u1: int, u2: int) -> tuple[int, int, int]:
    """Return (g, v1, v2) with g = gcd(u1, u2) > 0 and u1*v1 + u2*v2 = g.

    The pair is canonical: |v1| is minimal among all solutions, ties go to
    v1 >= 0, and v2 = 0 when u2 = 0.
    """
    if u1 == 0 and u2 == 0:
        raise BezoutInputError("gcd(0, 0) is undefined")
    checked(u1)
    checked(u2)
    g, s, _ = _euclid(abs(u1), abs(u2))
    v1 = s if u1 >= 0 else -s
    if u2 == 0:
        return g, v1, 0
    step = abs(u2) // g
    residue = v1 % step
    v1 = residue if residue <= step - residue else residue - step
    v2, remainder = divmod(g - u1 * v1, u2)
    if remainder != 0:
        raise InvariantError(f"no Bezout partner for v1 = {v1} in ({u1}, {u2})")
    return g, checked(v1), checked(v2)


def bezout_pair(form: LinearForm) -> BezoutPair:
    """Return the canonical Bezout pair of a form."""
    g, v1, v2 = extended_gcd(form.u1, form.u2)
    if g != 1:
        raise NonCoprimeError(f"gcd({form.u1}, {form.u2}) = {g}, no Bezout pair")
    pair = BezoutPair(v1, v2)
    _LOGGER.debug("Bezout pair of (%s, %s): %s", form.u1, form.u2, pair)
    return pair
