"""Digit-restricted Sidon bases for N0 under x1 + g*x2 + ... + g^(m-1)*xm."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .arith import checked, checked_pow
from .exception import GadicParamError, InvariantError
from .forms import IntSet, MaryForm


@dataclass(frozen=True)
class GadicParams:
    """Digit base g >= 2 and number of variables m >= 2."""

    g: int
    m: int

    def __post_init__(self) -> None:
        """Check the parameters."""
        if self.g < 2:
            raise GadicParamError(f"g must be >= 2, got {self.g}")
        if self.m < 2:
            raise GadicParamError(f"m must be >= 2, got {self.m}")

    @property
    def block(self) -> int:
        """Return g^m, the base of the member digits."""
        return checked_pow(self.g, self.m)


def gadic_form(p: GadicParams) -> MaryForm:
    """Return the form with coefficients 1, g, ..., g^(m-1)."""
    return MaryForm(checked_pow(p.g, k) for k in range(p.m))


def _check_nonnegative(value: int) -> None:
    if value < 0:
        raise GadicParamError(f"expected a nonnegative integer, got {value}")
    checked(value)


def gadic_member(p: GadicParams, a: int) -> bool:
    """Return whether every base g^m digit of a is below g."""
    _check_nonnegative(a)
    block = p.block
    while a:
        a, digit = divmod(a, block)
        if digit >= p.g:
            return False
    return True


def gadic_set(p: GadicParams, limit: int) -> IntSet:
    """Return the members <= limit, generated from their digits."""
    _check_nonnegative(limit)
    block = p.block
    weights = [1]
    while weights[-1] * block <= limit:
        weights.append(weights[-1] * block)
    members = (
        sum(d * w for d, w in zip(digits, weights))
        for digits in itertools.product(range(p.g), repeat=len(weights))
    )
    return IntSet.of(a for a in members if a <= limit)


def gadic_decode(p: GadicParams, n: int) -> tuple[int, ...]:
    """Return the unique (a1, ..., am) in A^m with F(a1, ..., am) = n.

    Base g digit j = q*m + r of n becomes base g^m digit q of a_{r+1}.
    """
    _check_nonnegative(n)
    parts = [0] * p.m
    block = p.block
    scales = [1] * p.m
    rest = n
    position = 0
    while rest:
        rest, digit = divmod(rest, p.g)
        r = position % p.m
        parts[r] += digit * scales[r]
        scales[r] *= block
        position += 1
    form = gadic_form(p)
    if form(*parts) != n:
        raise InvariantError(f"decoding {n} gave {parts}, which does not reconstruct it")
    return tuple(parts)


def gadic_decode_table(p: GadicParams, lo: int, hi: int) -> dict[int, tuple[int, ...]]:
    """Decode every n in [lo, hi]."""
    if lo > hi:
        raise GadicParamError(f"empty window [{lo}, {hi}]")
    return {n: gadic_decode(p, n) for n in range(lo, hi + 1)}
