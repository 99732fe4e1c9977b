"""Greedy construction of sets with a prescribed representation function."""

from __future__ import annotations

import logging
import math
from collections.abc import Iterator
from dataclasses import dataclass, field
from typing import Any

from .const import DEFAULT_MAX_RADIUS
from .exception import HypothesisViolatedError, SearchExhaustedError
from .forms import BezoutPair, IntSet, LinearForm, bezout_pair, validate_form
from .lemma import AdmissibilityReport, find_admissible_t
from .oracle import RepTable, image, rep_count, rep_table
from .target import Multiplicity, TargetSpec, eval_target

_LOGGER = logging.getLogger(__name__)


class TargetQueue:
    """Round-robin enumeration of the targets b_1, b_2, ...

    Round r visits 0, 1, -1, ..., N, -N and emits n iff f(n) >= r, so each
    n in [-N, N] is emitted min(f(n), K) times over K rounds.
    """

    def __init__(self, spec: TargetSpec, radius: int, rounds: int) -> None:
        """Create the queue."""
        if radius < 0 or rounds < 1:
            raise ValueError(f"need radius >= 0 and rounds >= 1, got {radius}, {rounds}")
        self.spec = spec
        self.radius = radius
        self.rounds = rounds
        self.emitted = 0

    def __iter__(self) -> Iterator[tuple[int, int]]:
        """Yield (round, target) pairs."""
        for round_index in range(1, self.rounds + 1):
            for n in _window_order(self.radius):
                if eval_target(self.spec, n) >= round_index:
                    self.emitted += 1
                    yield round_index, n


def _window_order(radius: int) -> Iterator[int]:
    yield 0
    for n in range(1, radius + 1):
        yield n
        yield -n


def enumerate_targets(spec: TargetSpec, radius: int, rounds: int) -> list[int]:
    """Return the targets of the first `rounds` rounds over [-radius, radius]."""
    return [n for _, n in TargetQueue(spec, radius, rounds)]


@dataclass(frozen=True)
class Step:
    """One iteration of the construction."""

    index: int
    target: int
    round: int
    t: int | None
    added: tuple[int, ...]
    size: int
    report: AdmissibilityReport | None = field(default=None, compare=False)

    @property
    def skipped(self) -> bool:
        """Return whether the target was already satisfied."""
        return self.t is None

    def to_json(self, explain: bool = False) -> dict[str, Any]:
        """Serialize the step, with its admissibility report if explain."""
        data: dict[str, Any] = {
            "i": self.index,
            "b": self.target,
            "round": self.round,
            "t": "skipped" if self.t is None else self.t,
            "size": self.size,
        }
        if explain and self.report is not None:
            data["report"] = self.report.to_json()
        return data


@dataclass(frozen=True)
class Construction:
    """A finished (or partial) run of the greedy iteration."""

    form: LinearForm
    bezout: BezoutPair
    spec: TargetSpec
    radius: int
    rounds: int
    initial: IntSet = field(default_factory=IntSet)
    chain: tuple[Step, ...] = ()
    final_set: IntSet = field(default_factory=IntSet)

    def prefix_sets(self) -> Iterator[IntSet]:
        """Yield A_0, A_1, ... by replaying the chain."""
        current = self.initial
        yield current
        for step in self.chain:
            if step.added:
                current = current.union(step.added)
            yield current


@dataclass(frozen=True)
class Violation:
    """A failed certificate check at n."""

    check: str
    n: int
    count: int
    expected: int | str

    def to_json(self) -> dict[str, Any]:
        """Serialize the violation."""
        return {"check": self.check, "n": self.n, "count": self.count, "expected": self.expected}


@dataclass(frozen=True)
class Certificate:
    """Result of certify over a window."""

    lo: int
    hi: int
    table: RepTable
    violations: tuple[Violation, ...] = ()

    @property
    def clean(self) -> bool:
        """Return whether every check passed."""
        return not self.violations

    def to_json(self) -> dict[str, Any]:
        """Serialize the certificate."""
        return {
            "window": [self.lo, self.hi],
            "clean": self.clean,
            "violations": [v.to_json() for v in self.violations],
            "counts": self.table.to_json()["counts"],
        }


def build(
    form: LinearForm,
    spec: TargetSpec,
    radius: int,
    rounds: int,
    max_radius: int = DEFAULT_MAX_RADIUS,
    initial: IntSet | None = None,
) -> Construction:
    """Run the greedy iteration from A_0 (empty unless initial is given).

    A target b in round r is skipped when R(b) >= r already; otherwise the
    first admissible t extends the set by two elements, raising R(b) by one.
    """
    form = validate_form(form.u1, form.u2)
    bez = bezout_pair(form)
    zero_set = spec.effective_zero_set
    start = initial if initial is not None else IntSet()
    for n in image(start, start, form):
        if zero_set.contains(n):
            raise HypothesisViolatedError(f"F(A_0) value {n} lies in the zero set", n)
    current = start
    chain: list[Step] = []
    _LOGGER.info(
        "Building for F = %sx1 + %sx2 on [-%s, %s] with %s rounds",
        form.u1, form.u2, radius, radius, rounds,
    )
    for index, (round_index, b) in enumerate(TargetQueue(spec, radius, rounds), start=1):
        if rep_count(current, form, b) >= round_index:
            chain.append(Step(index, b, round_index, None, (), len(current)))
            continue
        try:
            t, aug, report = find_admissible_t(current, b, zero_set, form, bez, max_radius)
        except SearchExhaustedError as ex:
            partial = Construction(form, bez, spec, radius, rounds, start, tuple(chain), current)
            raise SearchExhaustedError(max_radius, ex.histogram, index, b, partial) from ex
        current = aug.c_set
        chain.append(Step(index, b, round_index, t, aug.pair, len(current), report))
        _LOGGER.debug("step %s: b = %s, t = %s, |A| = %s", index, b, t, len(current))
    _LOGGER.info("Built a set of %s elements in %s steps", len(current), len(chain))
    return Construction(form, bez, spec, radius, rounds, start, tuple(chain), current)


def default_window(c: Construction) -> tuple[int, int]:
    """Return a window holding all of F(final_set) and the target window."""
    span = (abs(c.form.u1) + abs(c.form.u2)) * c.final_set.max_abs
    half = max(2 * span, c.radius)
    return -half, half


def _expected(value: Multiplicity, rounds: int) -> int:
    return rounds if math.isinf(value) else min(int(value), rounds)


def certify(c: Construction, lo: int | None = None, hi: int | None = None) -> Certificate:
    """Check the construction against f on a window.

    Dominance R(n) <= f(n) and zero set avoidance are checked on the whole
    window. A target served in all its rounds must have R(n) = min(f(n), K)
    exactly, a partially served one at least its last round.
    """
    if lo is None or hi is None:
        lo, hi = default_window(c)
    table = rep_table(c.final_set, c.form, lo, hi)
    zero_set = c.spec.effective_zero_set
    violations: list[Violation] = []
    for n, count in table.items():
        value = eval_target(c.spec, n)
        if zero_set.contains(n):
            violations.append(Violation("zero-set", n, count, 0))
        elif count > value:
            violations.append(Violation("dominance", n, count, int(value)))
    processed: dict[int, int] = {}
    for step in c.chain:
        processed[step.target] = max(processed.get(step.target, 0), step.round)
    for n, last_round in processed.items():
        if not lo <= n <= hi:
            continue
        expected = _expected(eval_target(c.spec, n), c.rounds)
        count = table.counts.get(n, 0)
        if last_round == expected and count != expected:
            violations.append(Violation("target-exact", n, count, expected))
        elif last_round < expected and count < last_round:
            violations.append(Violation("target-exact", n, count, last_round))
    if violations:
        _LOGGER.warning("Certificate on [%s, %s] has %s violations", lo, hi, len(violations))
    return Certificate(lo, hi, table, tuple(sorted(violations, key=lambda v: (v.n, v.check))))
