import itertools
from collections import Counter

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from linear_form_bases.exception import ArithmeticRangeError, WorkCapExceededError
from linear_form_bases.forms import IntSet, LinearForm, MaryForm
from linear_form_bases.oracle import (
    added_pair_counts,
    image,
    is_b_f_g,
    is_basis_for,
    mary_image,
    mary_rep_count,
    mary_rep_table,
    rep_count,
    rep_table,
    representation_counts,
)

FORMS = [LinearForm(2, 3), LinearForm(3, -5), LinearForm(1, 2), LinearForm(1, 1), LinearForm(-4, 7)]

sets = st.lists(st.integers(-30, 30), max_size=9).map(IntSet.of)
forms = st.sampled_from(FORMS)


def test_rep_count_examples():
    assert rep_count(IntSet.of([0, 1, 3]), LinearForm(1, 2), 3) == 2
    assert rep_count(IntSet.of([0, 1, 3]), LinearForm(1, 2), 4) == 0
    assert rep_count(IntSet(), LinearForm(2, 3), 0) == 0


def test_rep_table_example():
    table = rep_table(IntSet.of([-2, 3]), LinearForm(2, 3), -11, 16)
    assert dict(table.counts) == {-10: 1, 0: 1, 5: 1, 15: 1}
    assert table[1] == 0
    assert table.max_count == 1
    assert table.to_json() == {"lo": -11, "hi": 16, "counts": {"-10": 1, "0": 1, "5": 1, "15": 1}}
    with pytest.raises(KeyError):
        table[17]


def test_rep_table_rejects_empty_window():
    with pytest.raises(ValueError):
        rep_table(IntSet.of([1]), LinearForm(2, 3), 5, 4)


def test_image_example():
    A = IntSet.of([-2, 3])
    assert image(A, A, LinearForm(2, 3)).to_list() == [-10, 0, 5, 15]
    assert image(A, IntSet(), LinearForm(2, 3)) == IntSet()


@given(sets, forms)
@settings(max_examples=200)
def test_table_agrees_with_pointwise_count(A, form):
    span = (abs(form.u1) + abs(form.u2)) * A.max_abs
    table = rep_table(A, form, -span, span)
    assert table.total == len(A) ** 2
    for n in range(-span, span + 1):
        assert table[n] == rep_count(A, form, n)


@given(sets, forms)
@settings(max_examples=200)
def test_image_is_support(A, form):
    counts = representation_counts(A, form)
    assert image(A, A, form).to_list() == sorted(counts)


@given(sets, forms, st.integers(-300, 300))
def test_swap_symmetry(A, form, n):
    assert rep_count(A, form, n) == rep_count(A, form.swapped(), n)


def test_mary_examples():
    assert mary_rep_count(IntSet.of([0, 1]), MaryForm((1, 2)), 3) == 1
    assert mary_rep_count(IntSet.of([0, 1]), MaryForm((1, 2)), 4) == 0
    assert mary_rep_count(IntSet.of([0]), MaryForm((1, 2, 4)), 0) == 1
    assert mary_image(IntSet.of([0, 1]), MaryForm((1, 2))).to_list() == [0, 1, 2, 3]


def test_mary_work_cap():
    with pytest.raises(WorkCapExceededError):
        mary_rep_count(IntSet.of(range(10)), MaryForm((1, 2, 4)), 0, bound=100)
    with pytest.raises(WorkCapExceededError):
        mary_rep_table(IntSet.of(range(10)), MaryForm((1, 2, 4)), 0, 10, bound=999)


@given(
    st.lists(st.integers(-12, 12), max_size=6).map(IntSet.of),
    st.sampled_from([(1, 2, 4), (1, -3, 5), (2, 3, -7), (1, 1)]),
)
@settings(max_examples=100)
def test_mary_count_agrees_with_brute_force(A, coefficients):
    form = MaryForm(coefficients)
    span = sum(abs(u) for u in coefficients) * A.max_abs
    table = mary_rep_table(A, form, -span, span)
    expected = Counter(form(*xs) for xs in itertools.product(A, repeat=len(coefficients)))
    for n in range(-span, span + 1):
        assert table[n] == expected[n]
    for n in [*expected, span + 1]:
        assert mary_rep_count(A, form, n) == expected[n]


def test_is_b_f_g_examples():
    assert is_b_f_g(IntSet.of([-2, 3]), LinearForm(2, 3), 1, -20, 20)
    verdict = is_b_f_g(IntSet.of([0, 1, 3]), LinearForm(1, 2), 1, 0, 9)
    assert not verdict
    assert (verdict.witness, verdict.count) == (3, 2)
    assert is_b_f_g(IntSet.of([0, 1, 3]), LinearForm(1, 2), 2, 0, 9)
    assert is_b_f_g(IntSet(), LinearForm(2, 3), 1, -5, 5)


def test_is_b_f_g_mary():
    A = IntSet.of([0, 1, 4, 5, 16, 17, 20, 21])
    assert is_b_f_g(A, MaryForm((1, 2)), 1, 0, 63)
    assert not is_b_f_g(IntSet.of([0, 1, 2]), MaryForm((1, 2)), 1, 0, 6)


def test_is_b_f_g_checks_g_and_cap():
    with pytest.raises(ValueError):
        is_b_f_g(IntSet.of([1]), LinearForm(2, 3), 0, 0, 5)
    with pytest.raises(WorkCapExceededError):
        is_b_f_g(IntSet.of(range(20)), LinearForm(2, 3), 1, 0, 5, bound=100)


def test_is_basis_for():
    assert is_basis_for(IntSet.of([0, 1, 4, 5]), MaryForm((1, 2)), 0, 15)
    verdict = is_basis_for(IntSet.of([0, 1]), LinearForm(1, 2), 0, 4)
    assert not verdict and verdict.witness == 4


def test_overflow_is_reported():
    with pytest.raises(ArithmeticRangeError):
        rep_table(IntSet.of([2**62]), LinearForm(2, 3), 0, 1)
    with pytest.raises(ArithmeticRangeError):
        rep_count(IntSet.of([2**62]), LinearForm(2, 3), 0)


@given(sets, forms, st.integers(-40, 40), st.integers(-40, 40))
@settings(max_examples=200)
def test_added_pair_counts_is_the_table_difference(A, form, x1, x2):
    assume(x1 != x2 and x1 not in A and x2 not in A)
    before = Counter(representation_counts(A, form))
    after = Counter(representation_counts(A.union((x1, x2)), form))
    gained = added_pair_counts(A, (x1, x2), form)
    assert sum(gained.values()) == 4 * len(A) + 4
    assert Counter(gained) == after - before


def test_added_pair_counts_needs_new_elements():
    with pytest.raises(ValueError):
        added_pair_counts(IntSet.of([1, 2]), (2, 5), LinearForm(2, 3))
    with pytest.raises(ValueError):
        added_pair_counts(IntSet(), (4, 4), LinearForm(2, 3))
