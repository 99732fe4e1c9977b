import math

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from linear_form_bases.const import EXCLUDED_PRODUCTS
from linear_form_bases.exception import (
    ArithmeticRangeError,
    BezoutInputError,
    ExcludedProductError,
    FormError,
    InvariantError,
    NonCoprimeError,
    ZeroCoefficientError,
)
from linear_form_bases.forms import (
    IntSet,
    LinearForm,
    bezout_pair,
    extended_gcd,
    seven_coefficients,
    validate_form,
    validate_mary_form,
)


def test_seven_coefficients_examples():
    assert seven_coefficients(LinearForm(1, 2)) == [-1, -2, 2, 4, 3, 6, -3]
    assert seven_coefficients(LinearForm(2, 3)) == [-4, -6, 6, 9, 5, 15, -10]


def test_seven_coefficients_distinct_on_grid():
    for u1 in range(-50, 51):
        for u2 in range(-50, 51):
            if u1 == 0 or u2 == 0 or math.gcd(u1, u2) != 1:
                continue
            coefficients = seven_coefficients(LinearForm(u1, u2), check=False)
            if u1 * u2 in EXCLUDED_PRODUCTS:
                continue
            assert len(set(coefficients)) == 7, (u1, u2)
            assert validate_form(u1, u2).certificate == tuple(coefficients)


@pytest.mark.parametrize("u1,u2", [(1, -2), (-1, 2), (2, -1), (-2, 1)])
def test_seven_coefficients_collide_for_product_minus_two(u1, u2):
    assert len(set(seven_coefficients(LinearForm(u1, u2), check=False))) < 7
    with pytest.raises(InvariantError):
        seven_coefficients(LinearForm(u1, u2))


def test_validate_form_accepts():
    form = validate_form(2, 3)
    assert form.coefficients == (2, 3)
    assert form.is_eligible
    assert form(1, 1) == 5


@pytest.mark.parametrize(
    "u1,u2,error",
    [
        (1, 1, ExcludedProductError),
        (1, -1, ExcludedProductError),
        (-1, 1, ExcludedProductError),
        (1, -2, ExcludedProductError),
        (2, -1, ExcludedProductError),
        (2, 4, NonCoprimeError),
        (0, 3, ZeroCoefficientError),
        (5, 0, ZeroCoefficientError),
    ],
)
def test_validate_form_rejects(u1, u2, error):
    with pytest.raises(error):
        validate_form(u1, u2)


def test_validate_form_oracle_only():
    form = validate_form(1, 1, require_eligible=False)
    assert form == LinearForm(1, 1)
    assert not form.is_eligible
    with pytest.raises(NonCoprimeError):
        validate_form(2, 4, require_eligible=False)


def test_swapped():
    assert validate_form(2, 3).swapped().coefficients == (3, 2)
    assert validate_form(2, 3).swapped().is_eligible
    assert LinearForm(1, 1).swapped() == LinearForm(1, 1)


def test_form_overflow():
    with pytest.raises(ArithmeticRangeError):
        LinearForm(2, 3)(2**62, 0)


def test_validate_mary_form():
    assert validate_mary_form([2, 4, 3]).m == 3
    with pytest.raises(FormError):
        validate_mary_form([1])
    with pytest.raises(NonCoprimeError):
        validate_mary_form([2, 4])
    with pytest.raises(ZeroCoefficientError):
        validate_mary_form([1, 0, 2])


@pytest.mark.parametrize(
    "u1,u2,expected",
    [(2, 3, (1, -1, 1)), (1, 5, (1, 1, 0)), (4, 6, (2, -1, 1)), (3, -5, (1, 2, 1))],
)
def test_extended_gcd_examples(u1, u2, expected):
    assert extended_gcd(u1, u2) == expected


def test_extended_gcd_zero_inputs():
    assert extended_gcd(7, 0) == (7, 1, 0)
    assert extended_gcd(-7, 0) == (7, -1, 0)
    assert extended_gcd(0, 4)[0] == 4
    with pytest.raises(BezoutInputError):
        extended_gcd(0, 0)


@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))
@settings(max_examples=500)
def test_extended_gcd_identity(u1, u2):
    assume(u1 != 0 or u2 != 0)
    g, v1, v2 = extended_gcd(u1, u2)
    assert g == math.gcd(u1, u2)
    assert u1 * v1 + u2 * v2 == g
    if u2 != 0:
        step = abs(u2) // g
        assert 2 * abs(v1) <= step


def test_bezout_pair():
    form = validate_form(3, -5)
    pair = bezout_pair(form)
    assert pair.verify(form)
    assert bezout_pair(validate_form(2, 3)) == bezout_pair(validate_form(2, 3))


def test_int_set():
    values = IntSet.of([3, -1, 3, 0])
    assert values.to_list() == [-1, 0, 3]
    assert 3 in values and 2 not in values
    assert values.max_abs == 3
    assert IntSet().max_abs == 0
    assert values.union([5, 0]).to_list() == [-1, 0, 3, 5]
    with pytest.raises(ValueError):
        IntSet((3, 1))
    with pytest.raises(ArithmeticRangeError):
        IntSet((2**63,))
