from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from app.errors import ArithmeticOverflowError, InvalidArgumentError, UnsupportedOperationError
from app.models.ordered import Comparison, OrderedIndex
from app.services import ordered_service

INTEGERS = OrderedIndex.integers()
RATIONALS = OrderedIndex.rationals()
LEX2 = OrderedIndex.lex(2)

small = st.integers(min_value=-50, max_value=50)
fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
pairs = st.tuples(small, small)


@pytest.mark.unit
@pytest.mark.parametrize(
    ("text", "expected"),
    [
        ("Z", OrderedIndex.integers()),
        ("Q", OrderedIndex.rationals()),
        ("Z^3", OrderedIndex.lex(3)),
        ("chain(4)", OrderedIndex.chain(4)),
        ("1", OrderedIndex.trivial()),
        (" Z ", OrderedIndex.integers()),
    ],
)
def test_parse_index(text: str, expected: OrderedIndex) -> None:
    assert ordered_service.parse_index(text) == expected


@pytest.mark.unit
@pytest.mark.parametrize("text", ["", "R", "chain(0)", "Z^", "chain(-1)"])
def test_parse_index_rejects_unknown(text: str) -> None:
    with pytest.raises(InvalidArgumentError):
        ordered_service.parse_index(text)


@pytest.mark.unit
def test_lex_compares_leftmost_coordinate_first() -> None:
    assert ordered_service.cmp(LEX2, (0, 5), (1, -7)) is Comparison.LESS
    assert ordered_service.cmp(LEX2, (1, 2), (1, 1)) is Comparison.GREATER
    assert ordered_service.cmp(LEX2, (1, 1), (1, 1)) is Comparison.EQUAL


@pytest.mark.unit
def test_mixed_variant_element_is_rejected() -> None:
    with pytest.raises(InvalidArgumentError):
        ordered_service.cmp(INTEGERS, 1, (1,))
    with pytest.raises(InvalidArgumentError):
        ordered_service.cmp(OrderedIndex.chain(3), 0, 3)


@pytest.mark.unit
def test_chain_has_no_group_operation() -> None:
    with pytest.raises(UnsupportedOperationError):
        ordered_service.group_op(OrderedIndex.chain(3), 0, 1)


@pytest.mark.unit
def test_rational_overflow_is_reported() -> None:
    huge = Fraction(2**62, 1)
    with pytest.raises(ArithmeticOverflowError):
        ordered_service.group_op(RATIONALS, huge, huge)


@pytest.mark.unit
@given(small, small, small)
def test_integer_order_is_translation_invariant(g: int, h: int, k: int) -> None:
    before = ordered_service.cmp(INTEGERS, g, h)
    after = ordered_service.cmp(INTEGERS, ordered_service.group_op(INTEGERS, g, k), ordered_service.group_op(INTEGERS, h, k))
    assert before is after


@pytest.mark.unit
@given(pairs, pairs, pairs)
def test_lex_order_is_translation_invariant(g, h, k) -> None:
    before = ordered_service.cmp(LEX2, g, h)
    after = ordered_service.cmp(LEX2, ordered_service.group_op(LEX2, g, k), ordered_service.group_op(LEX2, h, k))
    assert before is after


@pytest.mark.unit
@given(fractions, fractions)
def test_rational_inverse_and_subtraction(g: Fraction, h: Fraction) -> None:
    assert ordered_service.group_op(RATIONALS, g, ordered_service.group_inv(RATIONALS, g)) == 0
    assert ordered_service.group_op(RATIONALS, ordered_service.group_sub(RATIONALS, g, h), h) == g


@pytest.mark.unit
@given(fractions.filter(lambda value: value < 0))
def test_rationals_are_dense_below_identity(c: Fraction) -> None:
    a, b = ordered_service.factor_below_identity(RATIONALS, c)
    assert a < 0 and b < 0
    assert ordered_service.group_op(RATIONALS, a, b) == c


@pytest.mark.unit
def test_largest_negative_integer_is_not_a_product_of_negatives() -> None:
    assert ordered_service.factor_below_identity(INTEGERS, -1) is None
    assert ordered_service.factor_below_identity(INTEGERS, -2) == (-1, -1)
    assert ordered_service.density_witness(INTEGERS) == -1
    assert ordered_service.density_witness(RATIONALS) is None
    assert ordered_service.density_witness(LEX2) == (0, -1)


@pytest.mark.unit
def test_windows() -> None:
    assert ordered_service.window(INTEGERS, -2, 1) == [-2, -1, 0, 1]
    assert ordered_service.window(RATIONALS, 0, 1) == [Fraction(0), Fraction(1, 2), Fraction(1)]
    assert ordered_service.window(OrderedIndex.trivial(), -5, 5) == [()]
    assert ordered_service.window(LEX2, 0, 0) == [(0, -1), (0, 0), (0, 1)]


@pytest.mark.unit
@pytest.mark.parametrize("text", ["5..-5", "a..b", "3", ""])
def test_parse_window_rejects_malformed(text: str) -> None:
    with pytest.raises(InvalidArgumentError):
        ordered_service.parse_window(text)


@pytest.mark.unit
def test_element_text_round_trip() -> None:
    assert ordered_service.parse_element(RATIONALS, "-3/2") == Fraction(-3, 2)
    assert ordered_service.parse_element(LEX2, "(1,-2)") == (1, -2)
    assert ordered_service.format_element(LEX2, (1, -2)) == "(1,-2)"
    with pytest.raises(InvalidArgumentError):
        ordered_service.parse_element(INTEGERS, "1/2")
