import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cantor_hankel.sequences import (DEFAULT_WORD_CAP, cantor_term,
                                     cantor_via_automaton, diff_term,
                                     sequence_slice, substitution_word)

# First 27 terms straight from the digit criterion.
CANTOR_PREFIX = (1, 0, 1, 0, 0, 0, 1, 0, 1,
                 0, 0, 0, 0, 0, 0, 0, 0, 0,
                 1, 0, 1, 0, 0, 0, 1, 0, 1)

DIFF_PREFIX = (2, 0, 1, 0, 1, 0, 2, 0, 1)


def test_cantor_prefix():
    assert tuple(cantor_term(n) for n in range(27)) == CANTOR_PREFIX


def test_diff_prefix():
    assert tuple(diff_term(n) for n in range(9)) == DIFF_PREFIX


def test_diff_is_sum_of_shifted_terms():
    for n in range(200):
        assert diff_term(n) == cantor_term(n) + cantor_term(n + 2)


@given(st.integers(min_value=0, max_value=3 ** 12))
def test_automaton_route_agrees_with_digit_route(n):
    assert cantor_via_automaton(n) == cantor_term(n)


@given(st.integers(min_value=0, max_value=10 ** 9))
@settings(max_examples=60)
def test_cantor_three_way_recurrence(n):
    assert cantor_term(3 * n) == cantor_term(n)
    assert cantor_term(3 * n + 1) == 0
    assert cantor_term(3 * n + 2) == cantor_term(n)


@given(st.integers(min_value=0, max_value=10 ** 6))
@settings(max_examples=60)
def test_diff_three_way_recurrence(n):
    assert diff_term(3 * n) == 2 * cantor_term(n)
    assert diff_term(3 * n + 1) == cantor_term(n + 1)
    assert diff_term(3 * n + 2) == cantor_term(n)


def test_substitution_word_prefixes():
    assert substitution_word(0) == "a"
    assert substitution_word(1) == "aba"
    assert substitution_word(2) == "ababbbaba"
    for k in range(6):
        assert substitution_word(k + 1).startswith(substitution_word(k))


def test_substitution_word_spells_the_sequence():
    word = substitution_word(7)
    for n, letter in enumerate(word):
        assert cantor_term(n) == (1 if letter == "a" else 0)


def test_substitution_word_cap():
    with pytest.raises(ValueError):
        substitution_word(17, max_len=DEFAULT_WORD_CAP)


def test_sequence_slice():
    assert sequence_slice("c", 0, 9) == list(CANTOR_PREFIX[:9])
    assert sequence_slice("d", 2, 4) == list(DIFF_PREFIX[2:6])
    with pytest.raises(ValueError):
        sequence_slice("e", 0, 3)
    with pytest.raises(ValueError):
        sequence_slice("c", -1, 3)
