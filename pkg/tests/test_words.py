import pytest
from hypothesis import given, strategies as st

from monoidlogic.errors import FormatError, NotLinearOrder, WidthMismatch
from monoidlogic.words import (
    WordStructure,
    as_structure,
    associated_string,
    format_word,
    letter_code,
    letter_from_code,
    read_words,
    word,
    words_up_to,
)


def test_word_parsing_and_positions():
    w = word("101/011")
    assert w.width == 3
    assert len(w) == 2
    assert list(w.positions) == [1, 2]
    assert w.holds(1, 1) and not w.holds(2, 1) and w.holds(3, 2)
    assert format_word(w) == "101/011"


def test_empty_word_needs_width():
    with pytest.raises(FormatError):
        word("-")
    assert len(word("-", 2)) == 0
    assert format_word(word("-", 2)) == "-"


def test_letters_must_have_width_bits():
    with pytest.raises(WidthMismatch):
        WordStructure(2, ((1, 0), (1,)))
    with pytest.raises(WidthMismatch):
        word("10/1")


def test_letter_codes_are_msb_first():
    assert letter_code((1, 0)) == 2
    assert letter_from_code(2, 2) == (1, 0)
    assert [letter_from_code(c, 3) for c in range(8)][5] == (1, 0, 1)


def test_words_up_to_counts():
    # 1 + 2 + 4 + ... + 2^8
    assert sum(1 for _ in words_up_to(1, 8)) == 511
    assert sum(1 for _ in words_up_to(2, 2)) == 1 + 4 + 16


def test_read_words_skips_comments():
    ws = read_words("# header\n1/0\n\n0/0  # trailing\n")
    assert [format_word(w) for w in ws] == ["1/0", "0/0"]


def test_associated_string_reorders_by_less():
    universe = ["b", "a", "c"]
    less = {("a", "b"), ("a", "c"), ("b", "c")}
    w = associated_string(universe, less, [{"a", "c"}, {"b"}])
    assert format_word(w) == "10/01/10"


def test_associated_string_rejects_non_orders():
    with pytest.raises(NotLinearOrder):
        associated_string([1, 2], set(), [{1}])  # not total
    with pytest.raises(NotLinearOrder):
        associated_string([1, 2, 3], {(1, 2), (2, 3), (3, 1)}, [{1}])  # cyclic
    with pytest.raises(NotLinearOrder):
        associated_string([1], {(1, 1)}, [{1}])


@given(st.lists(st.tuples(st.integers(0, 1), st.integers(0, 1)), max_size=8))
def test_structure_round_trip(letters):
    w = WordStructure(2, tuple(letters))
    universe, less, rels = as_structure(w)
    assert associated_string(universe, less, rels) == w


@given(st.lists(st.integers(0, 1), max_size=6), st.randoms())
def test_associated_string_is_independent_of_element_names(bits, rnd):
    n = len(bits)
    names = list(range(100, 100 + n))
    rnd.shuffle(names)
    less = {(names[i], names[j]) for i in range(n) for j in range(i + 1, n)}
    rel = {names[i] for i in range(n) if bits[i]}
    assert associated_string(names, less, [rel]) == WordStructure(1, tuple((b,) for b in bits))
