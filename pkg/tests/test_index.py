import pytest
from hypothesis import given, strategies as st

from frmzv.index import (
    IndexFormatError,
    depth,
    dual,
    dual_word,
    format_index,
    height,
    index_to_word,
    is_admissible,
    parse_index,
    parse_word,
    weight,
    word_to_index,
)

indices = st.lists(st.integers(1, 6), min_size=1, max_size=6).map(tuple)
admissible = indices.filter(lambda i: i[0] >= 2)


def test_parse_basic():
    assert parse_index("2,1,3") == (2, 1, 3)
    assert parse_index(" 2, 1 ") == (2, 1)
    assert parse_index("") == ()
    assert parse_index("()") == ()
    assert parse_index("(3,1)") == (3, 1)


def test_parse_power_shorthand():
    assert parse_index("1^3,2") == (1, 1, 1, 2)
    assert parse_index("2,1^0") == (2,)


@pytest.mark.parametrize("bad", ["0", "2,-1", "a", "2,,1", "1^x"])
def test_parse_rejects(bad):
    with pytest.raises(IndexFormatError):
        parse_index(bad)


def test_invariants():
    i = (3, 1, 2, 1)
    assert weight(i) == 7
    assert depth(i) == 4
    assert height(i) == 2
    assert is_admissible(i)
    assert not is_admissible((1, 3))
    assert is_admissible(())  # empty index: zeta(()) = 1


def test_word_encoding():
    assert index_to_word((3, 1)) == "xxyy"
    assert word_to_index("xyy") == (2, 1)
    assert parse_word("XyY") == "xyy"
    with pytest.raises(IndexFormatError):
        word_to_index("yx")
    with pytest.raises(IndexFormatError):
        parse_word("xz")


def test_dual_examples():
    assert dual((3,)) == (2, 1)
    assert dual((2,)) == (2,)
    assert dual((4, 1)) == (3, 1, 1)
    assert dual((2, 1, 3)) == (2, 1, 3)
    with pytest.raises(IndexFormatError):
        dual((1, 2))
    with pytest.raises(IndexFormatError):
        dual(())


@given(indices)
def test_word_roundtrip(i):
    assert word_to_index(index_to_word(i)) == i
    assert parse_index(format_index(i)) == i
    assert len(index_to_word(i)) == weight(i)


@given(admissible)
def test_dual_is_involution(i):
    d = dual(i)
    assert dual(d) == i
    assert weight(d) == weight(i)
    assert depth(d) == weight(i) - depth(i)
    assert height(d) == height(i)


@given(st.text(alphabet="xy", max_size=12))
def test_dual_word_involution(w):
    assert dual_word(dual_word(w)) == w
