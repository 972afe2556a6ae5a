"""Indices, words and the duality involution.

An index is a plain tuple of positive ints ``(k1, ..., kn)`` with ``k1`` the
outermost summation variable. A word is a str over ``"x"`` and ``"y"``; the
index ``(k1, ..., kn)`` corresponds to ``x^(k1-1) y ... x^(kn-1) y``.
"""
from __future__ import annotations

import re
from typing import Iterable, Tuple

Index = Tuple[int, ...]
Word = str

__all__ = [
    "Index",
    "Word",
    "IndexFormatError",
    "parse_index",
    "format_index",
    "make_index",
    "weight",
    "depth",
    "height",
    "is_admissible",
    "is_admissible_word",
    "index_to_word",
    "word_to_index",
    "parse_word",
    "dual",
    "dual_word",
    "ones",
]

_REPEAT = re.compile(r"^(\d+)\^(\d+)$")


class IndexFormatError(ValueError):
    """Raised for malformed index or word input."""


def make_index(parts: Iterable[int]) -> Index:
    idx = tuple(int(k) for k in parts)
    for k in idx:
        if k < 1:
            raise IndexFormatError(f"index parts must be positive, got {k}")
    return idx


def ones(m: int) -> Index:
    return (1,) * m


def parse_index(text: str) -> Index:
    """Parse ``"3,1^2"`` style text into ``(3, 1, 1)``.

    The empty string is the empty index. ``a^m`` repeats the part ``a``
    ``m`` times. One pair of enclosing parentheses is allowed.
    """
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1].strip()
    if text == "":
        return ()
    parts: list[int] = []
    for token in text.split(","):
        token = token.strip()
        m = _REPEAT.match(token)
        if m:
            part, reps = int(m.group(1)), int(m.group(2))
            if part < 1:
                raise IndexFormatError(f"non-positive part in token {token!r}")
            parts.extend([part] * reps)
            continue
        if "^" in token:
            raise IndexFormatError(f"malformed repetition token {token!r}")
        try:
            part = int(token)
        except ValueError:
            raise IndexFormatError(f"non-integer token {token!r}") from None
        if part < 1 or not token.lstrip("+").isdigit():
            raise IndexFormatError(f"non-positive part in token {token!r}")
        parts.append(part)
    return tuple(parts)


def format_index(index: Index) -> str:
    return ",".join(str(k) for k in index)


def weight(index: Index) -> int:
    return sum(index)


def depth(index: Index) -> int:
    return len(index)


def height(index: Index) -> int:
    return sum(1 for k in index if k > 1)


def is_admissible(index: Index) -> bool:
    return len(index) == 0 or index[0] >= 2


def is_admissible_word(word: Word) -> bool:
    return word == "" or (word[0] == "x" and word[-1] == "y")


def index_to_word(index: Index) -> Word:
    return "".join("x" * (k - 1) + "y" for k in index)


def parse_word(text: str) -> Word:
    word = text.strip().lower()
    if set(word) - {"x", "y"}:
        raise IndexFormatError(f"word must be over x,y: {text!r}")
    return word


def word_to_index(word: Word) -> Index:
    """Split a word ending in ``y`` into blocks ``x^a y``."""
    if word and word[-1] != "y":
        raise IndexFormatError(f"word {word!r} ends in x and is not an index")
    parts = []
    run = 0
    for letter in word:
        if letter == "x":
            run += 1
        elif letter == "y":
            parts.append(run + 1)
            run = 0
        else:
            raise IndexFormatError(f"bad letter {letter!r} in word {word!r}")
    return tuple(parts)


_SWAP = str.maketrans("xy", "yx")


def dual_word(word: Word) -> Word:
    """Reverse the word and exchange x and y."""
    return word[::-1].translate(_SWAP)


def dual(index: Index) -> Index:
    if not index or not is_admissible(index):
        raise IndexFormatError(f"duality needs a nonempty admissible index, got {index}")
    return word_to_index(dual_word(index_to_word(index)))
