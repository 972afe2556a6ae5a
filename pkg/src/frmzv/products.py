"""Stuffle (harmonic) and shuffle products, and the star expansion."""
from __future__ import annotations

from functools import lru_cache
from itertools import product as _cartesian
from typing import Dict

from .algebra import Combination, bilinear_extend
from .index import Index, Word, index_to_word, word_to_index

__all__ = [
    "stuffle",
    "shuffle",
    "shuffle_indices",
    "stuffle_combo",
    "shuffle_combo",
    "shuffle_indices_combo",
    "star_expand",
    "words_to_indices",
    "indices_to_words",
]


def _add_prefixed(acc: Dict, head, terms: Dict, scale: int = 1) -> None:
    for t, c in terms.items():
        key = head + t
        acc[key] = acc.get(key, 0) + scale * c


@lru_cache(maxsize=None)
def _stuffle(u: Index, v: Index) -> Dict[Index, int]:
    if not u:
        return {v: 1}
    if not v:
        return {u: 1}
    a, b = u[0], v[0]
    acc: Dict[Index, int] = {}
    _add_prefixed(acc, (a,), _stuffle(u[1:], v))
    _add_prefixed(acc, (b,), _stuffle(u, v[1:]))
    _add_prefixed(acc, (a + b,), _stuffle(u[1:], v[1:]))
    return acc


@lru_cache(maxsize=None)
def _shuffle(u: Word, v: Word) -> Dict[Word, int]:
    if not u:
        return {v: 1}
    if not v:
        return {u: 1}
    acc: Dict[Word, int] = {}
    _add_prefixed(acc, u[0], _shuffle(u[1:], v))
    _add_prefixed(acc, v[0], _shuffle(u, v[1:]))
    return acc


def stuffle(u: Index, v: Index) -> Combination:
    """Quasi-shuffle product of two indices.

    >>> stuffle((2,), (2,))
    2*(2,2) + 1*(4)
    """
    return Combination(_stuffle(tuple(u), tuple(v)))


def shuffle(u: Word, v: Word) -> Combination:
    """Shuffle product of two words over {x, y}."""
    return Combination(_shuffle(u, v))


def words_to_indices(c: Combination) -> Combination:
    return c.map_basis(word_to_index)


def indices_to_words(c: Combination) -> Combination:
    return c.map_basis(index_to_word)


@lru_cache(maxsize=None)
def _shuffle_indices(u: Index, v: Index) -> Combination:
    return words_to_indices(shuffle(index_to_word(u), index_to_word(v)))


def shuffle_indices(u: Index, v: Index) -> Combination:
    """Shuffle product expressed on indices (through the word encoding)."""
    return _shuffle_indices(tuple(u), tuple(v))


stuffle_combo = bilinear_extend(stuffle)
shuffle_combo = bilinear_extend(shuffle)
shuffle_indices_combo = bilinear_extend(shuffle_indices)


def star_expand(index: Index) -> Combination:
    """Sum over every way of replacing the commas of ``index`` by plus signs."""
    index = tuple(index)
    if len(index) <= 1:
        return Combination.basis(index)
    acc: Dict[Index, int] = {}
    for plus in _cartesian((False, True), repeat=len(index) - 1):
        parts = [index[0]]
        for k, merge in zip(index[1:], plus):
            if merge:
                parts[-1] += k
            else:
                parts.append(k)
        key = tuple(parts)
        acc[key] = acc.get(key, 0) + 1
    return Combination(acc)
