"""Finite rational linear combinations over a hashable basis."""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Callable, Dict, Hashable, Iterable, Iterator, Mapping, Tuple

from .index import format_index

__all__ = ["Combination", "basis_text", "bilinear_extend", "parse_fraction"]


def basis_text(key: Hashable) -> str:
    """Canonical text of a basis element, also used as its sort key."""
    if type(key) is tuple:
        return format_index(key)
    return str(key)


def parse_fraction(text: str) -> Fraction:
    return Fraction(text)


def _frac_text(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class Combination:
    """Immutable map basis -> nonzero Fraction.

    Supports ``+``, ``-``, negation and multiplication by rationals. Equality
    is term-wise; the zero combination is falsy.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Hashable, object] | Iterable[Tuple[Hashable, object]] = ()):
        acc: Dict[Hashable, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for key, c in items:
            acc[key] = acc.get(key, 0) + Fraction(c)
        self._terms = {k: v for k, v in acc.items() if v != 0}
        self._hash = None

    @classmethod
    def basis(cls, key: Hashable, coeff=1) -> "Combination":
        return cls({key: coeff})

    @classmethod
    def _trusted(cls, terms: Dict[Hashable, Fraction]) -> "Combination":
        # terms must already be normalized
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    def normalize(self) -> "Combination":
        return Combination(self._terms)

    def __iter__(self) -> Iterator[Hashable]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __getitem__(self, key: Hashable) -> Fraction:
        return self._terms.get(key, Fraction(0))

    def __contains__(self, key: Hashable) -> bool:
        return key in self._terms

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def sorted_items(self):
        return sorted(self._terms.items(), key=lambda kv: basis_text(kv[0]))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Combination):
            return self._terms == other._terms
        if isinstance(other, int) and other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: "Combination") -> "Combination":
        if not isinstance(other, Combination):
            return NotImplemented
        acc = dict(self._terms)
        for k, v in other._terms.items():
            s = acc.get(k, 0) + v
            if s:
                acc[k] = s
            else:
                acc.pop(k, None)
        return Combination._trusted(acc)

    def __neg__(self) -> "Combination":
        return Combination._trusted({k: -v for k, v in self._terms.items()})

    def __sub__(self, other: "Combination") -> "Combination":
        if not isinstance(other, Combination):
            return NotImplemented
        return self + (-other)

    def __mul__(self, c) -> "Combination":
        if isinstance(c, Combination):
            return NotImplemented
        c = Fraction(c)
        if c == 0:
            return Combination()
        return Combination._trusted({k: v * c for k, v in self._terms.items()})

    __rmul__ = __mul__

    def map_basis(self, f: Callable[[Hashable], Hashable]) -> "Combination":
        """Push the combination forward along a basis map ``f``."""
        return Combination((f(k), v) for k, v in self._terms.items())

    def coefficient_sum(self) -> Fraction:
        return sum(self._terms.values(), Fraction(0))

    def to_json_obj(self) -> dict:
        return {
            "terms": [
                {"basis": basis_text(k), "coeff": _frac_text(v)}
                for k, v in self.sorted_items()
            ]
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for k, v in self.sorted_items():
            out.append(f"{_frac_text(v)}*({basis_text(k)})")
        return " + ".join(out)


def bilinear_extend(f: Callable[[Hashable, Hashable], Combination]):
    """Extend ``f`` on basis pairs to a bilinear map on combinations."""

    def extended(a: Combination, b: Combination) -> Combination:
        acc: Dict[Hashable, Fraction] = {}
        for ka, va in a.items():
            for kb, vb in b.items():
                c = va * vb
                for k, v in f(ka, kb).items():
                    acc[k] = acc.get(k, 0) + c * v
        return Combination(acc)

    return extended
