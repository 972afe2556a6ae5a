"""Harmonic and shuffle regularization of divergent indices.

Both regularizations send an index to a polynomial in ``T`` whose
coefficients are combinations of admissible indices. The two live in
different algebras, so they get different polynomial classes and refuse
to be multiplied together.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Dict, Iterator, Mapping, Tuple

from .algebra import Combination
from .index import (
    Index,
    Word,
    dual,
    index_to_word,
    IndexFormatError,
    word_to_index,
)
from .products import shuffle, shuffle_indices_combo, stuffle, stuffle_combo

__all__ = [
    "TPolynomial",
    "HarmonicPoly",
    "ShufflePoly",
    "reg_harmonic",
    "reg_shuffle",
    "reg_shuffle_index",
    "regularize",
    "constant_term",
    "ones_two_ones",
    "ohno_composition_sum",
    "compositions",
    "dual_image",
]


class TPolynomial:
    """Polynomial in ``T`` with Combination coefficients.

    Subclasses fix the product used on coefficients.
    """

    _coeff_product = None
    mode = ""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, Combination] | None = None):
        self.coeffs: Dict[int, Combination] = {
            d: c for d, c in (coeffs or {}).items() if c
        }

    @classmethod
    def constant(cls, c: Combination) -> "TPolynomial":
        return cls({0: c})

    @classmethod
    def one(cls) -> "TPolynomial":
        return cls({0: Combination.basis(())})

    @classmethod
    def t_power(cls, d: int, scale=1) -> "TPolynomial":
        return cls({d: Combination.basis((), scale)})

    @property
    def degree(self) -> int:
        """Largest power of T present; -1 for the zero polynomial."""
        return max(self.coeffs, default=-1)

    def __getitem__(self, d: int) -> Combination:
        return self.coeffs.get(d, Combination())

    def _check(self, other) -> None:
        if type(other) is not type(self):
            raise TypeError(
                f"cannot combine {type(self).__name__} with {type(other).__name__}"
            )

    def __add__(self, other: "TPolynomial") -> "TPolynomial":
        self._check(other)
        out = dict(self.coeffs)
        for d, c in other.coeffs.items():
            out[d] = out[d] + c if d in out else c
        return type(self)(out)

    def __neg__(self) -> "TPolynomial":
        return type(self)({d: -c for d, c in self.coeffs.items()})

    def __sub__(self, other: "TPolynomial") -> "TPolynomial":
        return self + (-other)

    def scale(self, c) -> "TPolynomial":
        return type(self)({d: co * c for d, co in self.coeffs.items()})

    def __mul__(self, other: "TPolynomial") -> "TPolynomial":
        if not isinstance(other, TPolynomial):
            return self.scale(other)
        self._check(other)
        prod = type(self)._coeff_product
        out: Dict[int, Combination] = {}
        for d1, c1 in self.coeffs.items():
            for d2, c2 in other.coeffs.items():
                term = prod(c1, c2)
                d = d1 + d2
                out[d] = out[d] + term if d in out else term
        return type(self)(out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TPolynomial):
            return NotImplemented
        return type(self) is type(other) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((type(self).__name__, frozenset(self.coeffs.items())))

    def to_json_obj(self) -> dict:
        return {
            "mode": self.mode,
            "coeffs": {str(d): self.coeffs[d].to_json_obj() for d in sorted(self.coeffs)},
        }

    def __repr__(self) -> str:
        if not self.coeffs:
            return f"{type(self).__name__}(0)"
        parts = [f"T^{d}*[{self.coeffs[d]!r}]" for d in sorted(self.coeffs)]
        return f"{type(self).__name__}(" + " + ".join(parts) + ")"


class HarmonicPoly(TPolynomial):
    _coeff_product = staticmethod(stuffle_combo)
    mode = "harmonic"
    __slots__ = ()


class ShufflePoly(TPolynomial):
    _coeff_product = staticmethod(shuffle_indices_combo)
    mode = "shuffle"
    __slots__ = ()


def constant_term(p: TPolynomial) -> Combination:
    return p[0]


def _leading(seq, letter) -> int:
    n = 0
    for a in seq:
        if a != letter:
            break
        n += 1
    return n


@lru_cache(maxsize=None)
def _reg_harmonic(index: Index) -> HarmonicPoly:
    m = _leading(index, 1)
    if m == 0:
        return HarmonicPoly.constant(Combination.basis(index))
    # (1) * rest = m*index + terms with fewer leading ones
    rest = index[1:]
    expansion = stuffle((1,), rest)
    if expansion[index] != m:
        raise AssertionError(f"peeling coefficient mismatch at {index}")
    acc = HarmonicPoly({1: Combination.basis(())}) * _reg_harmonic(rest)
    for term, c in expansion.items():
        if term == index:
            continue
        assert _leading(term, 1) < m, "termination measure did not decrease"
        acc = acc - _reg_harmonic(term).scale(c)
    return acc.scale(Fraction(1, m))


def reg_harmonic(index: Index) -> HarmonicPoly:
    """Harmonic regularization: the stuffle morphism with ``(1) -> T``."""
    return _reg_harmonic(tuple(index))


@lru_cache(maxsize=None)
def _reg_shuffle(word: Word) -> ShufflePoly:
    m = _leading(word, "y")
    if m == 0:
        return ShufflePoly.constant(Combination.basis(word_to_index(word)))
    rest = word[1:]
    expansion = shuffle("y", rest)
    if expansion[word] != m:
        raise AssertionError(f"peeling coefficient mismatch at {word}")
    acc = ShufflePoly({1: Combination.basis(())}) * _reg_shuffle(rest)
    for term, c in expansion.items():
        if term == word:
            continue
        assert _leading(term, "y") < m, "termination measure did not decrease"
        acc = acc - _reg_shuffle(term).scale(c)
    return acc.scale(Fraction(1, m))


def reg_shuffle(word: Word) -> ShufflePoly:
    """Shuffle regularization: the shuffle morphism with ``y -> T``.

    Coefficients are combinations of admissible indices.
    """
    if word and word[-1] != "y":
        raise IndexFormatError(f"word {word!r} ends in x; no regularized value")
    return _reg_shuffle(word)


def reg_shuffle_index(index: Index) -> ShufflePoly:
    return reg_shuffle(index_to_word(tuple(index)))


def regularize(mode: str, index: Index) -> TPolynomial:
    if mode == "harmonic":
        return reg_harmonic(index)
    if mode == "shuffle":
        return reg_shuffle_index(index)
    raise ValueError(f"unknown regularization mode {mode!r}")


def ones_two_ones(m: int, l: int) -> Combination:
    """Closed form for the shuffle-regularized value of ``(1^m, 2, 1^(l-1))``."""
    if m < 0 or l < 1:
        raise ValueError("need m >= 0 and l >= 1")
    target = (2,) + (1,) * (m + l - 1)
    return Combination.basis(target, (-1) ** m * comb(m + l, m))


def compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """Weak compositions of ``total`` into ``parts`` nonnegative entries.

    Colexicographic order: the last entry varies slowest.
    """
    if parts == 0:
        if total == 0:
            yield ()
        return
    out = []
    for bars in combinations(range(total + parts - 1), parts - 1):
        prev = -1
        comp = []
        for b in bars:
            comp.append(b - prev - 1)
            prev = b
        comp.append(total + parts - 2 - prev)
        out.append(tuple(comp))
    out.sort(key=lambda c: c[::-1])
    yield from out


def ohno_composition_sum(n: int, k: int) -> Combination:
    """Composition-sum expression for the shuffle-regularized ``(1^(n-1), k)``.

    Returns ``(-1)^(n-1) sum (a_{k-1}+1) (a_{k-1}+2, a_{k-2}+1, ..., a_1+1)``
    over weak compositions ``a_1 + ... + a_{k-1} = n-1``. This is written in
    the dual basis: apply :func:`dual_image` to compare with
    ``constant_term(reg_shuffle_index((1,)*(n-1) + (k,)))`` term by term.
    """
    if n < 1 or k < 2:
        raise ValueError("need n >= 1 and k >= 2")
    acc: Dict[Index, int] = {}
    for a in compositions(n - 1, k - 1):
        key = (a[-1] + 2,) + tuple(x + 1 for x in reversed(a[:-1]))
        acc[key] = acc.get(key, 0) + (a[-1] + 1)
    return Combination(acc) * (-1) ** (n - 1)


def dual_image(c: Combination) -> Combination:
    """Apply the duality involution to every basis index."""
    return c.map_basis(lambda i: dual(i) if i else i)
