"""Arbitrary-precision evaluation of multiple zeta values.

The production evaluator is the Hoelder convolution at 1/2: every MZV is a
finite sum of products of multiple polylogarithms at z = 1/2, each of which
converges like 2^-m. The nested sums run in fixed-point integer arithmetic
with ``guard_bits(prec)`` extra bits; results come back as mpmath ``mpf``
rounded to the requested precision, with absolute error below 2^-prec for
values of modest size.

``mzv_direct`` is a deliberately naive float64 truncated sum used only as an
independent low-precision oracle.
"""
from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

import mpmath
import numpy as np

from .algebra import Combination
from .index import (
    Index,
    IndexFormatError,
    dual,
    dual_word,
    index_to_word,
    is_admissible,
    word_to_index,
)
from .products import star_expand

__all__ = [
    "DEFAULT_PREC",
    "guard_bits",
    "working_precision",
    "polylog_half",
    "mzv_holder",
    "mzv_holder_at",
    "mzv",
    "mzv_direct",
    "eval_star",
    "eval_combo",
    "EvenZeta",
    "bernoulli",
    "zeta_even_exact",
    "pi",
    "euler_gamma",
    "log2",
    "error_bound",
]

DEFAULT_PREC = 128


def guard_bits(prec: int) -> int:
    return max(32, math.ceil(0.15 * prec))


def working_precision(prec: int) -> int:
    return prec + guard_bits(prec)


def error_bound(prec: int) -> mpmath.mpf:
    """Declared absolute error of public evaluators at ``prec`` bits."""
    with mpmath.workprec(prec):
        return mpmath.ldexp(mpmath.mpf(1), -prec)


def _check_prec(prec) -> int:
    if prec is None:
        raise ValueError("a precision (in bits) is required")
    prec = int(prec)
    if prec < 16:
        raise ValueError(f"precision {prec} bits is too small")
    return prec


# ---------------------------------------------------------------------------
# constants

@lru_cache(maxsize=None)
def pi(prec: int) -> mpmath.mpf:
    with mpmath.workprec(working_precision(prec)):
        return +mpmath.pi


@lru_cache(maxsize=None)
def euler_gamma(prec: int) -> mpmath.mpf:
    with mpmath.workprec(working_precision(prec)):
        return +mpmath.euler


@lru_cache(maxsize=None)
def log2(prec: int) -> mpmath.mpf:
    with mpmath.workprec(working_precision(prec)):
        return +mpmath.ln2


# ---------------------------------------------------------------------------
# fixed-point nested sums at z = 1/2

_lock = threading.Lock()
_inv_powers: dict = {}
_nested: dict = {}


def _terms_needed(wbits: int, d: int) -> int:
    # tail of sum_{m>M} 2^-m (1 + ln m)^(d-1) kept below 2^-(wbits+2)
    M = wbits + 8
    while (M + 1 - (d - 1) * math.log2(1 + math.log(M + 1))) < wbits + 4:
        M += 8
    return M


def _inv_power(k: int, wbits: int, M: int) -> list:
    key = (k, wbits)
    with _lock:
        table = _inv_powers.get(key)
    if table is not None and len(table) > M:
        return table
    one = 1 << wbits
    table = [0] + [one // (m ** k) for m in range(1, M + 1)]
    with _lock:
        _inv_powers[key] = table
    return table


def _strict_sums(index: Index, wbits: int, M: int) -> list:
    """``S[m] = sum_{m > m1 > ... > md >= 1} prod m_j^-k_j`` for m <= M+1."""
    if not index:
        return [1 << wbits] * (M + 2)
    key = (index, wbits)
    with _lock:
        cached = _nested.get(key)
    if cached is not None and len(cached) >= M + 2:
        return cached
    inner = _strict_sums(index[1:], wbits, M)
    inv = _inv_power(index[0], wbits, M)
    out = [0] * (M + 2)
    acc = 0
    for m in range(1, M + 1):
        acc += (inv[m] * inner[m]) >> wbits
        out[m + 1] = acc
    with _lock:
        _nested[key] = out
    return out


def _li_half_fixed(index: Index, wbits: int) -> int:
    if not index:
        return 1 << wbits
    M = _terms_needed(wbits, len(index))
    inner = _strict_sums(index[1:], wbits, M)
    inv = _inv_power(index[0], wbits, M)
    total = 0
    for m in range(1, M + 1):
        total += ((inv[m] * inner[m]) >> wbits) >> m
    return total


def _to_mpf(fixed: int, wbits: int, prec: int) -> mpmath.mpf:
    with mpmath.workprec(prec):
        return mpmath.ldexp(mpmath.mpf(fixed), -wbits)


@lru_cache(maxsize=4096)
def polylog_half(index: Index, prec: int) -> mpmath.mpf:
    """Multiple polylogarithm ``Li_index(1/2)``.

    ``sum_{m1 > ... > md >= 1} 2^-m1 / (m1^k1 ... md^kd)``; ``k1 = 1`` is
    allowed. The empty index gives 1.
    """
    prec = _check_prec(prec)
    index = tuple(index)
    wbits = working_precision(prec)
    return _to_mpf(_li_half_fixed(index, wbits), wbits, prec)


def _holder_fixed(index: Index, wbits: int) -> int:
    word = index_to_word(index)
    total = 0
    for j in range(len(word) + 1):
        near_zero = word_to_index(word[j:])
        near_one = word_to_index(dual_word(word[:j]))
        total += (_li_half_fixed(near_zero, wbits) * _li_half_fixed(near_one, wbits)) >> wbits
    return total


def _terms_needed_at(wbits: int, d: int, z: Fraction) -> int:
    rate = math.log2(z.denominator / z.numerator)
    slack = wbits + 4 + math.log2(z.denominator / (z.denominator - z.numerator))
    M = int(wbits / rate) + 8
    while M * rate - (d - 1) * math.log2(1 + math.log(M + 1)) < slack:
        M += 8
    return M


def _li_fixed_at(index: Index, wbits: int, z: Fraction) -> int:
    """Fixed-point ``Li_index(z)`` for rational ``0 < z < 1``."""
    if not index:
        return 1 << wbits
    M = _terms_needed_at(wbits, len(index), z)
    inner = _strict_sums(index[1:], wbits, M)
    inv = _inv_power(index[0], wbits, M)
    a, b = z.numerator, z.denominator
    total = 0
    num, den = a, b
    for m in range(1, M + 1):
        weight = (num << wbits) // den
        total += (((inv[m] * inner[m]) >> wbits) * weight) >> wbits
        num *= a
        den *= b
    return total


def mzv_holder_at(index: Index, z=Fraction(1, 3), prec: int = DEFAULT_PREC) -> mpmath.mpf:
    """``zeta(index)`` from the path split at a rational point ``z``.

    ``zeta(w) = sum_j Li_{w[j:]}(z) Li_{dual(w[:j])}(1 - z)``. At ``z = 1/2``
    this is :func:`mzv_holder`; other split points give genuinely different
    sums and serve as an independent check.
    """
    prec = _check_prec(prec)
    index = tuple(index)
    if not index or not is_admissible(index):
        raise IndexFormatError(f"zeta{index} diverges or is not a value; need k1 >= 2")
    z = Fraction(z)
    if not 0 < z < 1:
        raise ValueError("split point must lie strictly between 0 and 1")
    wbits = working_precision(prec)
    word = index_to_word(index)
    total = 0
    for j in range(len(word) + 1):
        near_zero = word_to_index(word[j:])
        near_one = word_to_index(dual_word(word[:j]))
        total += (_li_fixed_at(near_zero, wbits, z) * _li_fixed_at(near_one, wbits, 1 - z)) >> wbits
    return _to_mpf(total, wbits, prec)


@lru_cache(maxsize=None)
def _mzv_cached(index: Index, prec: int) -> mpmath.mpf:
    wbits = working_precision(prec)
    return _to_mpf(_holder_fixed(index, wbits), wbits, prec)


def mzv_holder(index: Index, prec: int = DEFAULT_PREC) -> mpmath.mpf:
    """``zeta(index)`` for a nonempty admissible index via Hoelder convolution.

    Absolute error below ``error_bound(prec)`` for weight up to ~30.
    """
    prec = _check_prec(prec)
    index = tuple(index)
    if not index or not is_admissible(index):
        raise IndexFormatError(f"zeta{index} diverges or is not a value; need k1 >= 2")
    return _mzv_cached(index, prec)


def mzv(index: Index, prec: int = DEFAULT_PREC) -> mpmath.mpf:
    """Like :func:`mzv_holder` but ``mzv(()) == 1``."""
    if not index:
        with mpmath.workprec(prec):
            return mpmath.mpf(1)
    return mzv_holder(index, prec)


def eval_star(index: Index, prec: int = DEFAULT_PREC) -> mpmath.mpf:
    """Multiple zeta star value (weak inequalities)."""
    index = tuple(index)
    if not index or not is_admissible(index):
        raise IndexFormatError(f"star value of {index} diverges; need k1 >= 2")
    return eval_combo(star_expand(index), prec)


def eval_combo(combo: Combination, prec: int = DEFAULT_PREC) -> mpmath.mpf:
    """Evaluate a rational combination of admissible indices.

    The empty index counts as the constant 1.
    """
    prec = _check_prec(prec)
    for key in combo:
        if key and not is_admissible(key):
            raise IndexFormatError(f"non-admissible basis term {key} in combination")
    wbits = working_precision(prec)
    num = 0
    den = 1
    # common denominator keeps the sum in exact fixed point until the end
    for c in combo.keys():
        den = den * combo[c].denominator // math.gcd(den, combo[c].denominator)
    for key, c in combo.items():
        val = (1 << wbits) if not key else _holder_fixed(key, wbits)
        num += val * (c.numerator * (den // c.denominator))
    with mpmath.workprec(prec + 16):
        out = mpmath.ldexp(mpmath.mpf(num), -wbits) / den
    with mpmath.workprec(prec):
        return +out


# ---------------------------------------------------------------------------
# direct truncated summation (low-precision oracle)

_DIRECT_MAX_TERMS = 100_000_000
_CHUNK = 2_000_000


def _direct_tail_bound(index: Index, M: int) -> float:
    """Upper bound on the part of the series with ``m1 > M``.

    Uses ``sum_{m2 < m} m2^-k <= zeta(k)`` (k >= 2) or ``<= 1 + ln m`` (k = 1)
    for each inner variable, then integrates ``(1+ln t)^a t^-k1`` over
    ``[M, inf)`` in closed form.
    """
    k1 = index[0]
    a = sum(1 for k in index[1:] if k == 1)
    const = 1.0
    for k in index[1:]:
        if k >= 2:
            const *= float(mpmath.zeta(k))
    s = k1 - 1
    L = 1.0 + math.log(M)
    integral = sum(
        factorial(a) / factorial(a - j) * L ** (a - j) / s ** (j + 1) for j in range(a + 1)
    ) / M ** s
    return const * integral


def _direct_cutoff(index: Index, budget: float) -> int:
    M = 1000
    while _direct_tail_bound(index, M) > budget:
        M *= 2
        if M > _DIRECT_MAX_TERMS:
            return -1
    lo, hi = M // 2, M
    while hi - lo > max(1000, lo // 64):
        mid = (lo + hi) // 2
        if _direct_tail_bound(index, mid) > budget:
            lo = mid
        else:
            hi = mid
    return hi


def _direct_sum(index: Index, M: int) -> float:
    # strict partial sums, innermost variable first, chunked to bound memory
    levels = list(reversed(index))
    carry = [0.0] * len(levels)
    total = 0.0
    for start in range(1, M + 1, _CHUNK):
        m = np.arange(start, min(start + _CHUNK, M + 1), dtype=np.float64)
        inner = np.ones_like(m)
        for lvl, k in enumerate(levels):
            terms = inner * m ** (-float(k))
            if lvl == len(levels) - 1:
                total += math.fsum(terms)
                break
            csum = np.cumsum(terms) + carry[lvl]
            # strict inequality: shift by one so m_next > m_this
            shifted = np.empty_like(csum)
            shifted[0] = carry[lvl]
            shifted[1:] = csum[:-1]
            carry[lvl] = float(csum[-1])
            inner = shifted
    return total


def mzv_direct(index: Index, eps: float = 1e-6) -> float:
    """Truncated nested sum ``sum_{m1 > ... > mn} prod m_j^-k_j``.

    The cutoff comes from an explicit tail bound. When that cutoff is out of
    reach the dual index (same value by duality) is summed instead. Only
    ``eps >= 1e-6`` is supported; use :func:`mzv_holder` for precision.
    """
    index = tuple(index)
    if not index or not is_admissible(index):
        raise IndexFormatError(f"zeta{index} diverges; need k1 >= 2")
    if eps < 1e-6:
        raise ValueError("mzv_direct supports eps >= 1e-6 only; use mzv_holder")
    budget = eps / 2
    candidates = [index]
    if dual(index) != index:
        candidates.append(dual(index))
    best = None
    for cand in candidates:
        M = _direct_cutoff(cand, budget)
        if M > 0 and (best is None or M < best[1]):
            best = (cand, M)
    if best is None:
        raise ValueError(f"direct summation of {index} to {eps} needs too many terms")
    cand, M = best
    return _direct_sum(cand, M)


# ---------------------------------------------------------------------------
# Bernoulli numbers and even zeta values

@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """Bernoulli number ``B_n`` with ``B_1 = -1/2``.

    Uses the recurrence ``sum_{j=0}^{n} C(n+1, j) B_j = 0``.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(-1, 2)
    if n % 2:
        return Fraction(0)
    s = sum(math.comb(n + 1, j) * bernoulli(j) for j in range(n))
    return -s / (n + 1)


@dataclass(frozen=True)
class EvenZeta:
    """``zeta(argument) = ratio * pi^argument`` with ``ratio`` rational."""

    argument: int
    ratio: Fraction

    def value(self, prec: int = DEFAULT_PREC) -> mpmath.mpf:
        with mpmath.workprec(working_precision(prec)):
            v = mpmath.mpf(self.ratio.numerator) / self.ratio.denominator * pi(prec) ** self.argument
        with mpmath.workprec(prec):
            return +v


def zeta_even_exact(s: int) -> EvenZeta:
    """Euler's closed form ``zeta(2n) = (-1)^(n+1) B_2n (2 pi)^2n / (2 (2n)!)``."""
    if s < 2 or s % 2:
        raise ValueError("argument must be an even integer >= 2")
    n = s // 2
    ratio = (-1) ** (n + 1) * bernoulli(s) * 2 ** s / (2 * factorial(s))
    return EvenZeta(s, Fraction(ratio))
