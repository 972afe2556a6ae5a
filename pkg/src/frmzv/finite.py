"""Finite multiple zeta values: truncated harmonic sums modulo a prime."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterable, List

from .index import Index, depth, make_index, weight
from .products import stuffle

__all__ = [
    "FiniteZetaValue",
    "is_prime",
    "primes_between",
    "inverses_mod",
    "fmzv_mod_p",
    "stuffle_check_mod_p",
    "symmetric_check_mod_p",
    "sum_recursion_mod_p",
]


@dataclass(frozen=True)
class FiniteZetaValue:
    prime: int
    residue: int

    def __int__(self) -> int:
        return self.residue


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def primes_between(lo: int, hi: int) -> List[int]:
    return [p for p in range(lo, hi + 1) if is_prime(p)]


@lru_cache(maxsize=None)
def inverses_mod(p: int) -> tuple:
    """``inv[m] = m^-1 mod p`` for 1 <= m < p via ``inv[m] = -(p//m) inv[p % m]``."""
    inv = [0, 1] + [0] * (p - 2)
    for m in range(2, p):
        inv[m] = (-(p // m) * inv[p % m]) % p
    return tuple(inv)


def _check_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


@lru_cache(maxsize=None)
def _fmzv(index: Index, p: int) -> int:
    inv = inverses_mod(p)
    # inner[m] = sum over m > m_j > ... of the inner factors (innermost first)
    inner = [1] * (p + 1)
    for k in reversed(index):
        out = [0] * (p + 1)
        acc = 0
        for m in range(1, p):
            out[m] = acc
            acc = (acc + pow(inv[m], k, p) * inner[m]) % p
        out[p] = acc
        inner = out
    return inner[p] % p


def fmzv_mod_p(index: Iterable[int], p: int) -> FiniteZetaValue:
    """``sum_{p > m1 > ... > mn >= 1} prod m_j^-k_j mod p``."""
    index = make_index(index)
    _check_prime(p)
    if p <= depth(index):
        raise ValueError(f"prime {p} must exceed the depth {depth(index)}")
    return FiniteZetaValue(p, _fmzv(index, p))


def stuffle_check_mod_p(u: Iterable[int], v: Iterable[int], p: int) -> bool:
    u, v = make_index(u), make_index(v)
    _check_prime(p)
    if p <= depth(u) + depth(v):
        raise ValueError("prime must exceed depth(u) + depth(v)")
    lhs = _fmzv(u, p) * _fmzv(v, p) % p
    rhs = 0
    for term, c in stuffle(u, v).items():
        rhs += int(c) * _fmzv(term, p)
    return (lhs - rhs) % p == 0


def symmetric_check_mod_p(ks: Iterable[int], p: int) -> bool:
    """Sum over all orderings of ``ks`` vanishes mod p (needs ``p > weight + 1``)."""
    ks = make_index(ks)
    _check_prime(p)
    if p <= weight(ks) + 1:
        raise ValueError(f"prime {p} must exceed weight + 1 = {weight(ks) + 1}")
    total = sum(_fmzv(perm, p) for perm in permutations(ks))
    return total % p == 0


def sum_recursion_mod_p(k: int, n: int, i: int, p: int) -> int:
    """Three-term recursion of the fixed-weight sums, evaluated mod p.

    Returns ``(n-i) S(k,n,i) + i S(k,n,i+1) + (k-n) S(k,n-1,i) mod p`` for
    the finite values; zero for ``p > k + 1``.
    """
    from .symmetric import positive_compositions

    _check_prime(p)

    def S(kk, nn, ii):
        return sum(_fmzv(c, p) for c in positive_compositions(kk, nn) if c[ii - 1] >= 2)

    return ((n - i) * S(k, n, i) + i * S(k, n, i + 1) + (k - n) * S(k, n - 1, i)) % p
