"""Truncated power series in one and two variables over mpmath reals.

Used for the gamma-quotient generating function

    exp( sum_{n>=2} zeta(n) (X^n + Y^n - (X+Y)^n) / n )
        = Gamma(1-X) Gamma(1-Y) / Gamma(1-X-Y)

and the digamma / cotangent expansions built on it. Single zeta values on
this side come from ``mpmath.zeta``, independent of the Hoelder evaluator
used for multiple zeta values.
"""
from __future__ import annotations

from functools import lru_cache
from math import comb

import mpmath
import numpy as np

from .numerics import DEFAULT_PREC, euler_gamma, working_precision

__all__ = [
    "MAX_ORDER",
    "BiSeries",
    "single_zeta",
    "gamma_quotient_series",
    "psi_series",
    "psi_one_plus_series",
    "cot_combination_series",
    "theorem3_rhs",
    "kaneko_ohno_rhs",
    "mzv_difference_rhs",
]

MAX_ORDER = 64


@lru_cache(maxsize=None)
def single_zeta(n: int, prec: int) -> mpmath.mpf:
    with mpmath.workprec(working_precision(prec)):
        return mpmath.zeta(n)


def _zeros(shape):
    out = np.empty(shape, dtype=object)
    out.fill(mpmath.mpf(0))
    return out


class BiSeries:
    """Power series in X, Y truncated at total degree ``order``.

    ``coeffs[p, q]`` is the coefficient of ``X^p Y^q``; entries with
    ``p + q > order`` are kept at zero and never read.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs=None):
        self.order = order
        if coeffs is None:
            coeffs = _zeros((order + 1, order + 1))
        self.coeffs = coeffs
        self._truncate()

    def _truncate(self) -> None:
        N = self.order
        for p in range(N + 1):
            for q in range(N + 1 - p, N + 1):
                self.coeffs[p, q] = mpmath.mpf(0)

    @classmethod
    def constant(cls, order: int, c) -> "BiSeries":
        s = cls(order)
        s.coeffs[0, 0] = mpmath.mpf(c)
        return s

    @classmethod
    def from_x(cls, order: int, univariate) -> "BiSeries":
        """Embed a one-variable series ``f(X)``."""
        s = cls(order)
        for p, c in enumerate(univariate[: order + 1]):
            s.coeffs[p, 0] = c
        return s

    @classmethod
    def from_y(cls, order: int, univariate) -> "BiSeries":
        s = cls(order)
        for q, c in enumerate(univariate[: order + 1]):
            s.coeffs[0, q] = c
        return s

    def __getitem__(self, pq):
        p, q = pq
        if p + q > self.order:
            raise IndexError(f"coefficient X^{p} Y^{q} is beyond order {self.order}")
        return self.coeffs[p, q]

    def _same(self, other: "BiSeries") -> None:
        if other.order != self.order:
            raise ValueError("series orders differ")

    def __add__(self, other: "BiSeries") -> "BiSeries":
        self._same(other)
        return BiSeries(self.order, self.coeffs + other.coeffs)

    def __sub__(self, other: "BiSeries") -> "BiSeries":
        self._same(other)
        return BiSeries(self.order, self.coeffs - other.coeffs)

    def __neg__(self) -> "BiSeries":
        return BiSeries(self.order, -self.coeffs)

    def __mul__(self, other) -> "BiSeries":
        if not isinstance(other, BiSeries):
            return BiSeries(self.order, self.coeffs * mpmath.mpf(other))
        self._same(other)
        N = self.order
        out = _zeros((N + 1, N + 1))
        a, b = self.coeffs, other.coeffs
        for p in range(N + 1):
            for q in range(N + 1 - p):
                c = a[p, q]
                if c == 0:
                    continue
                # rows past the triangle hold zeros, so a block product is safe
                out[p:, q:] += c * b[: N + 1 - p, : N + 1 - q]
        return BiSeries(N, out)

    __rmul__ = __mul__

    def _homogeneous(self, d: int) -> list:
        return [self.coeffs[p, d - p] for p in range(d + 1)]

    @staticmethod
    def _convolve(a: list, b: list) -> list:
        out = [mpmath.mpf(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return out

    def _from_homogeneous(self, parts: list) -> "BiSeries":
        out = BiSeries(self.order)
        for d, part in enumerate(parts):
            for p, c in enumerate(part):
                out.coeffs[p, d - p] = c
        return out

    def exp(self) -> "BiSeries":
        """exp of a series with zero constant term.

        With ``F = exp(S)`` and the Euler operator ``E = X d/dX + Y d/dY``,
        ``E F = F E S`` gives ``F_d = (1/d) sum_j j S_j F_(d-j)`` on
        homogeneous parts.
        """
        if self.coeffs[0, 0] != 0:
            raise ValueError("exp needs a vanishing constant term")
        N = self.order
        S = [self._homogeneous(d) for d in range(N + 1)]
        F = [[mpmath.mpf(1)]]
        for d in range(1, N + 1):
            acc = [mpmath.mpf(0)] * (d + 1)
            for j in range(1, d + 1):
                for i, c in enumerate(self._convolve(S[j], F[d - j])):
                    acc[i] += j * c
            F.append([c / d for c in acc])
        return self._from_homogeneous(F)

    def log(self) -> "BiSeries":
        """log of a series with constant term 1 (inverse of :meth:`exp`)."""
        if self.coeffs[0, 0] != 1:
            raise ValueError("log needs constant term 1")
        N = self.order
        F = [self._homogeneous(d) for d in range(N + 1)]
        L = [[mpmath.mpf(0)]]
        for d in range(1, N + 1):
            acc = list(F[d])
            for j in range(1, d):
                for i, c in enumerate(self._convolve(L[j], F[d - j])):
                    acc[i] -= c * j / d
            L.append(acc)
        return self._from_homogeneous(L)

    def divide_by_x(self) -> "BiSeries":
        """``S / X`` for a series with no pure-Y terms; the order drops by one."""
        if any(self.coeffs[0, q] != 0 for q in range(self.order + 1)):
            raise ValueError("series has terms without X; division by X is singular")
        N = self.order - 1
        out = _zeros((N + 1, N + 1))
        out[:, :] = self.coeffs[1:, : N + 1]
        return BiSeries(N, out)

    def divide_by_y(self) -> "BiSeries":
        return self.swap().divide_by_x().swap()

    def swap(self) -> "BiSeries":
        """Exchange X and Y."""
        return BiSeries(self.order, self.coeffs.T.copy())

    def truncate(self, order: int) -> "BiSeries":
        if order > self.order:
            raise ValueError("cannot raise the truncation order")
        return BiSeries(order, self.coeffs[: order + 1, : order + 1].copy())

    def max_abs_diff(self, other: "BiSeries") -> mpmath.mpf:
        self._same(other)
        return max(abs(x) for x in (self.coeffs - other.coeffs).flat)


def _exponent_series(N: int, prec: int) -> BiSeries:
    s = BiSeries(N)
    for n in range(2, N + 1):
        z = single_zeta(n, prec) / n
        s.coeffs[n, 0] += z
        s.coeffs[0, n] += z
        for p in range(n + 1):
            s.coeffs[p, n - p] -= z * comb(n, p)
    return s


def gamma_quotient_series(N: int, prec: int = DEFAULT_PREC) -> BiSeries:
    """``Gamma(1-X) Gamma(1-Y) / Gamma(1-X-Y)`` to total degree ``N``.

    Coefficient ``[k, n]`` of ``1 - G`` (k, n >= 1) is ``zeta(k+1, 1^(n-1))``.
    """
    if N > MAX_ORDER:
        raise ValueError(f"order {N} exceeds the maximum {MAX_ORDER}")
    rounded = min(MAX_ORDER, -(-N // 8) * 8)
    return _gamma_quotient(rounded, prec).truncate(N)


@lru_cache(maxsize=32)
def _gamma_quotient(N: int, prec: int) -> BiSeries:
    with mpmath.workprec(working_precision(prec)):
        return _exponent_series(N, prec).exp()


def psi_series(N: int, prec: int = DEFAULT_PREC) -> list:
    """Taylor coefficients of ``psi(1 - X)`` up to ``X^N``.

    ``psi(1-X) = -gamma - sum_{k>=2} zeta(k) X^(k-1)``.
    """
    with mpmath.workprec(working_precision(prec)):
        out = [-euler_gamma(prec)]
        out += [-single_zeta(k, prec) for k in range(2, N + 2)]
    return out


def psi_one_plus_series(N: int, prec: int = DEFAULT_PREC) -> list:
    """Taylor coefficients of ``psi(1 + X)``, i.e. ``psi(1-X)`` at ``-X``."""
    with mpmath.workprec(working_precision(prec)):
        return [c if j % 2 == 0 else -c for j, c in enumerate(psi_series(N, prec))]


def cot_combination_series(N: int, prec: int = DEFAULT_PREC) -> list:
    """Regular part ``c(X)`` of ``pi cot(pi X) = 1/X + c(X)``.

    Formed as ``psi(1-X) - psi(1+X)``; Euler's constant cancels and the
    result is ``-2 sum_{l>=1} zeta(2l) X^(2l-1)``.
    """
    a = psi_series(N, prec)
    b = psi_one_plus_series(N, prec)
    with mpmath.workprec(working_precision(prec)):
        return [x - y for x, y in zip(a, b)]


def _order_for(k: int, n: int) -> int:
    return k + n + 1


def _finish(value, prec):
    with mpmath.workprec(prec):
        return +value


def theorem3_rhs(k: int, n: int, prec: int = DEFAULT_PREC) -> mpmath.mpf:
    """Coefficient of ``X^(k-1) Y^(n-1)`` in ``(1 - G) (c(X) - c(Y))``.

    Equivalently ``-2 (1 - G) sum_l zeta(2l) (X^(2l-1) - Y^(2l-1))``: the
    generating series of the differences of shuffle finite values at
    ``(k, 1^(n-1))`` and ``(n, 1^(k-1))``.
    """
    if k < 2 or n < 2:
        raise ValueError("need k, n >= 2")
    N = _order_for(k, n)
    with mpmath.workprec(working_precision(prec)):
        G = gamma_quotient_series(N, prec)
        one_minus_g = BiSeries.constant(N, 1) - G
        c = cot_combination_series(N, prec)
        odd = BiSeries.from_x(N, c) - BiSeries.from_y(N, c)
        value = (one_minus_g * odd)[k - 1, n - 1]
    return _finish(value, prec)


def kaneko_ohno_rhs(k: int, n: int, prec: int = DEFAULT_PREC) -> mpmath.mpf:
    """Coefficient of ``X^(k-1) Y^(n-1)`` in
    ``-psi(X) + psi(Y) - pi (cot(pi X) - cot(pi Y)) G``.

    The poles are regrouped: with ``psi(X) = psi(1+X) - 1/X`` and
    ``pi cot(pi X) = 1/X + c(X)`` the expression equals

        -psi(1+X) + psi(1+Y) + (1/X - 1/Y)(1 - G) - (c(X) - c(Y)) G

    and ``(1 - G)`` is divisible by ``XY``.
    """
    if k < 2 or n < 2:
        raise ValueError("need k, n >= 2")
    N = _order_for(k, n) + 1
    with mpmath.workprec(working_precision(prec)):
        G = gamma_quotient_series(N, prec)
        one_minus_g = BiSeries.constant(N, 1) - G
        pole_part = (one_minus_g.divide_by_x() - one_minus_g.divide_by_y())
        c = cot_combination_series(N, prec)
        psi_plus = psi_one_plus_series(N, prec)
        regular = (
            BiSeries.from_y(N, psi_plus) - BiSeries.from_x(N, psi_plus)
            - (BiSeries.from_x(N, c) - BiSeries.from_y(N, c)) * G
        )
        value = pole_part[k - 1, n - 1] + regular[k - 1, n - 1]
    return _finish(value, prec)


def mzv_difference_rhs(k: int, n: int, prec: int = DEFAULT_PREC) -> mpmath.mpf:
    """Coefficient of ``X^(k-1) Y^(n-1)`` in
    ``(1/Y - 1/X)(1 - G) + psi(1-X) - psi(1-Y)``.

    Generating series of ``zeta(k, 1^(n-1)) - zeta(n, 1^(k-1))``.
    """
    if k < 2 or n < 2:
        raise ValueError("need k, n >= 2")
    N = _order_for(k, n) + 1
    with mpmath.workprec(working_precision(prec)):
        G = gamma_quotient_series(N, prec)
        one_minus_g = BiSeries.constant(N, 1) - G
        psi = psi_series(N, prec)
        total = (one_minus_g.divide_by_y() - one_minus_g.divide_by_x())
        total = total + BiSeries.from_x(N - 1, psi) - BiSeries.from_y(N - 1, psi)
        value = total[k - 1, n - 1]
    return _finish(value, prec)
