"""Finite real (symmetric) multiple zeta values and their sum formulas.

``frmzv(mode, k)`` expands

    sum_{i=0}^{n} (-1)^(k1+...+ki) reg(ki, ..., k1) * reg(k_{i+1}, ..., kn)

with the chosen regularization, multiplies with the matching product, and
keeps the constant term. The result is a combination of admissible indices,
so every statement below is either exact rational bookkeeping or a real
number identity that :mod:`frmzv.numerics` can evaluate.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import comb, factorial
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import mpmath

from .algebra import Combination
from .index import Index, make_index
from .numerics import DEFAULT_PREC, eval_combo
from .products import star_expand, stuffle_combo
from .regularization import compositions, reg_harmonic, reg_shuffle_index

log = logging.getLogger(__name__)

__all__ = [
    "FrmzvExpansion",
    "frmzv",
    "frmzv_star_star",
    "hoffman_inversion_check",
    "concatenation_splittings",
    "symmetric_sum",
    "Monomial",
    "set_partitions",
    "partition_reduce",
    "substitute_single_values",
    "mod_zeta2_reduce",
    "ReductionError",
    "sum_S",
    "sum_S_star",
    "Residual",
    "recursion_residual",
    "sum_formula_rhs",
    "sum_formula_by_induction",
    "positive_compositions",
    "admissible_indices",
    "zeta2_ideal_witness",
    "zeta2_ideal_products",
    "zeta2_ideal_relation",
]


@dataclass(frozen=True)
class FrmzvExpansion:
    """Constant term of a finite real MZV plus the T-degree seen before extraction."""

    value: Combination
    t_degree: int = 0

    def __add__(self, other: "FrmzvExpansion") -> "FrmzvExpansion":
        return FrmzvExpansion(self.value + other.value, max(self.t_degree, other.t_degree))

    def scale(self, c) -> "FrmzvExpansion":
        return FrmzvExpansion(self.value * c, self.t_degree)

    def evaluate(self, prec: int = DEFAULT_PREC) -> mpmath.mpf:
        return eval_combo(self.value, prec)


_REG = {"harmonic": reg_harmonic, "shuffle": reg_shuffle_index}


@lru_cache(maxsize=None)
def _frmzv(mode: str, index: Index) -> FrmzvExpansion:
    reg = _REG[mode]
    total = None
    sign_exp = 0
    for i in range(len(index) + 1):
        if i:
            sign_exp += index[i - 1]
        left = reg(index[:i][::-1])
        right = reg(index[i:])
        term = (left * right).scale((-1) ** sign_exp)
        total = term if total is None else total + term
    degree = max(total.degree, 0)
    if degree > 0:
        log.warning("T-part of %s finite value of %s did not cancel (degree %d)",
                    mode, index, degree)
    return FrmzvExpansion(total[0], degree)


def frmzv(mode: str, index: Sequence[int]) -> FrmzvExpansion:
    """Harmonic (``"harmonic"``) or shuffle (``"shuffle"``) finite real MZV.

    >>> frmzv("shuffle", (2, 1)).value
    3*(2,1)
    """
    if mode == "star":
        mode = "harmonic"
    if mode not in _REG:
        raise ValueError(f"unknown mode {mode!r}; use harmonic or shuffle")
    return _frmzv(mode, make_index(index))


def frmzv_star_star(index: Sequence[int]) -> FrmzvExpansion:
    """Sum of harmonic finite values over all comma/plus coarsenings."""
    total = FrmzvExpansion(Combination())
    for term, c in star_expand(make_index(index)).items():
        total = total + frmzv("harmonic", term).scale(c)
    return total


def concatenation_splittings(index: Index) -> Iterator[Tuple[Index, ...]]:
    """Ways to cut ``index`` into consecutive nonempty blocks."""
    n = len(index)
    if n == 0:
        yield ()
        return
    for mask in range(1 << (n - 1)):
        blocks = []
        start = 0
        for pos in range(1, n):
            if mask >> (pos - 1) & 1:
                blocks.append(index[start:pos])
                start = pos
        blocks.append(index[start:])
        yield tuple(blocks)


def hoffman_inversion_check(index: Sequence[int], max_depth: int = 6,
                            prec: int = DEFAULT_PREC, tol: float = 1e-25) -> bool:
    """Check the star-variant inversion formula at ``index``.

    Compares the star-star finite value of the reversed index with
    ``(-1)^n sum (-1)^l prod frmzv(block)`` over concatenation splittings,
    products taken with the stuffle product. Falls back to a numeric
    comparison if the combinations differ.
    """
    index = make_index(index)
    n = len(index)
    if n > max_depth:
        raise ValueError(f"depth {n} exceeds the configured bound {max_depth}")
    lhs = frmzv_star_star(index[::-1]).value
    rhs = Combination()
    for blocks in concatenation_splittings(index):
        prod = Combination.basis(())
        for b in blocks:
            prod = stuffle_combo(prod, frmzv("harmonic", b).value)
        rhs = rhs + prod * (-1) ** len(blocks)
    rhs = rhs * (-1) ** n
    if lhs == rhs:
        return True
    diff = eval_combo(lhs - rhs, prec)
    return abs(diff) < tol


def symmetric_sum(ks: Iterable[int]) -> FrmzvExpansion:
    """Sum of harmonic finite values over all n! orderings of ``ks``."""
    ks = make_index(ks)
    total = FrmzvExpansion(Combination())
    for perm in permutations(ks):
        total = total + frmzv("harmonic", perm)
    return total


class Monomial(tuple):
    """Product of single-zeta symbols ``Z(m1) Z(m2) ...`` (sorted arguments)."""

    def __new__(cls, args: Iterable[int] = ()):
        return super().__new__(cls, sorted(args))

    def __str__(self) -> str:
        return "*".join(f"Z({m})" for m in self) if self else "1"

    __repr__ = __str__


class ReductionError(RuntimeError):
    """Partition expansion disagrees with the direct symmetric sum."""


def set_partitions(items: Sequence) -> Iterator[List[list]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for j in range(len(part)):
            yield part[:j] + [[first] + part[j]] + part[j + 1:]


def partition_reduce(ks: Iterable[int], validate: bool = True) -> Combination:
    """Express the symmetric sum as a polynomial in single finite values.

    Returns a combination of :class:`Monomial` keys, ``Z(m)`` standing for
    the harmonic finite value of the depth-one index ``(m)``. The
    coefficient of a set partition is ``prod_B (-1)^(|B|-1) (|B|-1)!``.
    With ``validate`` the expansion is substituted back and compared
    exactly with :func:`symmetric_sum`.
    """
    ks = make_index(ks)
    acc: Dict[Monomial, int] = {}
    for part in set_partitions(list(range(len(ks)))):
        coeff = 1
        for block in part:
            coeff *= (-1) ** (len(block) - 1) * factorial(len(block) - 1)
        mono = Monomial(sum(ks[j] for j in block) for block in part)
        acc[mono] = acc.get(mono, 0) + coeff
    poly = Combination(acc)
    if validate:
        direct = symmetric_sum(ks).value
        if substitute_single_values(poly) != direct:
            raise ReductionError(f"partition expansion of {ks} does not match the symmetric sum")
    return poly


def substitute_single_values(poly: Combination) -> Combination:
    """Replace ``Z(m)`` by the harmonic finite value of ``(m)``; multiply by stuffle."""
    out = Combination()
    for mono, c in poly.items():
        prod = Combination.basis(())
        for m in mono:
            prod = stuffle_combo(prod, frmzv("harmonic", (m,)).value)
        out = out + prod * c
    return out


def mod_zeta2_reduce(poly: Combination) -> Combination:
    """Drop monomials that contain any single value ``Z(m)``.

    ``Z(m) = (1 + (-1)^m) zeta(m)`` vanishes for odd ``m`` and is a rational
    multiple of ``pi^m``, hence of ``zeta(2)``, for even ``m``.
    """
    return Combination((mono, c) for mono, c in poly.items() if len(mono) == 0)


def positive_compositions(k: int, n: int) -> Iterator[Index]:
    for a in compositions(k - n, n):
        yield tuple(x + 1 for x in a)


def _check_kni(k: int, n: int, i: int) -> None:
    if not (1 <= i <= n <= k - 1):
        raise ValueError(f"need 1 <= i <= n <= k-1, got (k, n, i) = ({k}, {n}, {i})")


def sum_S(k: int, n: int, i: int) -> FrmzvExpansion:
    """Sum of harmonic finite values over weight-k depth-n indices with k_i >= 2."""
    _check_kni(k, n, i)
    total = FrmzvExpansion(Combination())
    for c in positive_compositions(k, n):
        if c[i - 1] >= 2:
            total = total + frmzv("harmonic", c)
    return total


def sum_S_star(k: int, n: int, i: int) -> FrmzvExpansion:
    """As :func:`sum_S` with the star-star finite values."""
    _check_kni(k, n, i)
    total = FrmzvExpansion(Combination())
    for c in positive_compositions(k, n):
        if c[i - 1] >= 2:
            total = total + frmzv_star_star(c)
    return total


@dataclass(frozen=True)
class Residual:
    combination: Combination
    exact_zero: bool
    numeric: Optional[mpmath.mpf] = field(default=None, compare=False)

    @property
    def magnitude(self) -> float:
        return 0.0 if self.exact_zero else float(abs(self.numeric))


def recursion_residual(k: int, n: int, i: int, variant: str = "plain",
                       prec: int = DEFAULT_PREC) -> Residual:
    """``(n-i) S(k,n,i) + i S(k,n,i+1) + (k-n) S(k,n-1,i)``.

    The star variant flips the sign of the last term.
    """
    if not (2 <= i + 1 <= n <= k - 1):
        raise ValueError(f"need 2 <= i+1 <= n <= k-1, got ({k}, {n}, {i})")
    S = sum_S if variant == "plain" else sum_S_star
    last = (k - n) if variant == "plain" else -(k - n)
    combo = (S(k, n, i).value * (n - i) + S(k, n, i + 1).value * i
             + S(k, n - 1, i).value * last)
    if not combo:
        return Residual(combo, True, None)
    return Residual(combo, False, eval_combo(combo, prec))


def sum_formula_rhs(k: int, n: int, i: int, variant: str = "plain") -> Fraction:
    """Rational coefficient of ``zeta(k)`` on the right of the sum formula."""
    _check_kni(k, n, i)
    if variant == "plain":
        val = comb(k - 1, i - 1) + (-1) ** n * comb(k - 1, n - i)
    elif variant == "star":
        val = (-1) ** n * comb(k - 1, i - 1) + comb(k - 1, n - i)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return Fraction((-1) ** (i - 1) * val)


def sum_formula_by_induction(k: int, variant: str = "plain") -> Dict[Tuple[int, int], Fraction]:
    """Coefficients ``c(n, i)`` of ``zeta(k)`` by backward induction on n.

    Starts from ``c(k-1, i) = (-1)^(i-1) C(k, i)`` and solves the
    three-term recursion for ``c(n-1, i)``.
    """
    coeff: Dict[Tuple[int, int], Fraction] = {}
    for i in range(1, k):
        coeff[(k - 1, i)] = Fraction((-1) ** (i - 1) * comb(k, i))
    sign = 1 if variant == "plain" else -1
    for n in range(k - 1, 1, -1):
        for i in range(1, n):
            # (n-i) c(n,i) + i c(n,i+1) + sign (k-n) c(n-1,i) = 0
            coeff[(n - 1, i)] = -((n - i) * coeff[(n, i)] + i * coeff[(n, i + 1)]) / (sign * (k - n))
    return coeff


def admissible_indices(w: int) -> List[Index]:
    """All admissible indices of weight ``w`` (the empty index for w = 0)."""
    if w == 0:
        return [()]
    out = []
    for n in range(1, w):
        out.extend(c for c in positive_compositions(w, n) if c[0] >= 2)
    return out


def zeta2_ideal_witness(combo: Combination) -> Optional[Dict[int, Combination]]:
    """Write a homogeneous combination as ``sum_m (m) * C_m`` over even ``m``.

    ``*`` is the stuffle product and each ``C_m`` is a combination of
    admissible indices of weight ``w - m``. Such a decomposition shows that
    the real value lies in the ideal generated by ``zeta(2)``, because
    ``zeta(m)`` is a rational multiple of ``zeta(2)^(m/2)``. Returns ``None``
    when no decomposition exists; any witness returned has been re-expanded
    and compared exactly.
    """
    import sympy

    if not combo:
        return {}
    weights = {sum(key) for key in combo}
    if len(weights) != 1:
        raise ValueError("combination is not homogeneous in weight")
    w = weights.pop()
    columns = []
    for m in range(2, w + 1, 2):
        for b in admissible_indices(w - m):
            columns.append((m, b, stuffle_combo(Combination.basis((m,)), Combination.basis(b))))
    rows = sorted({key for *_, c in columns for key in c} | set(combo.keys()))
    row_of = {key: r for r, key in enumerate(rows)}
    A = sympy.zeros(len(rows), len(columns))
    for j, (_, _, c) in enumerate(columns):
        for key, v in c.items():
            A[row_of[key], j] = sympy.Rational(v.numerator, v.denominator)
    rhs = sympy.Matrix([sympy.Rational(combo[key].numerator, combo[key].denominator) for key in rows])
    try:
        sol, params = A.gauss_jordan_solve(rhs)
    except ValueError:
        return None
    sol = sol.subs({t: 0 for t in params})
    witness: Dict[int, Combination] = {}
    for (m, b, _), x in zip(columns, sol):
        if x != 0:
            x = Fraction(int(x.p), int(x.q))
            witness[m] = witness.get(m, Combination()) + Combination.basis(b, x)
    rebuilt = Combination()
    for m, c in witness.items():
        rebuilt = rebuilt + stuffle_combo(Combination.basis((m,)), c)
    if rebuilt != combo:
        raise ReductionError("ideal witness failed to reproduce the combination")
    return witness


def _odd_partitions(total: int, largest: int) -> Iterator[Tuple[int, ...]]:
    if total == 0:
        yield ()
        return
    for part in range(min(total, largest), 2, -1):
        if part % 2:
            for rest in _odd_partitions(total - part, part):
                yield (part,) + rest


def zeta2_ideal_products(w: int) -> List[Tuple[int, ...]]:
    """Products ``zeta(2)^a zeta(o1) zeta(o2) ...`` of weight ``w`` with ``a >= 1``.

    Each tuple lists the single-zeta arguments. Together they span the weight-w
    part of the ideal generated by ``zeta(2)`` for ``w <= 9``; from weight 10
    on a depth-two generator is also needed, so larger weights are refused.
    """
    if w > 9:
        raise ValueError("the product basis is only complete up to weight 9")
    out = []
    for a in range(1, w // 2 + 1):
        for odd in _odd_partitions(w - 2 * a, w):
            out.append((2,) * a + odd)
    return out


def zeta2_ideal_relation(value, w: int, prec: int = 256) -> Optional[List[int]]:
    """Integer relation showing that a real number of weight ``w`` is in the ideal.

    Runs PSLQ on ``[value, p_1, ..., p_r]`` with the products from
    :func:`zeta2_ideal_products`. Returns the relation (leading entry
    nonzero) or ``None``. A value below ``2^-(prec - 16)`` counts as zero
    and gives ``[1]``.
    """
    with mpmath.workprec(prec):
        value = mpmath.mpf(value)
        if abs(value) < mpmath.mpf(2) ** -(prec - 16):
            return [1]
        products = []
        for args in zeta2_ideal_products(w):
            p = mpmath.mpf(1)
            for s in args:
                p *= mpmath.zeta(s)
            products.append(p)
        if not products:
            return None
        rel = mpmath.pslq([value] + products, maxcoeff=10 ** 8, maxsteps=10 ** 5)
    if rel is None or rel[0] == 0:
        return None
    return [int(r) for r in rel]
