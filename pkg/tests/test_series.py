import mpmath
import pytest

from frmzv.numerics import eval_star, mzv_holder
from frmzv.series import (
    BiSeries,
    cot_combination_series,
    gamma_quotient_series,
    kaneko_ohno_rhs,
    mzv_difference_rhs,
    psi_series,
    theorem3_rhs,
)


def test_gamma_quotient_against_direct_evaluation():
    N = 40
    G = gamma_quotient_series(N, 128)
    x, y = mpmath.mpf("0.1"), mpmath.mpf("0.07")
    with mpmath.workprec(128):
        approx = sum(G[p, q] * x ** p * y ** q
                     for p in range(N + 1) for q in range(N + 1 - p))
        exact = mpmath.gamma(1 - x) * mpmath.gamma(1 - y) / mpmath.gamma(1 - x - y)
        assert abs(approx - exact) < mpmath.mpf(10) ** -30


def test_gamma_quotient_coefficients():
    G = gamma_quotient_series(8, 128)
    with mpmath.workprec(128):
        assert G[0, 0] == 1
        assert abs(-G[1, 1] - mzv_holder((2,))) < 1e-35
        assert abs(-G[2, 3] - mzv_holder((3, 1, 1))) < 1e-35
        assert all(G[0, q] == 0 for q in range(1, 9))
    with pytest.raises(IndexError):
        G[5, 5]
    with pytest.raises(ValueError):
        gamma_quotient_series(1000)


def test_exp_log_roundtrip():
    with mpmath.workprec(128):
        s = BiSeries(6)
        s.coeffs[1, 0] = mpmath.mpf(1) / 3
        s.coeffs[0, 2] = mpmath.mpf(-2)
        s.coeffs[1, 1] = mpmath.mpf(5)
        back = s.exp().log()
        assert back.max_abs_diff(s) < 1e-35


def test_multiplication_and_division():
    with mpmath.workprec(128):
        x = BiSeries.from_x(4, [0, 1])
        y = BiSeries.from_y(4, [0, 1])
        xy = x * y
        assert xy[1, 1] == 1 and xy[0, 0] == 0
        assert xy.divide_by_x().max_abs_diff(y.truncate(3)) == 0
        assert xy.divide_by_y().max_abs_diff(x.truncate(3)) == 0
        with pytest.raises(ValueError):
            y.divide_by_x()
        assert (x + y).swap().max_abs_diff(x + y) == 0
        with pytest.raises(ValueError):
            x + BiSeries(3)


def test_cot_combination():
    c = cot_combination_series(7, 128)
    with mpmath.workprec(128):
        assert c[0] == 0
        assert abs(c[1] + 2 * mpmath.zeta(2)) < 1e-35
        assert c[2] == 0
        # pi cot(pi x) - 1/x at a sample point
        x = mpmath.mpf("0.01")
        approx = sum(cj * x ** j for j, cj in enumerate(c))
        assert abs(approx - (mpmath.pi * mpmath.cot(mpmath.pi * x) - 1 / x)) < 1e-14


def test_psi_series():
    with mpmath.workprec(128):
        p = psi_series(3, 128)
        assert abs(p[0] + mpmath.euler) < 1e-35
        assert abs(p[2] + mpmath.zeta(3)) < 1e-35


@pytest.mark.parametrize("k,n", [(2, 3), (3, 2), (4, 2), (3, 5)])
def test_mzv_difference(k, n):
    with mpmath.workprec(128):
        lhs = mzv_holder((k,) + (1,) * (n - 1)) - mzv_holder((n,) + (1,) * (k - 1))
        assert abs(lhs - mzv_difference_rhs(k, n)) < 1e-30


@pytest.mark.parametrize("k,n", [(2, 3), (3, 2), (4, 3), (5, 2)])
def test_kaneko_ohno(k, n):
    with mpmath.workprec(128):
        lhs = ((-1) ** k * eval_star((k,) + (1,) * (n - 1))
               - (-1) ** n * eval_star((n,) + (1,) * (k - 1)))
        assert abs(lhs - kaneko_ohno_rhs(k, n)) < 1e-30


def test_theorem3_rhs_antisymmetric_and_spot():
    with mpmath.workprec(128):
        assert abs(theorem3_rhs(3, 2) + theorem3_rhs(2, 3)) < 1e-35
        assert abs(theorem3_rhs(3, 2) + 2 * mpmath.zeta(2) ** 2) < 1e-30
        assert theorem3_rhs(3, 3) == 0
    with pytest.raises(ValueError):
        theorem3_rhs(1, 2)


def _sample(order, seed):
    import random
    rng = random.Random(seed)
    s = BiSeries(order)
    for p in range(order + 1):
        for q in range(order + 1 - p):
            s.coeffs[p, q] = mpmath.mpf(rng.randint(-9, 9)) / rng.randint(1, 9)
    return s


def test_multiplication_associative():
    with mpmath.workprec(128):
        a, b, c = (_sample(7, s) for s in (1, 2, 3))
        assert ((a * b) * c).max_abs_diff(a * (b * c)) < 1e-30
        assert (a * b).max_abs_diff(b * a) < 1e-30


def test_exp_of_log_is_identity_on_gamma_quotient():
    with mpmath.workprec(160):
        G = gamma_quotient_series(16, 128)
        assert G.log().exp().max_abs_diff(G) < 1e-30
