
import mpmath
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from frmzv.algebra import Combination
from frmzv.numerics import eval_combo
from frmzv.products import stuffle, stuffle_combo
from frmzv.symmetric import (
    Monomial,
    admissible_indices,
    concatenation_splittings,
    frmzv,
    frmzv_star_star,
    hoffman_inversion_check,
    mod_zeta2_reduce,
    partition_reduce,
    positive_compositions,
    recursion_residual,
    set_partitions,
    substitute_single_values,
    sum_formula_by_induction,
    sum_formula_rhs,
    sum_S,
    symmetric_sum,
    zeta2_ideal_products,
    zeta2_ideal_relation,
    zeta2_ideal_witness,
)

indices = st.lists(st.integers(1, 3), min_size=1, max_size=3).map(tuple)
CASES = settings(max_examples=60, deadline=None)


def nested_sum(index, M):
    if not index:
        return 1.0
    m = np.arange(1, M + 1, dtype=np.float64)
    inner = np.ones_like(m)
    for k in reversed(index[1:]):
        inner = np.concatenate(([0.0], np.cumsum(inner * m ** (-float(k)))[:-1]))
    return float(np.sum(inner * m ** (-float(index[0]))))


def truncated_symmetric(index, M):
    """Defining alternating sum with every factor truncated at M."""
    total = 0.0
    for i in range(len(index) + 1):
        sign = (-1) ** sum(index[:i])
        total += sign * nested_sum(index[:i][::-1], M) * nested_sum(index[i:], M)
    return total


def test_golden_values():
    assert frmzv("shuffle", (2, 1)).value == Combination.basis((2, 1), 3)
    assert frmzv("harmonic", (1,)).value == 0
    assert frmzv("harmonic", (3,)).value == 0
    assert frmzv("harmonic", (4,)).value == Combination.basis((4,), 2)
    assert frmzv("star", (2, 1)) == frmzv("harmonic", (2, 1))
    with pytest.raises(ValueError):
        frmzv("bogus", (2,))


@pytest.mark.parametrize("index", [(1, 1), (1, 2), (2, 1), (1, 1, 2), (2, 1, 1), (1, 2, 1), (3, 1)])
def test_harmonic_value_matches_truncated_sums(index):
    # the T-dependence cancels, so the truncated alternating sum converges
    got = truncated_symmetric(index, 200_000)
    assert got == pytest.approx(float(frmzv("harmonic", index).evaluate(64)), abs=2e-3)


@CASES
@given(indices)
def test_reversal_parity(index):
    for mode in ("harmonic", "shuffle"):
        a = frmzv(mode, index[::-1]).value
        assert a == frmzv(mode, index).value * (-1) ** sum(index)


@CASES
@given(indices)
def test_t_parts_cancel(index):
    assert frmzv("harmonic", index).t_degree == 0
    assert frmzv("shuffle", index).t_degree == 0


@CASES
@given(indices, indices)
def test_harmonic_product_rule(u, v):
    lhs = stuffle_combo(frmzv("harmonic", u).value, frmzv("harmonic", v).value)
    rhs = Combination()
    for w, c in stuffle(u, v).items():
        rhs = rhs + frmzv("harmonic", w).value * c
    assert lhs == rhs


def test_harmonic_and_shuffle_agree_mod_zeta2_in_weight_3():
    # weight 3 holds no multiple of zeta(2): the two versions coincide as reals
    for index in [(2, 1), (1, 2), (1, 1, 1), (3,)]:
        d = frmzv("harmonic", index).value - frmzv("shuffle", index).value
        assert abs(eval_combo(d, 128)) < 1e-35


def test_star_star_definition():
    got = frmzv_star_star((2, 1)).value
    want = frmzv("harmonic", (2, 1)).value + frmzv("harmonic", (3,)).value
    assert got == want


def test_concatenation_splittings():
    got = sorted(concatenation_splittings((1, 2, 3)))
    assert got == sorted([((1, 2, 3),), ((1,), (2, 3)), ((1, 2), (3,)), ((1,), (2,), (3,))])


@pytest.mark.parametrize("index", [(2, 1), (1, 1, 2), (3,), (1, 2, 3)])
def test_hoffman_inversion(index):
    assert hoffman_inversion_check(index)


def test_set_partitions_bell_numbers():
    assert [sum(1 for _ in set_partitions(list(range(n)))) for n in range(6)] == [1, 1, 2, 5, 15, 52]


def test_partition_reduce():
    poly = partition_reduce((2, 3))
    assert poly == Combination({Monomial((2, 3)): 1, Monomial((5,)): -1})
    assert str(Monomial((3, 2))) == "Z(2)*Z(3)"
    assert mod_zeta2_reduce(poly) == 0
    assert substitute_single_values(poly) == symmetric_sum((2, 3)).value


def test_partition_reduce_depth4():
    poly = partition_reduce((1, 1, 2, 3))
    assert mod_zeta2_reduce(poly) == 0
    assert sum(1 for _ in poly) <= 15


def test_symmetric_sum_depth2():
    # Z(k1) Z(k2) - Z(k1+k2) with Z(m) = (1 + (-1)^m)(m)
    got = symmetric_sum((2, 2)).value
    z2 = Combination.basis((2,), 2)
    want = stuffle_combo(z2, z2) - Combination.basis((4,), 2)
    assert got == want


def test_sum_formula_rhs_values():
    assert sum_formula_rhs(3, 1, 1) == 0
    assert sum_formula_rhs(3, 2, 1) == 1 + 2
    with pytest.raises(ValueError):
        sum_formula_rhs(3, 3, 1)
    with pytest.raises(ValueError):
        sum_formula_rhs(5, 2, 1, "bogus")


@pytest.mark.parametrize("k", [3, 5, 7])
@pytest.mark.parametrize("variant", ["plain", "star"])
def test_sum_formula_by_induction(k, variant):
    coeffs = sum_formula_by_induction(k, variant)
    for (n, i), c in coeffs.items():
        assert c == sum_formula_rhs(k, n, i, variant)


def test_sum_of_depth1_values():
    assert sum_S(5, 1, 1).value == 0
    assert sum_S(4, 1, 1).value == Combination.basis((4,), 2)


def test_recursion_residual_is_multiple_of_zeta2():
    r = recursion_residual(4, 3, 1)
    assert r.exact_zero and r.magnitude == 0
    r = recursion_residual(4, 2, 1)
    assert not r.exact_zero
    with mpmath.workprec(128):
        assert abs(r.numeric - 10 * mpmath.zeta(4)) < 1e-30
    assert zeta2_ideal_witness(r.combination) is not None


def test_witness_rejects_non_members():
    assert zeta2_ideal_witness(Combination.basis((3,))) is None
    assert zeta2_ideal_witness(Combination()) == {}
    w = zeta2_ideal_witness(Combination({(4,): 2, (2, 2): 4}))
    assert w is not None
    with pytest.raises(ValueError):
        zeta2_ideal_witness(Combination({(3,): 1, (2,): 1}))


def test_zeta2_ideal_relation():
    assert zeta2_ideal_products(5) == [(2, 3)]
    assert sorted(zeta2_ideal_products(7)) == [(2, 2, 3), (2, 5)]
    with mpmath.workprec(256):
        member = 3 * mpmath.zeta(2) * mpmath.zeta(3)
        assert zeta2_ideal_relation(member, 5) is not None
        assert zeta2_ideal_relation(mpmath.zeta(5), 5) is None
        assert zeta2_ideal_relation(mpmath.zeta(3), 3) is None
    with pytest.raises(ValueError):
        zeta2_ideal_products(10)


def test_admissible_indices_count():
    # 2^(w-2) admissible indices of weight w
    assert [len(admissible_indices(w)) for w in range(2, 9)] == [2 ** (w - 2) for w in range(2, 9)]
    assert admissible_indices(0) == [()]
    assert sorted(positive_compositions(4, 2)) == [(1, 3), (2, 2), (3, 1)]


def _all_indices(w):
    return [c for n in range(1, w + 1) for c in positive_compositions(w, n)]


def test_t_cancellation_exhaustive():
    for w in range(1, 9):
        for index in _all_indices(w):
            for mode in ("harmonic", "shuffle"):
                assert frmzv(mode, index).t_degree == 0, (mode, index)


def test_all_ones():
    # shuffle version vanishes; harmonic version is (-1)^m zeta({2}^m) for n = 2m
    for n in range(1, 9):
        assert frmzv("shuffle", (1,) * n).value == 0
        harmonic = frmzv("harmonic", (1,) * n).value
        if n % 2:
            assert harmonic == 0
        else:
            assert harmonic == Combination.basis((2,) * (n // 2), (-1) ** (n // 2))
            assert zeta2_ideal_witness(harmonic) is not None


def test_harmonic_product_rule_exhaustive():
    idx = [i for w in range(1, 7) for i in _all_indices(w)]
    for u in idx:
        for v in idx:
            if u <= v and sum(u) + sum(v) <= 7:
                lhs = stuffle_combo(frmzv("harmonic", u).value, frmzv("harmonic", v).value)
                rhs = Combination()
                for w, c in stuffle(u, v).items():
                    rhs = rhs + frmzv("harmonic", w).value * c
                assert lhs == rhs, (u, v)
