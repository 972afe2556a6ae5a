from fractions import Fraction
from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from frmzv.algebra import Combination
from frmzv.index import index_to_word
from frmzv.products import (
    indices_to_words,
    shuffle,
    shuffle_indices,
    star_expand,
    stuffle,
    stuffle_combo,
    words_to_indices,
)

indices = st.lists(st.integers(1, 4), min_size=0, max_size=3).map(tuple)
words = st.text(alphabet="xy", max_size=6)
CASES = settings(max_examples=200, deadline=None)


def truncated_sum(index, M):
    """Exact sum over M > m1 > ... > mn >= 1."""
    total = Fraction(0)
    for ms in combinations(range(M - 1, 0, -1), len(index)):
        term = Fraction(1)
        for m, k in zip(ms, index):
            term /= m ** k
        total += term
    return total


def brute_shuffle(u, v):
    """Interleavings enumerated by the positions taken by ``u``."""
    n = len(u) + len(v)
    acc = {}
    for pos in combinations(range(n), len(u)):
        out, iu, iv = [], 0, 0
        for j in range(n):
            if j in pos:
                out.append(u[iu])
                iu += 1
            else:
                out.append(v[iv])
                iv += 1
        w = "".join(out)
        acc[w] = acc.get(w, 0) + 1
    return Combination(acc)


def test_golden_stuffle():
    assert stuffle((2,), (2,)) == Combination({(2, 2): 2, (4,): 1})
    assert stuffle((1,), (2,)) == Combination({(1, 2): 1, (2, 1): 1, (3,): 1})


def test_golden_shuffle():
    got = words_to_indices(shuffle("y", "xy"))
    assert got == Combination({(1, 2): 1, (2, 1): 2})
    got = shuffle_indices((1, 1), (2,))
    assert got == Combination({(2, 1, 1): 3, (1, 2, 1): 2, (1, 1, 2): 1})


def test_empty_is_unit():
    assert stuffle((), (3, 1)) == Combination.basis((3, 1))
    assert shuffle("", "xy") == Combination.basis("xy")


@CASES
@given(indices, indices)
def test_stuffle_matches_truncated_sums(u, v):
    # the harmonic product holds exactly for every truncation of the sums
    M = 7
    rhs = sum((c * truncated_sum(w, M) for w, c in stuffle(u, v).items()), Fraction(0))
    assert truncated_sum(u, M) * truncated_sum(v, M) == rhs


@CASES
@given(words, words)
def test_shuffle_matches_brute_force(u, v):
    assert shuffle(u, v) == brute_shuffle(u, v)
    assert shuffle(u, v).coefficient_sum() == comb(len(u) + len(v), len(u))


@CASES
@given(indices, indices, indices)
def test_stuffle_commutative_associative(a, b, c):
    assert stuffle(a, b) == stuffle(b, a)
    left = stuffle_combo(stuffle(a, b), Combination.basis(c))
    right = stuffle_combo(Combination.basis(a), stuffle(b, c))
    assert left == right


@CASES
@given(indices, indices)
def test_shuffle_indices_consistent_with_words(u, v):
    w = shuffle(index_to_word(u), index_to_word(v))
    assert indices_to_words(shuffle_indices(u, v)) == w


@pytest.mark.parametrize("index,expected", [
    ((2,), {(2,): 1}),
    ((2, 1), {(2, 1): 1, (3,): 1}),
    ((1, 1, 1), {(1, 1, 1): 1, (2, 1): 1, (1, 2): 1, (3,): 1}),
])
def test_star_expand(index, expected):
    assert star_expand(index) == Combination(expected)


@CASES
@given(st.lists(st.integers(1, 4), min_size=1, max_size=4).map(tuple))
def test_star_expand_matches_weak_sums(index):
    # weak inequalities m1 >= ... >= mn, brute force
    M = 6
    from itertools import combinations_with_replacement
    weak = Fraction(0)
    for ms in combinations_with_replacement(range(M - 1, 0, -1), len(index)):
        term = Fraction(1)
        for m, k in zip(ms, index):
            term /= m ** k
        weak += term
    rhs = sum((c * truncated_sum(w, M) for w, c in star_expand(index).items()), Fraction(0))
    assert weak == rhs


def quasi_shuffle_count(m, n):
    # words of length m and n merged with optional contractions
    if m == 0 or n == 0:
        return 1
    return (quasi_shuffle_count(m - 1, n) + quasi_shuffle_count(m, n - 1)
            + quasi_shuffle_count(m - 1, n - 1))


@CASES
@given(indices, indices)
def test_term_counts_and_weight(u, v):
    st_ = stuffle(u, v)
    assert st_.coefficient_sum() == quasi_shuffle_count(len(u), len(v))
    assert all(sum(w) == sum(u) + sum(v) for w in st_)
    assert all(sum(w) == sum(u) + sum(v) for w in shuffle_indices(u, v))


def test_numeric_homomorphisms():
    import mpmath
    from frmzv.numerics import eval_combo, mzv_holder
    from frmzv.symmetric import admissible_indices

    adm = [i for w in range(2, 7) for i in admissible_indices(w)]
    with mpmath.workprec(128):
        for u in adm:
            for v in adm:
                if u <= v and sum(u) + sum(v) <= 8:
                    prod = mzv_holder(u) * mzv_holder(v)
                    assert abs(prod - eval_combo(stuffle(u, v))) < 1e-25
                    assert abs(prod - eval_combo(shuffle_indices(u, v))) < 1e-25
