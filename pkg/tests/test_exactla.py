import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import brute_rank_mod_p, leibniz_det
from lefschetz.colex import lefschetz_matrix
from lefschetz.exactla import (
    _condense,
    all_maximal_minors,
    det_condensation,
    det_fraction_free,
    is_prime,
    omit_row_minor,
    rank_mod_p,
)
from lefschetz.formulas import binom, h_of_k, macmahon, BoxDims
from lefschetz.hilbert import CIParams

M222 = [[1, 1, 0], [1, 0, 1], [0, 1, 1]]


def square(max_n=6, lo=-9, hi=9):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=n, max_size=n)
    )


def test_identity_and_small():
    for n in range(1, 6):
        eye = [[int(i == j) for j in range(n)] for i in range(n)]
        assert det_fraction_free(eye) == det_condensation(eye) == 1
    assert det_fraction_free(M222) == leibniz_det(M222) == -2
    assert det_condensation(M222) == -2
    assert det_condensation([[7]]) == 7
    assert det_fraction_free([]) == 1


def test_binomial_toeplitz():
    m = [[binom(5, 2 - i + j) for j in range(1, 3)] for i in range(1, 3)]
    assert det_condensation(m) == det_fraction_free(m) == 50 == macmahon(BoxDims(2, 2, 3))


def test_det_334_matches_box_count():
    mat = lefschetz_matrix(CIParams(3, 3, 4), 3).entries
    assert abs(det_fraction_free(mat)) == 6 == macmahon(BoxDims(1, 2, 2))


def test_non_square_rejected():
    with pytest.raises(ValueError):
        det_fraction_free([[1, 2]])
    with pytest.raises(ValueError):
        det_condensation([[1, 2, 3], [4, 5, 6]])


@given(square())
def test_fraction_free_matches_leibniz(m):
    assert det_fraction_free(m) == leibniz_det(m)


@given(square(max_n=6))
def test_condensation_matches_fraction_free(m):
    assert det_condensation(m) == det_fraction_free(m)


def test_condensation_fallback_is_exercised():
    # zero centre entry forces the Bareiss fallback at level 3
    m = [[1, 2, 3], [4, 0, 6], [7, 8, 9]]
    d, fallbacks = _condense(m)
    assert fallbacks > 0
    assert d == leibniz_det(m)
    mat = lefschetz_matrix(CIParams(4, 4, 4)).entries
    d, fallbacks = _condense(mat)
    assert fallbacks > 0
    assert d == det_fraction_free(mat)


@given(square(max_n=5))
def test_row_swap_flips_sign(m):
    if len(m) < 2:
        return
    swapped = [m[1], m[0]] + m[2:]
    assert det_fraction_free(swapped) == -det_fraction_free(m)


def test_rank_examples():
    assert rank_mod_p(M222, 2) == 2
    assert rank_mod_p(M222, 3) == 3
    assert rank_mod_p([[0, 0], [0, 0]], 5) == 0
    with pytest.raises(ValueError):
        rank_mod_p(M222, 4)


@settings(max_examples=60)
@given(st.integers(1, 4), st.integers(1, 4), st.sampled_from([2, 3, 5, 7]), st.data())
def test_rank_matches_minor_oracle(r, c, p, data):
    m = data.draw(st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c), min_size=r, max_size=r))
    assert rank_mod_p(m, p) == brute_rank_mod_p(m, p)


def test_rank_deficient_iff_p_divides_every_maximal_minor():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(1, 6)
        p = rng.choice([2, 3, 5, 7])
        m = [[rng.choice([0, 0, 1, 1, 2, -1, p]) for _ in range(n)] for _ in range(n + 1)]
        minors = all_maximal_minors(m)
        assert (rank_mod_p(m, p) < n) == all(v % p == 0 for v in minors)


def test_omit_row_minor_examples():
    tall = [[1, 0], [0, 1], [0, 0]]
    assert abs(omit_row_minor(tall, 3)) == 1
    assert omit_row_minor(tall, 1) == 0
    assert all_maximal_minors([[4], [9]]) == [9, 4]
    with pytest.raises(ValueError):
        omit_row_minor(tall, 4)
    with pytest.raises(ValueError):
        omit_row_minor([[1, 0], [0, 1]], 1)


def test_minors_of_555():
    mat = lefschetz_matrix(CIParams(5, 5, 5)).entries
    assert abs(omit_row_minor(mat, 1)) == 50 == h_of_k(CIParams(5, 5, 5), 1)
    assert abs(omit_row_minor(mat, 2)) == 75 == h_of_k(CIParams(5, 5, 5), 2)
    minors = all_maximal_minors(mat)
    assert minors[:3] == [50, 75, 50]
    assert any(minors)


def test_is_prime():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
