from itertools import permutations
from math import comb

import pytest
from hypothesis import given, strategies as st

from conftest import brute_plane_partitions
from lefschetz.formulas import BoxDims, macmahon
from lefschetz.partitions import (
    GuardExceeded,
    count_by_determinant,
    count_by_enumeration,
    count_by_transfer,
    is_box_plane_partition,
)


def test_is_box_plane_partition():
    assert is_box_plane_partition([[2, 1], [1, 0]], 2)
    assert not is_box_plane_partition([[1, 2]], 2)
    assert not is_box_plane_partition([[1], [2]], 2)
    assert not is_box_plane_partition([[3]], 2)
    assert is_box_plane_partition([[0, 0, 0], [0, 0, 0]], 0)
    with pytest.raises(ValueError):
        is_box_plane_partition([[1, 0], [0]], 1)


@pytest.mark.parametrize("box, value", [((1, 1, 1), 2), ((2, 2, 2), 20), ((3, 3, 3), 980), ((2, 3, 2), None)])
def test_enumeration(box, value):
    expected = brute_plane_partitions(*box)
    if value is not None:
        assert expected == value
    assert count_by_enumeration(BoxDims(*box)) == expected


def test_enumeration_guard():
    with pytest.raises(GuardExceeded, match="count_by_transfer"):
        count_by_enumeration(BoxDims(4, 4, 2))
    with pytest.raises(GuardExceeded):
        count_by_enumeration(BoxDims(1, 1, 9))
    assert count_by_enumeration(BoxDims(1, 1, 9), max_height=9) == 10


def test_transfer_examples():
    assert count_by_transfer(BoxDims(2, 2, 2)) == 20
    assert count_by_transfer(BoxDims(4, 4, 4)) == macmahon(BoxDims(4, 4, 4))
    assert count_by_transfer(BoxDims(0, 3, 3)) == 1
    with pytest.raises(GuardExceeded):
        count_by_transfer(BoxDims(10, 2, 10), max_states=1000)


@given(st.integers(0, 9), st.integers(0, 9))
def test_transfer_one_row(b, c):
    assert count_by_transfer(BoxDims(1, b, c)) == comb(b + c, b)


def test_transfer_against_brute_force():
    for a in range(1, 4):
        for b in range(1, 4):
            for c in range(0, 4):
                if a * b * (c + 1) > 30:
                    continue
                assert count_by_transfer(BoxDims(a, b, c)) == brute_plane_partitions(a, b, c)


def test_determinant_examples():
    assert count_by_determinant(BoxDims(1, 4, 6)) == comb(10, 6)
    assert count_by_determinant(BoxDims(2, 2, 3)) == 50
    assert count_by_determinant(BoxDims(3, 3, 3)) == 980


def test_transfer_symmetric_under_permutation():
    for box in [(2, 3, 4), (1, 5, 6), (3, 3, 5), (2, 2, 7)]:
        assert len({count_by_transfer(BoxDims(*p)) for p in permutations(box)}) == 1


def test_counts_monotone():
    for a in range(1, 4):
        for b in range(1, 4):
            for c in range(0, 5):
                base = count_by_transfer(BoxDims(a, b, c))
                assert count_by_transfer(BoxDims(a + 1, b, c)) >= base
                assert count_by_transfer(BoxDims(a, b + 1, c)) >= base
                assert count_by_transfer(BoxDims(a, b, c + 1)) >= base
