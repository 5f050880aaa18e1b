from itertools import permutations

import pytest

from common.errors import ResourceCapError
from module6_nilpotency.multilinear import full_linearization
from module6_nilpotency.nagata_higman import bounds, consequences, minimal_class, nh_membership


def test_full_linearization():
    assert full_linearization(1).terms == {(1,): 1}
    assert str(full_linearization(2)) == "1/1*x1x2 + 1/1*x2x1"
    lin = full_linearization(3)
    assert len(lin.terms) == 6
    assert set(lin.terms.values()) == {1}


def test_consequences_are_multilinear():
    for vector in consequences(2, 3):
        assert all(sorted(p) == [1, 2, 3] for p in vector)


@pytest.mark.parametrize("n, N, expected", [(1, 1, True), (2, 2, False), (2, 3, True), (2, 1, False)])
def test_membership_small(n, N, expected):
    assert nh_membership(n, N) is expected


def test_minimal_class_sweep():
    assert minimal_class(1, 3) == 1
    assert minimal_class(2, 4) == 3
    assert minimal_class(2, 2) is None


def test_bounds():
    assert bounds(2) == (3, 4, 3)
    assert bounds(4) == (10, 16, 10)
    assert bounds(5) == (15, 25, None)


def test_nilpotency_cap(monkeypatch):
    monkeypatch.setenv("MATINV_MAX_NILPOTENCY_DEGREE", "4")
    with pytest.raises(ResourceCapError):
        nh_membership(3, 5)


def test_invalid_arguments():
    with pytest.raises(ValueError):
        nh_membership(0, 3)
    with pytest.raises(ValueError):
        bounds(0)


@pytest.mark.slow
def test_membership_cubes():
    assert not nh_membership(3, 5)
    assert nh_membership(3, 6)


@pytest.mark.parametrize("n, N", [(1, 1), (1, 3), (2, 2), (2, 3), (2, 4), (3, 4)])
def test_membership_ignores_variable_labels(n, N):
    expected = nh_membership(n, N)
    for word in permutations(range(1, N + 1)):
        assert nh_membership(n, N, word=word) is expected, word


def test_target_word_must_be_a_permutation_of_the_right_degree():
    with pytest.raises(ValueError):
        nh_membership(2, 3, word=(1, 1, 2))
    with pytest.raises(ValueError):
        nh_membership(2, 3, word=(2, 1))
