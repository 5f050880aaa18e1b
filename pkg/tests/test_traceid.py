import pytest

from common.errors import ResourceCapError
from module4_tracealg.trace_expr import TraceMonomial, tr
from module5_traceid.group_algebra import (
    GroupAlgElem,
    fundamental,
    parse_group_alg_lines,
    random_element,
    random_ideal_element,
    trace_monomial_of,
    trace_poly,
)
from module5_traceid.ideal import ideal_dimension, ideal_membership, semantic_identity
from module4_tracealg.evaluation import sample_rng, verify_zero
from module5_traceid.permutations import (
    compose,
    cycles,
    format_cycles,
    identity,
    inverse,
    make_perm,
    sign,
)


def test_cycles():
    assert cycles((2, 3, 1)) == [(1, 2, 3)]
    assert cycles(identity(3)) == [(1,), (2,), (3,)]
    assert cycles((2, 1, 3)) == [(1, 2), (3,)]
    assert format_cycles((2, 1, 3)) == "(1 2)(3)"


def test_permutation_algebra():
    s = (2, 1, 3)
    c = (2, 3, 1)
    assert compose(s, inverse(s)) == identity(3)
    assert compose(c, inverse(c)) == identity(3)
    assert compose(c, c) == inverse(c)
    assert sign(s) == -1
    assert sign(c) == 1
    with pytest.raises(ValueError):
        make_perm([1, 1, 2])


def test_associated_trace_functions():
    assert trace_monomial_of((2, 3, 1)) == TraceMonomial.make([(1, 2, 3)])
    assert trace_poly(GroupAlgElem.of((2, 1, 3))) == tr(1, 2) * tr(3)


def test_fundamental_sizes():
    assert len(fundamental(1).terms) == 2
    assert fundamental(1).terms == {(1, 2): 1, (2, 1): -1}
    assert len(fundamental(2).terms) == 6
    assert len(fundamental(3).terms) == 24


def test_group_algebra_lines_parse_back():
    e = fundamental(2)
    assert parse_group_alg_lines(e.lines()) == e


def test_ideal_dimensions():
    assert ideal_dimension(2, 3) == 1
    assert ideal_dimension(2, 2) == 0
    # J(1, 2) is spanned by id - (12), the sign-isotypic part of QS_2
    assert ideal_dimension(1, 2) == 1


def test_membership_examples():
    assert ideal_membership(fundamental(2), 2)
    assert not ideal_membership(GroupAlgElem.of(identity(3)), 2)
    assert ideal_membership(GroupAlgElem(3), 2)
    assert not ideal_membership(GroupAlgElem.of(identity(2)), 2)


def test_semantic_examples():
    assert semantic_identity(fundamental(2), 2)
    assert not semantic_identity(fundamental(2), 3)
    assert semantic_identity(GroupAlgElem(4), 2)
    assert not semantic_identity(GroupAlgElem.of(identity(3)), 2)


def test_ideal_is_two_sided():
    e = fundamental(2).embed(4)
    s = GroupAlgElem.of((2, 3, 4, 1))
    assert ideal_membership(s * e, 2)
    assert ideal_membership(e * s, 2)
    assert ideal_membership(s * e * s, 2)


@pytest.mark.parametrize("m", [3, 4])
def test_membership_matches_evaluation(m):
    for i in range(12):
        rng = sample_rng(2005, i)
        e = random_ideal_element(2, m, rng) if i % 2 else random_element(m, rng)
        assert ideal_membership(e, 2) == semantic_identity(e, 2)
        if i % 2:
            assert ideal_membership(e, 2)


@pytest.mark.slow
def test_membership_matches_evaluation_degree_five():
    for i in range(50):
        rng = sample_rng(2005, i)
        e = random_ideal_element(2, 5, rng) if i % 2 else random_element(5, rng)
        assert ideal_membership(e, 2) == semantic_identity(e, 2)


def test_ideal_cap(monkeypatch):
    monkeypatch.setenv("MATINV_MAX_IDEAL_DEGREE", "3")
    with pytest.raises(ResourceCapError):
        ideal_membership(fundamental(2).embed(4), 2)


def test_semantic_cap():
    with pytest.raises(ResourceCapError):
        semantic_identity(fundamental(2).embed(4), 2, max_degree=3)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_fundamental_identity_on_a_single_matrix(n):
    one_letter = trace_poly(fundamental(n)).map_letters({i: 1 for i in range(1, n + 2)})
    assert verify_zero(one_letter, n)
