from itertools import permutations

import pytest
from sympy.polys.domains import QQ

from common.constants import GradedKind, TraceCap
from common.errors import AlphabetError
from module1_exactalg.linalg import QMatrix
from module1_exactalg.series import rf_expand
from module4_tracealg.derivation import delta
from module4_tracealg.evaluation import evaluate, generic_ring, verify_zero
from module4_tracealg.graded import dim_table, graded_dim, min_gen_profile, necklaces, trace_monomials
from module4_tracealg.hilbert import (
    fhl_c22_series,
    formanek_t22_series,
    hilbert_check,
    polynomial_ring_series,
    t22_multiplicity_check,
    teranishi_c32_series,
)
from module4_tracealg.identities import (
    cayley_hamilton,
    cayley_hamilton_2,
    determinant_2,
    phi2,
    psi2,
    sibirskii_generators,
    substitute_traceless,
    traceless_generator_check,
)
from module4_tracealg.trace_expr import TraceExpr, canonical_word, tr, trace_of, word
from module5_traceid.group_algebra import fundamental, trace_poly


def test_canonical_words_are_rotation_classes():
    assert canonical_word((2, 1, 1)) == (1, 1, 2)
    assert tr(1, 2) - tr(2, 1) == TraceExpr.zero()
    assert necklaces((2, 2)) == ((1, 1, 2, 2), (1, 2, 1, 2))


def test_trace_of_identity_is_n():
    assert trace_of(TraceExpr.scalar(1), 3) == TraceExpr.scalar(3)
    assert trace_of(word(1, 2), 2) == tr(1, 2)


def test_evaluation_examples():
    x1, x2 = generic_ring(1, 2).gens
    assert evaluate(tr(1, 2), 1) == x1 * x2
    ring = generic_ring(2, 1)
    g = dict(zip([str(s) for s in ring.symbols], ring.gens))
    assert evaluate(tr(1), 2) == g["x1_11"] + g["x1_22"]


def test_evaluation_at_rational_matrices():
    a = QMatrix.from_rows([[1, 2], [3, 4]])
    b = QMatrix.from_rows([[0, 1], [1, 0]])
    assert evaluate(tr(1, 2), matrices=[a, b]) == 5
    assert evaluate(determinant_2(1), matrices=[a]) == -2


def test_traceless_slot_rejects_trace():
    with pytest.raises(AlphabetError):
        evaluate(tr(1, 1), matrices=[QMatrix.identity(2)], traceless=True)


def test_letters_outside_alphabet():
    with pytest.raises(AlphabetError):
        evaluate(tr(1, 3), matrices=[QMatrix.identity(2), QMatrix.identity(2)])


def test_cayley_hamilton_identities():
    assert verify_zero(cayley_hamilton_2(), 2)
    assert verify_zero(psi2(), 2)
    assert verify_zero(phi2(), 2)
    for n in (1, 2, 3):
        assert verify_zero(cayley_hamilton(n), n)
    assert not verify_zero(cayley_hamilton(2), 3)


def test_phi2_is_the_signed_sum_over_s3():
    assert phi2() == trace_poly(fundamental(2))


def test_fundamental_identities():
    assert verify_zero(trace_poly(fundamental(3)), 3)
    assert not verify_zero(trace_poly(fundamental(2)), 3)


@pytest.mark.slow
def test_fundamental_identity_fails_one_size_up():
    assert not verify_zero(trace_poly(fundamental(3)), 4)


def test_derivation():
    assert not delta(tr(1))
    assert delta(tr(2, 2)) == tr(1, 2) * 2
    assert delta(tr(2, 2, 2)) == tr(1, 2, 2) * 3
    assert delta(tr(2, 2), times=2) == tr(1, 1) * 2


def test_traceless_rewriting():
    # letters 3, 4 are the traceless parts Y1, Y2
    half = QQ(1, 2)
    expected = tr(3, 4) + tr(1) * tr(4) * half + tr(2) * tr(3) * half + tr(1) * tr(2) * half
    assert substitute_traceless(tr(1, 2), 2, 2) == expected
    assert traceless_generator_check(3)


def test_sibirskii_list_size():
    assert len(sibirskii_generators(3)) == 10


def test_graded_dims_c22():
    assert graded_dim(2, 2, (1, 1)) == 2
    assert graded_dim(2, 2, (2, 0)) == 2
    assert graded_dim(2, 2, (0, 0)) == 1


def test_graded_dim_c32_matches_closed_form():
    expected = rf_expand(teranishi_c32_series(), 2).coefficient((1, 1))
    assert graded_dim(3, 2, (1, 1)) == expected == 2


def test_graded_dim_rejects_bad_multidegree():
    with pytest.raises(ValueError):
        graded_dim(2, 2, (1,))


def test_mixed_dims_t22():
    # T_22 in degree (1, 0): tr(X1) E and X1
    assert graded_dim(2, 2, (1, 0), GradedKind.MIXED) == 2
    assert graded_dim(2, 2, (0, 0), GradedKind.MIXED) == 1
    # six spanning monomials in degree (1, 1), one Cayley-Hamilton relation among them
    assert graded_dim(2, 2, (1, 1), GradedKind.MIXED) == 5
    assert graded_dim(1, 2, (2, 1), GradedKind.MIXED) == 1


def test_hilbert_check_t22():
    report = hilbert_check(2, 2, 6, formanek_t22_series(), GradedKind.MIXED)
    assert report.ok, report.notes
    assert report.checked == 28


def test_t22_multiplicities_low_degree():
    report = t22_multiplicity_check(4)
    assert report.ok, report.summary_line()
    assert report.details["decomposition"].multiplicity((1,)) == 2


@pytest.mark.parametrize("n, d, k", [(2, 2, (3, 1)), (2, 2, (4, 2)), (3, 2, (2, 1)), (2, 3, (2, 1, 0)), (2, 3, (2, 1, 1))])
def test_pure_dims_ignore_letter_order(n, d, k):
    dim = graded_dim(n, d, k)
    for order in set(permutations(k)):
        assert graded_dim(n, d, order) == dim, order


def test_trace_monomial_counts():
    assert len(trace_monomials((2, 0), 4)) == 2
    assert len(trace_monomials((1, 1), 4)) == 2


def test_kuzmin_cap_agrees_for_small_n():
    table = dim_table(2, 2, 4, cap=TraceCap.KUZMIN)
    assert table.dims == dim_table(2, 2, 4).dims


def test_hilbert_check_c22():
    report = hilbert_check(2, 2, 8, fhl_c22_series())
    assert report.ok
    assert report.checked == 45


def test_hilbert_check_polynomial_ring():
    assert hilbert_check(1, 2, 4, polynomial_ring_series(2)).ok


def test_hilbert_check_reports_mismatch():
    report = hilbert_check(2, 2, 3, polynomial_ring_series(2))
    assert not report.ok
    assert report.counterexample == "2,0"


def test_table_lines_format():
    lines = dim_table(2, 2, 1).lines()
    assert lines == ["0,0 : 1", "1,0 : 1", "0,1 : 1"]


def test_generator_profile_c22():
    profile = min_gen_profile(2, 2, 4)
    assert profile == {(1, 0): 1, (0, 1): 1, (2, 0): 1, (1, 1): 1, (0, 2): 1}


def test_generator_profile_c23():
    profile = min_gen_profile(2, 3, 3)
    by_degree = {}
    for k, count in profile.items():
        by_degree[sum(k)] = by_degree.get(sum(k), 0) + count
    assert by_degree == {1: 3, 2: 6, 3: 1}


@pytest.mark.slow
def test_hilbert_check_c32():
    assert hilbert_check(3, 2, 6, teranishi_c32_series()).ok


@pytest.mark.slow
def test_generator_profile_c32():
    profile = min_gen_profile(3, 2, 6)
    expected = [(1, 0), (0, 1), (2, 0), (1, 1), (0, 2), (3, 0), (2, 1), (1, 2), (0, 3), (2, 2), (3, 3)]
    assert sorted(profile) == sorted(expected)
    assert sum(profile.values()) == 11


@pytest.mark.slow
def test_t22_multiplicities():
    report = t22_multiplicity_check(6)
    assert report.ok, report.summary_line()
