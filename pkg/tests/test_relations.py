import pytest
from sympy.polys.domains import QQ

from module1_exactalg.linalg import QMatrix
from module4_tracealg.evaluation import TraceEvaluator, random_specialization, sample_rng
from module4_tracealg.relations import (
    ADS_COEFFICIENTS,
    ads_elements,
    ads_relation,
    ads_relation_check,
    c2d_alternating_relations,
    c2d_gram_relations,
    c2d_relations_check,
)


def _zero_pair(n):
    zero = QMatrix.zeros(n, n)
    return TraceEvaluator.specialized([zero, zero], traceless=True)


def test_ads_relation_vanishes_at_zero():
    assert _zero_pair(3).evaluate(ads_relation()) == 0


def test_ads_elements_multidegrees():
    elements = ads_elements()
    assert elements["W"].multidegrees(2) == {(3, 3)}
    assert elements["U"].multidegrees(2) == {(2, 2)}
    for name in ADS_COEFFICIENTS:
        assert elements[name].multidegrees(2) == {(6, 6)}, name


def test_ads_relation_holds():
    report = ads_relation_check(samples=20, seed=7)
    assert report.ok, report.notes
    assert report.checked == 20
    assert report.details["seed"] == 7


def test_perturbed_ads_relation_fails():
    coefficients = dict(ADS_COEFFICIENTS)
    coefficients["W1"] = QQ(1, 28)
    report = ads_relation_check(samples=20, coefficients=coefficients)
    assert not report.ok
    assert report.counterexample is not None


def test_random_specializations_are_traceless_and_reproducible():
    first = random_specialization(3, 2, sample_rng(5, 0), traceless=True)
    again = random_specialization(3, 2, sample_rng(5, 0), traceless=True)
    assert first == again
    assert all(m.trace() == 0 for m in first)


def test_c2d_family_sizes():
    assert len(c2d_gram_relations(3)) == 1
    assert len(c2d_alternating_relations(3)) == 0
    assert len(c2d_gram_relations(4)) == 16
    assert len(c2d_alternating_relations(4)) == 4


def test_c2d_relations_vanish_at_zero():
    zero = QMatrix.zeros(2, 2)
    evaluator = TraceEvaluator.specialized([zero] * 4, traceless=True)
    for relation in c2d_gram_relations(4) + c2d_alternating_relations(4):
        assert evaluator.evaluate(relation) == 0


@pytest.mark.parametrize("d", [3, 4])
def test_c2d_relations_hold(d):
    report = c2d_relations_check(d, samples=20)
    assert report.ok, report.notes
    assert report.details["relations"] > 0


def test_c2d_small_d_is_skipped_with_a_note():
    report = c2d_relations_check(2, samples=3)
    assert report.ok
    assert report.details["relations"] == 0
    assert any("skipped" in note for note in report.notes)


def test_samples_must_be_positive():
    with pytest.raises(ValueError):
        ads_relation_check(samples=0)
