from itertools import permutations

import numpy as np
import pytest
from sympy.polys.domains import QQ

from common.errors import AsymmetricSeriesError
from module1_exactalg.polynomials import one_minus, series_ring, substitute, swap_variables
from module1_exactalg.series import TruncSeries, rf_expand, series_inverse
from module2_symmfunc.multiplicities import (
    MultSeries,
    SchurDecomp,
    c32_multiplicity_closed_form,
    mult_reconstruct,
    mult_ring,
    mult_series,
    schur_decompose2,
)
from module2_symmfunc.partitions import format_partition, padded, parse_partition, partitions
from module2_symmfunc.schur import (
    elementary,
    elementary_from_power_sums,
    newton_e_from_p,
    power_sum,
    power_sum_ring,
    schur_poly,
)
from module4_tracealg.hilbert import teranishi_c32_series


def test_partitions_of_four():
    assert list(partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert list(partitions(4, max_parts=2)) == [(4,), (3, 1), (2, 2)]
    assert parse_partition(format_partition((3, 1))) == (3, 1)
    assert format_partition(()) == "()"


def test_schur_examples():
    R3 = series_ring(3)
    assert schur_poly((1,), 3) == sum(R3.gens, R3.zero)
    t1, t2 = series_ring(2).gens
    assert schur_poly((2, 1), 2) == t1**2 * t2 + t1 * t2**2
    assert schur_poly((1, 1, 1), 2) == 0


def test_schur_of_columns_and_rows():
    for k in range(1, 4):
        assert schur_poly((1,) * k, 3) == elementary(k, 3)
    t1, t2 = series_ring(2).gens
    assert schur_poly((2,), 2) == t1**2 + t1 * t2 + t2**2


def test_newton_identities():
    p1, p2, p3 = power_sum_ring(3).gens
    assert newton_e_from_p(1) == power_sum_ring(1).gens[0]
    p1_2, p2_2 = power_sum_ring(2).gens
    assert newton_e_from_p(2) == (p1_2**2 - p2_2) * QQ(1, 2)
    assert newton_e_from_p(3) == (p1**3 - 3 * p1 * p2 + 2 * p3) * QQ(1, 6)


def test_numeric_newton_matches_polynomials():
    # t = (1, 2, 3): p = (6, 14, 36), e = (1, 6, 11, 6)
    sums = [power_sum(k, 3)(1, 2, 3) for k in (1, 2, 3)]
    assert elementary_from_power_sums(sums) == [1, 6, 11, 6]


def test_decompose_simple_fixtures():
    t1, t2 = series_ring(2).gens
    dec = schur_decompose2(TruncSeries.of(t1 * t2, 2))
    assert dec.multiplicities == {(1, 1): 1}
    dec = schur_decompose2(TruncSeries.of((t1 + t2) ** 2, 2))
    assert dec.multiplicities == {(2,): 1, (1, 1): 1}


def test_decompose_rejects_asymmetric_series():
    t1, t2 = series_ring(2).gens
    with pytest.raises(AsymmetricSeriesError) as info:
        schur_decompose2(TruncSeries.of(t1**2 + t1 * t2, 2))
    assert info.value.exponents in ((2, 0), (0, 2))


def test_multiplicity_series_examples():
    t, v = mult_ring().gens
    t1, t2 = series_ring(2).gens
    ms = mult_series(SchurDecomp(2, 2, {(2,): 1}))
    assert ms.series.poly == t**2
    assert mult_reconstruct(ms).poly == t1**2 + t1 * t2 + t2**2
    ms = mult_series(SchurDecomp(2, 2, {(1, 1): 1}))
    assert ms.series.poly == v
    assert mult_reconstruct(ms).poly == t1 * t2


def test_reconstruction_round_trips_on_random_symmetric_series():
    bound = 6
    for seed in range(20):
        rng = np.random.default_rng([7, seed])
        mults = {}
        for total in range(bound + 1):
            for l2 in range(total // 2 + 1):
                c = int(rng.integers(-2, 3))
                if c:
                    mults[tuple(x for x in (total - l2, l2) if x)] = c
        dec = SchurDecomp(2, bound, mults)
        f = dec.to_series()
        assert schur_decompose2(f).multiplicities == dec.multiplicities
        assert mult_reconstruct(mult_series(dec)).poly == f.poly


def test_closed_form_multiplicities_small_degree():
    bound = 8
    ours = mult_series(schur_decompose2(rf_expand(teranishi_c32_series(), bound)))
    closed = c32_multiplicity_closed_form(bound)
    assert closed.multiplicity(()) == 1
    assert ours.series.poly == closed.series.poly


@pytest.mark.slow
def test_closed_form_multiplicities_degree_twenty():
    bound = 20
    hilbert = rf_expand(teranishi_c32_series(), bound)
    closed = c32_multiplicity_closed_form(bound)
    assert mult_series(schur_decompose2(hilbert)).series.poly == closed.series.poly
    assert mult_reconstruct(closed).poly == hilbert.poly


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_schur_polynomials_are_symmetric_and_monic(d):
    for k in range(9):
        for lam in partitions(k, max_parts=d):
            s = schur_poly(lam, d)
            for order in permutations(range(d)):
                assert swap_variables(s, order) == s, (lam, order)
            lead = padded(lam, d)
            assert max(s.keys()) == lead
            assert s[lead] == 1


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_newton_formulas_give_elementary_polynomials(d):
    target = series_ring(d)
    for k in range(1, 7):
        images = [power_sum(i, d) for i in range(1, k + 1)]
        assert substitute(newton_e_from_p(k), images, target) == elementary(k, d), (k, d)


def test_multiplying_by_determinant_series_shifts_multiplicities():
    # S_lam (t1 t2)^j = S_(lam + (j, j)), so f / (1 - t1 t2) has M' / (1 - v)
    bound = 10
    f = rf_expand(teranishi_c32_series(), bound)
    g = series_inverse(one_minus(series_ring(2), [1, 1]), bound)
    shifted = mult_series(schur_decompose2(f.multiply_poly(g)))

    _, v = mult_ring().gens
    geometric = sum((v**j for j in range(bound + 1)), mult_ring().zero)
    expected = mult_series(schur_decompose2(f)).series.poly * geometric
    assert shifted.series.poly == MultSeries.of(expected, bound).series.poly
