# module2_symmfunc/schur.py

import logging
from functools import lru_cache
from itertools import combinations, permutations
from typing import List, Sequence

from sympy.combinatorics import Permutation
from sympy.polys.domains import QQ

from module1_exactalg.polynomials import SparsePoly, make_ring, series_ring
from .partitions import Partition, padded

logger = logging.getLogger(__name__)


def _alternant(exponents: Sequence[int], d: int) -> SparsePoly:
    """det(t_j^(exponents[i])) expanded by the Leibniz formula."""
    ring = series_ring(d)
    terms = {}
    for perm in permutations(range(d)):
        monom = [0] * d
        for i, j in enumerate(perm):
            monom[j] = exponents[i]
        terms[tuple(monom)] = QQ(Permutation(list(perm)).signature())
    return ring.from_dict(terms)


@lru_cache(maxsize=None)
def schur_poly(lam: Partition, d: int) -> SparsePoly:
    """
    Schur polynomial S_lam(t_1, ..., t_d) as the quotient of two alternants.

    Zero when lam has more than d parts.
    """
    ring = series_ring(d)
    if len(lam) > d:
        return ring.zero
    lam = padded(lam, d)
    delta = [d - 1 - i for i in range(d)]
    numerator = _alternant([lam[i] + delta[i] for i in range(d)], d)
    vandermonde = _alternant(delta, d)
    return numerator.exquo(vandermonde)


def power_sum(k: int, d: int) -> SparsePoly:
    ring = series_ring(d)
    return sum((g ** k for g in ring.gens), ring.zero)


def elementary(k: int, d: int) -> SparsePoly:
    ring = series_ring(d)
    result = ring.zero
    for subset in combinations(ring.gens, k):
        term = ring.one
        for g in subset:
            term = term * g
        result = result + term
    return result


def power_sum_ring(k: int):
    """Ring of the formal power sums p1, ..., pk."""
    return make_ring([f"p{i}" for i in range(1, k + 1)])


def newton_e_from_p(k: int) -> SparsePoly:
    """
    e_k as a polynomial in p1..pk, from k e_k = sum_{i=1..k} (-1)^(i-1) e_(k-i) p_i.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    ring = power_sum_ring(k)
    p = ring.gens
    e = [ring.one]
    for j in range(1, k + 1):
        acc = ring.zero
        for i in range(1, j + 1):
            sign = 1 if i % 2 else -1
            acc = acc + sign * e[j - i] * p[i - 1]
        e.append(acc * QQ(1, j))
    return e[k]


def elementary_from_power_sums(power_sums: Sequence) -> List:
    """
    Numeric Newton recursion: given p_1..p_k, return e_0..e_k (e_0 = 1).

    Used to get det(1 - t g) = sum (-1)^j e_j t^j from the traces of powers of g.
    """
    p = [QQ.convert(x) for x in power_sums]
    e = [QQ.one]
    for j in range(1, len(p) + 1):
        acc = QQ.zero
        for i in range(1, j + 1):
            term = e[j - i] * p[i - 1]
            acc = acc + term if i % 2 else acc - term
        e.append(acc / j)
    return e
