# module2_symmfunc/multiplicities.py

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from sympy.polys.domains import QQ

from common.errors import AsymmetricSeriesError
from module1_exactalg.polynomials import format_rational, make_ring, one_minus, series_ring
from module1_exactalg.series import RationalFn, TruncSeries, rational_fn, rf_expand
from .partitions import Partition, format_partition, make_partition, size
from .schur import schur_poly

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SchurDecomp:
    """Multiplicities m(lam) of a symmetric series sum m(lam) S_lam, known up to |lam| <= bound."""
    arity: int
    bound: int
    multiplicities: Dict[Partition, object] = field(default_factory=dict)

    def __post_init__(self):
        for lam, m in self.multiplicities.items():
            if len(lam) > self.arity or size(lam) > self.bound:
                raise ValueError(f"partition {lam} out of range for arity {self.arity}, bound {self.bound}")
            if not m:
                raise ValueError(f"zero multiplicity stored for {lam}")

    def multiplicity(self, lam) -> object:
        return self.multiplicities.get(make_partition(lam), QQ.zero)

    def to_series(self) -> TruncSeries:
        """sum m(lam) S_lam, which reproduces the decomposed series."""
        ring = series_ring(self.arity)
        poly = ring.zero
        for lam, m in self.multiplicities.items():
            poly = poly + schur_poly(lam, self.arity) * m
        return TruncSeries.of(poly, self.bound)

    def lines(self) -> List[str]:
        ordered = sorted(self.multiplicities.items(), key=lambda item: (size(item[0]), item[0][:1], item[0]))
        return [f"{format_partition(lam)} : {format_rational(m)}" for lam, m in ordered]


def schur_decompose2(f: TruncSeries, bound: Optional[int] = None) -> SchurDecomp:
    """
    Decompose a symmetric series in two variables into Schur polynomials.

    With c(a, b) the coefficient of t1^a t2^b, m(a, b) = c(a, b) - c(a+1, b-1) for a >= b.
    """
    if f.arity != 2:
        raise ValueError(f"schur_decompose2 needs a series in 2 variables, got {f.arity}")
    bound = f.bound if bound is None else min(bound, f.bound)
    poly = f.poly

    for monom in sorted(poly, key=lambda m: (sum(m), m)):
        a, b = monom
        if a + b > bound:
            continue
        left = poly.get(monom, QQ.zero)
        right = poly.get((b, a), QQ.zero)
        if left != right:
            raise AsymmetricSeriesError((a, b), format_rational(left), format_rational(right))

    mults = {}
    for total in range(bound + 1):
        for b in range(total // 2 + 1):
            a = total - b
            m = poly.get((a, b), QQ.zero)
            if b > 0:
                m = m - poly.get((a + 1, b - 1), QQ.zero)
            if m:
                mults[make_partition((a, b))] = m
    logger.debug("decomposed symmetric series to degree %d: %d nonzero multiplicities", bound, len(mults))
    return SchurDecomp(2, bound, mults)


def mult_ring():
    return make_ring(["t", "v"])


@dataclass(frozen=True)
class MultSeries:
    """
    Multiplicity series M'(t, v) = sum m(l1, l2) t^(l1 - l2) v^l2.

    `series` only holds terms t^p v^q with p + 2q <= series.bound, i.e. |lam| <= bound.
    """
    series: TruncSeries

    def __post_init__(self):
        if any(p + 2 * q > self.series.bound for p, q in self.series.poly):
            raise ValueError("multiplicity series has terms above its weighted bound")

    @property
    def bound(self) -> int:
        return self.series.bound

    @classmethod
    def of(cls, poly, bound: int) -> "MultSeries":
        kept = {m: c for m, c in poly.items() if m[0] + 2 * m[1] <= bound}
        return cls(TruncSeries(poly.ring.from_dict(kept), bound))

    def multiplicity(self, lam) -> object:
        lam = tuple(lam) + (0, 0)
        return self.series.poly.get((lam[0] - lam[1], lam[1]), QQ.zero)

    def lines(self) -> List[str]:
        return self.series.lines()


def mult_series(dec: SchurDecomp) -> MultSeries:
    if dec.arity != 2:
        raise ValueError("multiplicity series are defined for two variables only")
    ring = mult_ring()
    terms = {}
    for lam, m in dec.multiplicities.items():
        l1, l2 = tuple(lam) + (0,) * (2 - len(lam))
        terms[(l1 - l2, l2)] = m
    return MultSeries.of(ring.from_dict(terms), dec.bound)


def mult_reconstruct(ms: MultSeries, bound: Optional[int] = None) -> TruncSeries:
    """
    f(t1, t2) = (t1 M'(t1, t1 t2) - t2 M'(t2, t1 t2)) / (t1 - t2).

    The division is done termwise: t^p v^q contributes (t1 t2)^q (t1^p + t1^(p-1) t2 + ... + t2^p).
    """
    bound = ms.bound if bound is None else min(bound, ms.bound)
    ring = series_ring(2)
    terms: Dict = {}
    for (p, q), m in ms.series.poly.items():
        if p + 2 * q > bound:
            continue
        for i in range(p + 1):
            key = (q + i, q + p - i)
            terms[key] = terms.get(key, QQ.zero) + m
    return TruncSeries(ring.from_dict(terms), bound)


def c32_multiplicity_closed_form_fn() -> List[RationalFn]:
    """
    The closed form of M'(H(C32), t, v) as a sum of four rational functions,
    each carrying the common factor 1 / ((1 - v^2)(1 - v^3)^2).
    """
    R = mult_ring()
    t, v = R.gens
    third = QQ(1, 3)

    def om(p, q):
        return one_minus(R, [p, q])

    common = [om(0, 2), om(0, 3), om(0, 3)]

    first = rational_fn(
        (1 + v**2 + v**4) * ((1 + v**2) * (1 - t**2 * v) + 2 * t * v * (1 - v)) * third,
        common + [om(0, 1), om(0, 2), om(0, 2), om(0, 2), om(1, 0), om(1, 0), om(2, 0)],
    )
    second = rational_fn(
        (1 - v) * (1 + t * v) * third,
        common + [om(0, 2), om(1, 0), om(2, 0)],
    )
    third_term = rational_fn(
        (1 - v**2) * (1 - t * v) * third,
        common + [om(0, 3), om(3, 0)],
    )
    fourth = rational_fn(
        -(v**3) * ((1 - v + v**2) * (1 - t**2 * v**2) + t * v * (1 - v**2)),
        common + [om(0, 1), om(0, 2), om(0, 2), om(0, 4), om(1, 0), om(2, 0), om(1, 1)],
    )
    return [first, second, third_term, fourth]


def c32_multiplicity_closed_form(bound: int) -> MultSeries:
    """Expansion of the closed-form multiplicity series of H(C32) up to |lam| <= bound."""
    total = None
    for part in c32_multiplicity_closed_form_fn():
        expanded = rf_expand(part, bound)
        total = expanded if total is None else total + expanded
    return MultSeries.of(total.poly, bound)
