# module1_exactalg/series.py

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.rings import PolyRing

from common.errors import NonExpandableError
from .polynomials import Monomial, SparsePoly, format_rational, monomial, parse_rational, truncate

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TruncSeries:
    """
    Power series known up to total degree `bound`.

    Arithmetic between two series keeps the smaller bound.
    """
    poly: SparsePoly
    bound: int

    def __post_init__(self):
        if self.bound < 0:
            raise ValueError(f"truncation bound must be >= 0, got {self.bound}")
        if any(sum(m) > self.bound for m in self.poly):
            raise ValueError("series has terms above its truncation bound; use TruncSeries.of()")

    @classmethod
    def of(cls, poly: SparsePoly, bound: int) -> "TruncSeries":
        return cls(truncate(poly, bound), bound)

    @property
    def ring(self) -> PolyRing:
        return self.poly.ring

    @property
    def arity(self) -> int:
        return self.poly.ring.ngens

    def coefficient(self, exponents: Sequence[int]):
        exponents = tuple(exponents)
        if sum(exponents) > self.bound:
            raise ValueError(f"degree {sum(exponents)} is above the truncation bound {self.bound}")
        return self.poly.get(exponents, QQ.zero)

    def coefficients_1d(self) -> List:
        """Coefficient list 1, t, ..., t^bound of a univariate series."""
        if self.arity != 1:
            raise ValueError("coefficients_1d needs a univariate series")
        return [self.poly.get((k,), QQ.zero) for k in range(self.bound + 1)]

    def truncate(self, bound: int) -> "TruncSeries":
        return TruncSeries.of(self.poly, min(bound, self.bound))

    def _check(self, other: "TruncSeries"):
        if other.ring != self.ring:
            raise ValueError("series live in different rings")

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        self._check(other)
        bound = min(self.bound, other.bound)
        return TruncSeries.of(self.poly + other.poly, bound)

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        self._check(other)
        bound = min(self.bound, other.bound)
        return TruncSeries.of(self.poly - other.poly, bound)

    def __mul__(self, other) -> "TruncSeries":
        if isinstance(other, TruncSeries):
            self._check(other)
            bound = min(self.bound, other.bound)
            return TruncSeries.of(
                mul_truncated(truncate(self.poly, bound), truncate(other.poly, bound), bound), bound
            )
        return TruncSeries(self.poly * QQ.convert(other), self.bound)

    __rmul__ = __mul__

    def multiply_poly(self, poly: SparsePoly) -> "TruncSeries":
        return TruncSeries.of(mul_truncated(self.poly, truncate(poly, self.bound), self.bound), self.bound)

    def lines(self) -> List[str]:
        return series_lines(self)


def mul_truncated(a: SparsePoly, b: SparsePoly, bound: int) -> SparsePoly:
    """Product of two polynomials, skipping every pair whose degree exceeds `bound`."""
    ring = a.ring
    by_degree: Dict[int, List[Tuple[Monomial, object]]] = {}
    for m, c in b.items():
        by_degree.setdefault(sum(m), []).append((m, c))
    out: Dict[Monomial, object] = {}
    for ma, ca in a.items():
        room = bound - sum(ma)
        for deg, terms in by_degree.items():
            if deg > room:
                continue
            for mb, cb in terms:
                key = tuple(x + y for x, y in zip(ma, mb))
                out[key] = out.get(key, QQ.zero) + ca * cb
    return ring.from_dict({m: c for m, c in out.items() if c})


def series_inverse(poly: SparsePoly, bound: int) -> SparsePoly:
    """
    1/poly up to total degree `bound`.

    Writes poly = c(1 - g) with g(0) = 0 and sums the geometric series of g.
    """
    ring = poly.ring
    const = poly.get(ring.zero_monom, QQ.zero)
    if not const:
        raise NonExpandableError(f"factor {poly} has zero constant term")
    g = ring.one - poly * (QQ.one / const)
    result = ring.one
    power = ring.one
    for _ in range(bound):
        power = mul_truncated(power, g, bound)
        if not power:
            break
        result = result + power
    return result * (QQ.one / const)


@dataclass(frozen=True)
class RationalFn:
    """
    Rational function kept in factored form: numerator / prod(factors).

    Factors are usually of the shape 1 - monomial, exactly as the closed forms are printed.
    """
    numerator: SparsePoly
    factors: Tuple[SparsePoly, ...]

    def __post_init__(self):
        ring = self.numerator.ring
        if any(f.ring != ring for f in self.factors):
            raise ValueError("numerator and denominator factors must share a ring")

    @property
    def ring(self) -> PolyRing:
        return self.numerator.ring

    @property
    def arity(self) -> int:
        return self.ring.ngens

    def expand(self, bound: int) -> TruncSeries:
        return rf_expand(self, bound)

    def denominator(self) -> SparsePoly:
        result = self.ring.one
        for f in self.factors:
            result = result * f
        return result


def rational_fn(numerator: SparsePoly, factors: Iterable[SparsePoly]) -> RationalFn:
    return RationalFn(numerator, tuple(factors))


def rf_expand(f: RationalFn, bound: int) -> TruncSeries:
    """Taylor expansion of f up to total degree `bound`."""
    result = truncate(f.numerator, bound)
    for factor in f.factors:
        result = mul_truncated(result, series_inverse(factor, bound), bound)
    logger.debug("expanded rational function with %d factors to degree %d", len(f.factors), bound)
    return TruncSeries(result, bound)


def _reflect(poly: SparsePoly) -> Tuple[SparsePoly, Tuple[int, ...]]:
    """
    Exponent reversal: returns (P*, a) with P*(t) = t^a P(1/t), a the per-variable maximum exponents.
    """
    ring = poly.ring
    if not poly:
        return poly, (0,) * ring.ngens
    shift = tuple(max(m[j] for m in poly) for j in range(ring.ngens))
    star = ring.from_dict({tuple(s - e for s, e in zip(shift, m)): c for m, c in poly.items()})
    return star, shift


def functional_eq_check(h: RationalFn, n: int, d: int) -> bool:
    """
    Test H(1/t_1, ..., 1/t_d) = (-1)^k (t_1...t_d)^(n^2) H(t_1, ..., t_d), k = (d-1)n^2 + 1.

    Substituting t -> 1/t turns N/prod F into t^(B-a) N*/prod F*, where N*, F* are the
    exponent reversals, so the identity is checked by cross-multiplying polynomials.
    """
    ring = h.ring
    if ring.ngens != d:
        raise ValueError(f"H has {ring.ngens} variables, expected d = {d}")
    k = (d - 1) * n * n + 1
    sign = -1 if k % 2 else 1

    num_star, a = _reflect(h.numerator)
    b_total = [0] * d
    prod_f = ring.one
    prod_f_star = ring.one
    for factor in h.factors:
        f_star, b = _reflect(factor)
        b_total = [x + y for x, y in zip(b_total, b)]
        prod_f = prod_f * factor
        prod_f_star = prod_f_star * f_star

    lhs = num_star * monomial(ring, b_total) * prod_f
    rhs = monomial(ring, [n * n + x for x in a], sign) * h.numerator * prod_f_star
    ok = lhs == rhs
    logger.debug("functional equation n=%d d=%d k=%d sign=%+d -> %s", n, d, k, sign, ok)
    return ok


def series_lines(series: TruncSeries) -> List[str]:
    """One line per term, "e1 e2 ... : num/den", by total degree then exponents."""
    terms = sorted(series.poly.items(), key=lambda item: (sum(item[0]), item[0]))
    return [" ".join(str(e) for e in m) + " : " + format_rational(c) for m, c in terms]


def parse_series_lines(lines: Iterable[str], ring: PolyRing, bound: int) -> TruncSeries:
    terms = {}
    for raw in lines:
        raw = raw.strip()
        if not raw:
            continue
        exps, coeff = raw.split(":")
        monom = tuple(int(e) for e in exps.split())
        if len(monom) != ring.ngens:
            raise ValueError(f"term {raw!r} has {len(monom)} exponents, ring has {ring.ngens}")
        terms[monom] = parse_rational(coeff)
    return TruncSeries(ring.from_dict(terms), bound)
