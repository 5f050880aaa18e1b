# module4_tracealg/hilbert.py

import logging
from typing import Callable, Dict

from common.constants import GradedKind, TraceCap
from common.entities import CheckReport
from module1_exactalg.polynomials import one_minus, series_ring
from module1_exactalg.series import RationalFn, TruncSeries, rational_fn, rf_expand
from module2_symmfunc.multiplicities import schur_decompose2
from .graded import dim_table

logger = logging.getLogger(__name__)


def _unit(d: int, i: int):
    return [1 if j == i else 0 for j in range(d)]


def polynomial_ring_series(d: int) -> RationalFn:
    """1 / prod (1 - t_i): the Hilbert series of C_1d, the polynomial ring on the entries."""
    R = series_ring(d)
    return rational_fn(R.one, [one_minus(R, _unit(d, i)) for i in range(d)])


def fhl_c22_series() -> RationalFn:
    """
    Hilbert series of C_22 forced by the algebraic independence of
    tr(X1), tr(X2), det(X1), det(X2), tr(X1 X2).
    """
    R = series_ring(2)
    exps = [(1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]
    return rational_fn(R.one, [one_minus(R, e) for e in exps])


def teranishi_c32_series() -> RationalFn:
    """(1 + t1^3 t2^3) / ((1-t1)(1-t2) q2 q3 (1 - t1^2 t2^2)), the Hilbert series of C_32."""
    R = series_ring(2)
    t1, t2 = R.gens
    exps = [(1, 0), (0, 1), (2, 0), (1, 1), (0, 2), (3, 0), (2, 1), (1, 2), (0, 3), (2, 2)]
    return rational_fn(1 + t1**3 * t2**3, [one_minus(R, e) for e in exps])


def formanek_t22_series() -> RationalFn:
    """
    Hilbert series of T_22: 1/((1-t1)(1-t2)) times the sum of all two-variable Schur
    functions, which is 1/((1-t1)(1-t2)(1-t1 t2)).
    """
    R = series_ring(2)
    exps = [(1, 0), (1, 0), (0, 1), (0, 1), (1, 1)]
    return rational_fn(R.one, [one_minus(R, e) for e in exps])


NAMED_SERIES: Dict[str, Callable[[int], RationalFn]] = {
    "polynomial": polynomial_ring_series,
    "fhl": lambda d: fhl_c22_series(),
    "teranishi": lambda d: teranishi_c32_series(),
    "t22": lambda d: formanek_t22_series(),
}


def named_series(name: str, d: int = 2) -> RationalFn:
    try:
        return NAMED_SERIES[name](d)
    except KeyError:
        raise ValueError(f"unknown series {name!r}; choose from {sorted(NAMED_SERIES)}") from None


def hilbert_check(
    n: int,
    d: int,
    bound: int,
    h: RationalFn,
    kind: GradedKind = GradedKind.PURE,
    cap: TraceCap = TraceCap.RAZMYSLOV,
    progress: bool = False,
) -> CheckReport:
    """Compare graded dimensions with the coefficients of h for all multidegrees of total degree <= bound."""
    if h.arity != d:
        raise ValueError(f"series has {h.arity} variables, expected d = {d}")
    expected = rf_expand(h, bound)
    table = dim_table(n, d, bound, kind, cap, progress)
    report = CheckReport(f"hilbert n={n} d={d} degree={bound} kind={GradedKind(kind).value}", ok=True)
    report.details["table"] = table
    for k, dim in table.dims.items():
        report.checked += 1
        want = expected.coefficient(k)
        if want != dim:
            report.ok = False
            report.counterexample = ",".join(str(x) for x in k)
            report.notes.append(f"dimension {dim}, series coefficient {want}")
            logger.info("hilbert mismatch at %s: dim %d, series %s", k, dim, want)
            break
    return report


def table_series(table) -> TruncSeries:
    R = series_ring(table.d)
    return TruncSeries(R.from_dict({k: v for k, v in table.dims.items() if v}), table.bound)


def t22_multiplicity_check(bound: int, progress: bool = False) -> CheckReport:
    """
    Schur-decompose the graded dimensions of T_22 and compare with
    m(l1, l2) = (l1 - l2 + 1)(l2 + 1).
    """
    table = dim_table(2, 2, bound, GradedKind.MIXED, TraceCap.RAZMYSLOV, progress)
    dec = schur_decompose2(table_series(table))
    report = CheckReport(f"t22 multiplicities degree={bound}", ok=True)
    report.details["decomposition"] = dec
    for total in range(bound + 1):
        for l2 in range(total // 2 + 1):
            l1 = total - l2
            report.checked += 1
            want = (l1 - l2 + 1) * (l2 + 1)
            got = dec.multiplicity((l1, l2))
            if got != want:
                report.ok = False
                report.counterexample = f"{l1},{l2}"
                report.notes.append(f"multiplicity {got}, formula {want}")
                return report
    return report
