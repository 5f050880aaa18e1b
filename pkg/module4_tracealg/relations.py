# module4_tracealg/relations.py

import logging
from itertools import combinations
from typing import Dict, List, Mapping, Optional

from sympy.polys.domains import QQ
from tqdm import tqdm

from common.constants import DEFAULT_SAMPLES, DEFAULT_SEED
from common.entities import CheckReport
from .derivation import delta
from .evaluation import TraceEvaluator, random_specialization, sample_rng
from .identities import trace_standard
from .trace_expr import TraceExpr, tr

logger = logging.getLogger(__name__)

# W^2 = sum of these multiples of the W-elements in C_32.
ADS_COEFFICIENTS: Dict[str, object] = {
    "W1": QQ(1, 27),
    "W2": QQ(-2, 9),
    "W3'": QQ(4, 15),
    "W3''": QQ(1, 90),
    "W4": QQ(1, 3),
    "W5": QQ(-2, 3),
    "W6": QQ(-1, 3),
    "W7": QQ(-4, 27),
}


def det2(a, b, c, d) -> TraceExpr:
    return a * d - b * c


def det3(m) -> TraceExpr:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def ads_elements() -> Dict[str, TraceExpr]:
    """
    U, V, W, W1..W7, W3', W3'' on two generic traceless 3 x 3 matrices Y1, Y2 (letters 1, 2).
    """
    a11, a12, a22 = tr(1, 1), tr(1, 2), tr(2, 2)
    b111, b112, b122, b222 = tr(1, 1, 1), tr(1, 1, 2), tr(1, 2, 2), tr(2, 2, 2)

    u = det2(a11, a12, a12, a22)
    v = tr(1, 1, 2, 2) - tr(1, 2, 1, 2)
    w = tr(1, 1, 2, 2, 1, 2) - tr(2, 2, 1, 1, 2, 1)
    gram = det3([[a11, a12, a22], [b111, b112, b122], [b112, b122, b222]])
    w6 = det2(b111, b122, b112, b222) ** 2 - det2(b222, b122, b122, b112) * det2(b111, b112, b112, b122) * 4

    first = a22 ** 3
    second = b222 ** 2
    w3_second = TraceExpr.zero()
    for i in range(7):
        w3_second = w3_second + delta(first, i) * delta(second, 6 - i) * (-1) ** i
    w3_second = w3_second * QQ(1, 144)

    return {
        "U": u,
        "V": v,
        "W": w,
        "W1": u ** 3,
        "W2": u ** 2 * v,
        "W3'": u * gram,
        "W3''": w3_second,
        "W4": u * v ** 2,
        "W5": v * gram,
        "W6": w6,
        "W7": v ** 3,
    }


def ads_relation(coefficients: Optional[Mapping[str, object]] = None) -> TraceExpr:
    coefficients = ADS_COEFFICIENTS if coefficients is None else coefficients
    elements = ads_elements()
    rhs = TraceExpr.zero()
    for name, c in coefficients.items():
        rhs = rhs + elements[name] * c
    return elements["W"] ** 2 - rhs


def _specialization_check(
    name: str,
    relations: List[TraceExpr],
    n: int,
    d: int,
    samples: int,
    seed: int,
    progress: bool = False,
) -> CheckReport:
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    report = CheckReport(name, ok=True)
    report.details["seed"] = seed
    for index in tqdm(range(samples), desc=name, disable=not progress):
        mats = random_specialization(n, d, sample_rng(seed, index), traceless=True)
        evaluator = TraceEvaluator.specialized(mats, traceless=True)
        report.checked += 1
        for r, relation in enumerate(relations):
            value = evaluator.evaluate(relation)
            if value:
                report.ok = False
                report.counterexample = f"sample {index}"
                report.notes.append(f"relation {r} evaluates to {value}")
                logger.info("%s fails at sample %d (seed %d)", name, index, seed)
                return report
    return report


def ads_relation_check(
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
    coefficients: Optional[Mapping[str, object]] = None,
    progress: bool = False,
) -> CheckReport:
    """The defining relation of C_32 at random traceless rational 3 x 3 specializations."""
    return _specialization_check(
        f"ads relation samples={samples} seed={seed}",
        [ads_relation(coefficients)], 3, 2, samples, seed, progress,
    )


def s3_trace(i: int, j: int, k: int) -> TraceExpr:
    return trace_standard([i, j, k], 2)


def c2d_gram_relations(d: int) -> List[TraceExpr]:
    """tr s3(Yi,Yj,Yk) tr s3(Yp,Yq,Yr) + 18 det(tr(Y_a Y_b)) for i<j<k, p<q<r."""
    triples = list(combinations(range(1, d + 1), 3))
    out = []
    for left in triples:
        for right in triples:
            gram = det3([[tr(a, b) for b in right] for a in left])
            out.append(s3_trace(*left) * s3_trace(*right) + gram * 18)
    return out


def c2d_alternating_relations(d: int) -> List[TraceExpr]:
    """tr(YpYi) tr s3(Yj,Yk,Yl) - tr(YpYj) tr s3(Yi,Yk,Yl) + tr(YpYk) tr s3(Yi,Yj,Yl) - tr(YpYl) tr s3(Yi,Yj,Yk)."""
    out = []
    for i, j, k, l in combinations(range(1, d + 1), 4):
        for p in range(1, d + 1):
            out.append(
                tr(p, i) * s3_trace(j, k, l)
                - tr(p, j) * s3_trace(i, k, l)
                + tr(p, k) * s3_trace(i, j, l)
                - tr(p, l) * s3_trace(i, j, k)
            )
    return out


def c2d_relations_check(
    d: int,
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
    progress: bool = False,
) -> CheckReport:
    """Both families of defining relations of C_2d at random traceless 2 x 2 specializations."""
    relations: List[TraceExpr] = []
    notes = []
    if d >= 3:
        relations += c2d_gram_relations(d)
    else:
        notes.append(f"d={d}: first family needs d >= 3, skipped")
    if d >= 4:
        relations += c2d_alternating_relations(d)
    else:
        notes.append(f"d={d}: second family needs d >= 4, skipped")
    for note in notes:
        logger.warning(note)
    report = _specialization_check(
        f"c2d relations d={d} samples={samples} seed={seed}",
        relations, 2, d, samples, seed, progress,
    ) if relations else CheckReport(f"c2d relations d={d}", ok=True)
    report.notes = notes + report.notes
    report.details["relations"] = len(relations)
    return report
