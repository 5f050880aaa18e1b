# module4_tracealg/graded.py

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from sympy.utilities.iterables import multiset_permutations
from tqdm import tqdm

from common.constants import GradedKind, TraceCap
from module1_exactalg.linalg import EchelonBasis
from module1_exactalg.polynomials import monomial_key
from .evaluation import symbolic_evaluator
from .trace_expr import TraceMonomial, TraceWord, canonical_word

logger = logging.getLogger(__name__)

Multidegree = Tuple[int, ...]


def trace_word_cap(n: int, cap: TraceCap = TraceCap.RAZMYSLOV) -> int:
    if TraceCap(cap) is TraceCap.KUZMIN:
        return n * (n + 1) // 2
    return n * n


def multidegrees(d: int, total: int) -> List[Multidegree]:
    """Compositions of `total` into d non-negative parts, first coordinate largest first."""
    if d == 1:
        return [(total,)]
    out = []
    for first in range(total, -1, -1):
        for rest in multidegrees(d - 1, total - first):
            out.append((first,) + rest)
    return out


def _contents_below(k: Multidegree, low: int, high: int) -> Iterator[Multidegree]:
    for c in product(*(range(x + 1) for x in k)):
        if low <= sum(c) <= high:
            yield c


def _letters(content: Multidegree) -> List[int]:
    return [i + 1 for i, c in enumerate(content) for _ in range(c)]


@lru_cache(maxsize=None)
def necklaces(content: Multidegree) -> Tuple[TraceWord, ...]:
    """Canonical trace words with the given letter content."""
    words = {canonical_word(p) for p in multiset_permutations(_letters(content))}
    return tuple(sorted(words))


@lru_cache(maxsize=None)
def words_with_content(content: Multidegree) -> Tuple[Tuple[int, ...], ...]:
    if not sum(content):
        return ((),)
    return tuple(tuple(p) for p in multiset_permutations(_letters(content)))


def _word_multisets(pool: List[Tuple[TraceWord, Multidegree]], k: Multidegree) -> List[Tuple[TraceWord, ...]]:
    """Multisets of pool words (non-decreasing pool index) whose contents add up to k."""
    out = []

    def walk(start: int, remaining: Multidegree, chosen: Tuple[TraceWord, ...]):
        if not any(remaining):
            out.append(chosen)
            return
        for i in range(start, len(pool)):
            w, c = pool[i]
            if all(x <= r for x, r in zip(c, remaining)):
                walk(i, tuple(r - x for r, x in zip(remaining, c)), chosen + (w,))

    walk(0, k, ())
    return out


def _pool(k: Multidegree, word_cap: int) -> List[Tuple[TraceWord, Multidegree]]:
    pool = []
    for c in _contents_below(k, 1, word_cap):
        for w in necklaces(c):
            pool.append((w, c))
    pool.sort(key=lambda item: (len(item[0]), item[0]))
    return pool


def trace_monomials(
    k: Multidegree,
    word_cap: int,
    outer_cap: Optional[int] = None,
) -> List[TraceMonomial]:
    """
    Spanning monomials of multidegree k: products of traces of words of length <= word_cap,
    times an outer word of length <= outer_cap when outer_cap is given (mixed algebra).
    """
    k = tuple(k)
    pool = _pool(k, word_cap)
    if outer_cap is None:
        return [TraceMonomial(tuple(sorted(ws))) for ws in _word_multisets(pool, k)]
    result = []
    for c in _contents_below(k, 0, outer_cap):
        rest = tuple(x - y for x, y in zip(k, c))
        inner = _word_multisets([(w, wc) for w, wc in pool if all(a <= b for a, b in zip(wc, rest))], rest)
        for outer in words_with_content(c):
            for ws in inner:
                result.append(TraceMonomial(tuple(sorted(ws)), outer))
    return result


def _mixed_key(key):
    p, q, monom = key
    return (p, q, monomial_key(monom))


def _as_vector(value, kind: GradedKind):
    if kind is GradedKind.PURE:
        return value
    vector = {}
    for (p, q), entry in _enumerate_entries(value):
        for monom, c in entry.items():
            vector[(p, q, monom)] = c
    return vector


def _enumerate_entries(matrix):
    n = matrix.shape[0]
    for p in range(n):
        for q in range(n):
            yield (p, q), matrix[p, q]


def _diagonal_letter(k: Multidegree) -> Optional[int]:
    if not any(k):
        return None
    return max(range(len(k)), key=lambda i: (k[i], -i)) + 1


def _span(n: int, d: int, k: Multidegree, kind: GradedKind, monomials: Sequence[TraceMonomial]) -> EchelonBasis:
    evaluator = symbolic_evaluator(n, d, False, _diagonal_letter(k))
    basis = EchelonBasis(key=monomial_key if kind is GradedKind.PURE else _mixed_key)
    for m in monomials:
        basis.add(_as_vector(evaluator.evaluate_monomial(m, kind is GradedKind.MIXED), kind))
    return basis


def graded_dim(
    n: int,
    d: int,
    multidegree: Sequence[int],
    kind: GradedKind = GradedKind.PURE,
    cap: TraceCap = TraceCap.RAZMYSLOV,
) -> int:
    """
    dim of the multihomogeneous component of C_nd (pure) or T_nd (mixed).

    Rank of all evaluated spanning monomials; trace words are capped at n^2 letters
    (or n(n+1)/2 with the experimental Kuzmin cap) and outer words at n^2 - 1 letters.
    """
    k = tuple(multidegree)
    kind = GradedKind(kind)
    if len(k) != d:
        raise ValueError(f"multidegree {k} does not have {d} entries")
    if any(x < 0 for x in k):
        raise ValueError(f"multidegree entries must be >= 0, got {k}")
    if TraceCap(cap) is TraceCap.KUZMIN:
        logger.warning("Kuzmin cap n(n+1)/2 is experimental: spanning is only proven up to n^2")
    word_cap = trace_word_cap(n, cap)
    outer_cap = n * n - 1 if kind is GradedKind.MIXED else None
    monomials = trace_monomials(k, word_cap, outer_cap)
    dim = _span(n, d, k, kind, monomials).rank
    logger.debug("dim %s of %s trace algebra (n=%d): %d from %d monomials", k, kind.value, n, dim, len(monomials))
    return dim


@dataclass
class DimTable:
    n: int
    d: int
    bound: int
    kind: GradedKind = GradedKind.PURE
    dims: Dict[Multidegree, int] = field(default_factory=dict)

    def lines(self) -> List[str]:
        ordered = sorted(self.dims.items(), key=lambda item: (sum(item[0]), tuple(-x for x in item[0])))
        return [",".join(str(x) for x in k) + f" : {dim}" for k, dim in ordered]


def dim_table(
    n: int,
    d: int,
    bound: int,
    kind: GradedKind = GradedKind.PURE,
    cap: TraceCap = TraceCap.RAZMYSLOV,
    progress: bool = False,
) -> DimTable:
    table = DimTable(n, d, bound, GradedKind(kind))
    ks = [k for total in range(bound + 1) for k in multidegrees(d, total)]
    for k in tqdm(ks, desc=f"graded dims n={n} d={d}", disable=not progress):
        table.dims[k] = graded_dim(n, d, k, kind, cap)
    return table


def min_gen_profile(
    n: int,
    d: int,
    bound: int,
    cap: TraceCap = TraceCap.RAZMYSLOV,
    progress: bool = False,
) -> Dict[Multidegree, int]:
    """
    Number of indecomposable generators of C_nd in each multidegree of total degree 1..bound.

    Products of lower-degree invariants are spanned by trace monomials with at least two
    factors, so the count is how much single traces add to that span.
    """
    word_cap = trace_word_cap(n, cap)
    profile: Dict[Multidegree, int] = {}
    ks = [k for total in range(1, bound + 1) for k in multidegrees(d, total)]
    for k in tqdm(ks, desc=f"generator profile n={n} d={d}", disable=not progress):
        monomials = trace_monomials(k, word_cap)
        decomposable = [m for m in monomials if len(m.words) >= 2]
        single = [m for m in monomials if len(m.words) == 1]
        basis = _span(n, d, k, GradedKind.PURE, decomposable)
        evaluator = symbolic_evaluator(n, d, False, _diagonal_letter(k))
        new = sum(1 for m in single if basis.add(evaluator.evaluate_monomial(m)))
        if new:
            profile[k] = new
            logger.debug("multidegree %s: %d new generator(s)", k, new)
    return profile


def profile_lines(profile: Dict[Multidegree, int]) -> List[str]:
    ordered = sorted(profile.items(), key=lambda item: (sum(item[0]), tuple(-x for x in item[0])))
    return [",".join(str(x) for x in k) + f" : {count}" for k, count in ordered]
