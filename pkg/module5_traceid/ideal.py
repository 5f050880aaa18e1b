# module5_traceid/ideal.py

import logging
from collections import deque
from functools import lru_cache
from typing import Optional

from tqdm import tqdm

from common.errors import ResourceCapError
from common.settings import load_caps
from module1_exactalg.linalg import EchelonBasis
from module4_tracealg.evaluation import verify_zero
from .group_algebra import GroupAlgElem, fundamental, trace_poly
from .permutations import adjacent_transpositions

logger = logging.getLogger(__name__)


def _check_ideal_cap(m: int):
    cap = load_caps().max_ideal_degree
    if m > cap:
        raise ResourceCapError(f"J(n, m) for m={m} exceeds the feasibility cap m <= {cap} (MATINV_MAX_IDEAL_DEGREE)")


@lru_cache(maxsize=None)
def ideal_basis(n: int, m: int, progress: bool = False) -> EchelonBasis:
    """
    Echelon basis of the two-sided ideal J(n, m) of QS_m generated by fundamental(n).

    Starts from fundamental(n) embedded in S_m and multiplies every new basis vector on
    both sides by adjacent transpositions until the span stops growing.
    """
    _check_ideal_cap(m)
    basis = EchelonBasis()
    if m < n + 1:
        return basis
    generators = [GroupAlgElem.of(s) for s in adjacent_transpositions(m)]
    start = fundamental(n).embed(m)
    basis.add(start.terms)
    queue = deque([start])
    bar = tqdm(desc=f"J({n},{m})", disable=not progress)
    while queue:
        v = queue.popleft()
        for s in generators:
            for w in (s * v, v * s):
                if basis.add(w.terms):
                    queue.append(w)
                    bar.update(1)
    bar.close()
    logger.info("dim J(%d, %d) = %d", n, m, basis.rank)
    return basis


def ideal_dimension(n: int, m: int) -> int:
    return ideal_basis(n, m).rank


def ideal_membership(e: GroupAlgElem, n: int) -> bool:
    """e lies in J(n, m), m the degree of e; J(n, m) = 0 for m < n + 1."""
    _check_ideal_cap(e.m)
    if e.m < n + 1:
        return not e
    return ideal_basis(n, e.m).contains(e.terms)


def semantic_identity(e: GroupAlgElem, n: int, max_degree: Optional[int] = None) -> bool:
    """trace_poly(e) vanishes on m generic n x n matrices."""
    cap = load_caps().max_semantic_degree if max_degree is None else max_degree
    if e.m > cap:
        raise ResourceCapError(
            f"symbolic evaluation of degree {e.m} exceeds the cap {cap} (MATINV_MAX_SEMANTIC_DEGREE)"
        )
    if not e:
        return True
    return verify_zero(trace_poly(e), n)
