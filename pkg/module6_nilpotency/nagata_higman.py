# module6_nilpotency/nagata_higman.py

import logging
from itertools import permutations
from typing import Dict, Iterator, Optional, Sequence, Tuple

from tqdm import tqdm

from common.constants import KNOWN_NILPOTENCY_CLASS
from common.errors import ResourceCapError
from common.settings import load_caps
from module1_exactalg.linalg import EchelonBasis
from module5_traceid.permutations import identity, make_perm
from .multilinear import full_linearization

logger = logging.getLogger(__name__)

# How many new spanning vectors to add between two membership tests of the target.
_CHECK_EVERY = 32


def _compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """Compositions of `total` into `parts` positive integers."""
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _consequence_shapes(N: int, n: int) -> Iterator[Tuple[int, Tuple[int, ...], int]]:
    """(len a, lengths of w_1..w_n, len b) with the w's nonempty and total N."""
    for la in range(N - n + 1):
        for lb in range(N - n - la + 1):
            for lengths in _compositions(N - la - lb, n):
                yield la, lengths, lb


def consequences(n: int, N: int) -> Iterator[Dict[Tuple[int, ...], int]]:
    """
    Distinct multilinear consequences a * L(w_1, ..., w_n) * b of degree N, L the full
    linearization of x^n, with the blocks w_i sorted (L is symmetric in them).
    """
    lin = full_linearization(n)
    shapes = list(_consequence_shapes(N, n))
    seen = set()
    for letters in permutations(range(1, N + 1)):
        for la, lengths, lb in shapes:
            a = letters[:la]
            pos = la
            blocks = []
            for length in lengths:
                blocks.append(letters[pos:pos + length])
                pos += length
            b = letters[pos:]
            key = (a, tuple(sorted(blocks)), b)
            if key in seen:
                continue
            seen.add(key)
            vector = {}
            for sigma in lin.terms:
                middle = tuple(x for i in sigma for x in key[1][i - 1])
                vector[a + middle + b] = 1
            yield vector


def _target_word(word: Sequence[int], N: int) -> Tuple[int, ...]:
    w = make_perm(word)
    if len(w) != N:
        raise ValueError(f"target word {w} has degree {len(w)}, expected {N}")
    return w


def nh_membership(n: int, N: int, progress: bool = False, word: Optional[Sequence[int]] = None) -> bool:
    """
    True iff x_1 x_2 ... x_N lies in the multilinear part of the T-ideal generated by x^n.

    `word` replaces the target by x_{w_1} ... x_{w_N} for a permutation w of 1..N.
    """
    if n < 1 or N < 1:
        raise ValueError(f"n and N must be >= 1, got n={n}, N={N}")
    cap = load_caps().max_nilpotency_degree
    if N > cap:
        raise ResourceCapError(f"N={N} exceeds the feasibility cap N <= {cap} (MATINV_MAX_NILPOTENCY_DEGREE)")
    if N < n:
        return False
    target = {identity(N) if word is None else _target_word(word, N): 1}
    basis = EchelonBasis()
    pending = 0
    for vector in tqdm(consequences(n, N), desc=f"x^{n}=0, N={N}", disable=not progress):
        if basis.add(vector):
            pending += 1
            if pending >= _CHECK_EVERY:
                pending = 0
                if basis.contains(target):
                    logger.debug("n=%d N=%d: target reached at rank %d", n, N, basis.rank)
                    return True
    found = basis.contains(target)
    logger.debug("n=%d N=%d: span rank %d, member: %s", n, N, basis.rank, found)
    return found


def bounds(n: int) -> Tuple[int, int, Optional[int]]:
    """(n(n+1)/2, n^2, exact class when known)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return n * (n + 1) // 2, n * n, KNOWN_NILPOTENCY_CLASS.get(n)


def minimal_class(n: int, sweep: int, progress: bool = False) -> Optional[int]:
    """Smallest N <= sweep with nh_membership(n, N), or None."""
    for N in range(1, sweep + 1):
        if nh_membership(n, N, progress):
            logger.info("n=%d minimal_N=%d", n, N)
            return N
    return None
