# module5_traceid/permutations.py

from itertools import permutations as _permutations
from typing import Iterator, List, Sequence, Tuple

from sympy.combinatorics import Permutation

# One-line notation (sigma(1), ..., sigma(m)).
Perm = Tuple[int, ...]


def make_perm(images: Sequence[int]) -> Perm:
    p = tuple(int(x) for x in images)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"{p} is not a permutation of 1..{len(p)}")
    return p


def identity(m: int) -> Perm:
    return tuple(range(1, m + 1))


def compose(sigma: Perm, tau: Perm) -> Perm:
    """(sigma tau)(i) = sigma(tau(i))."""
    if len(sigma) != len(tau):
        raise ValueError("permutations of different degrees")
    return tuple(sigma[t - 1] for t in tau)


def _sympy_perm(sigma: Perm) -> Permutation:
    return Permutation([s - 1 for s in sigma])


def inverse(sigma: Perm) -> Perm:
    return tuple(s + 1 for s in (~_sympy_perm(sigma)).array_form)


def cycles(sigma: Perm) -> List[Tuple[int, ...]]:
    """Disjoint cycles including fixed points, each starting at its minimum, sorted by minimum."""
    if not sigma:
        return []
    return [tuple(x + 1 for x in c) for c in _sympy_perm(sigma).full_cyclic_form]


def sign(sigma: Perm) -> int:
    return _sympy_perm(sigma).signature()


def embed(sigma: Perm, m: int) -> Perm:
    """S_k inside S_m, fixing k+1..m."""
    if m < len(sigma):
        raise ValueError(f"cannot embed a permutation of degree {len(sigma)} into S_{m}")
    return tuple(sigma) + tuple(range(len(sigma) + 1, m + 1))


def all_perms(m: int) -> Iterator[Perm]:
    for p in _permutations(range(1, m + 1)):
        yield p


def adjacent_transpositions(m: int) -> List[Perm]:
    out = []
    for i in range(1, m):
        p = list(range(1, m + 1))
        p[i - 1], p[i] = p[i], p[i - 1]
        out.append(tuple(p))
    return out


def format_cycles(sigma: Perm) -> str:
    return "".join("(" + " ".join(str(x) for x in c) + ")" for c in cycles(sigma))
