# module3_fingroup/groups.py

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from common.errors import GroupTooLargeError, SingularMatrixError
from common.settings import load_caps
from module1_exactalg.linalg import QMatrix, det, inverse

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MatGroup:
    """
    Finite group of invertible rational n x n matrices.

    `elements` starts with the identity and follows breadth-first order in the Cayley graph,
    so two closures of the same generator list enumerate the group identically.
    """
    n: int
    elements: Tuple[QMatrix, ...]
    cayley: nx.DiGraph = field(default=None, compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> QMatrix:
        return self.elements[0]


def close(generators: Sequence[QMatrix], cap: Optional[int] = None) -> MatGroup:
    """
    Multiplicative closure of `generators`.

    Raises SingularMatrixError for a non-invertible generator and GroupTooLargeError when
    more than `cap` elements appear (the group is then most likely infinite).
    """
    cap = load_caps().group_cap if cap is None else cap
    if not generators:
        raise ValueError("close() needs at least one generator")
    n = generators[0].rows
    for i, g in enumerate(generators):
        if not g.is_square or g.rows != n:
            raise ValueError(f"generator {i} is {g.rows}x{g.cols}, expected {n}x{n}")
        if not det(g):
            raise SingularMatrixError(f"generator {i} is singular")

    identity = QMatrix.identity(n)
    graph = nx.DiGraph()
    graph.add_node(identity)
    order: List[QMatrix] = [identity]
    frontier = deque([identity])
    while frontier:
        g = frontier.popleft()
        for label, s in enumerate(generators):
            h = g @ s
            if h not in graph:
                if len(order) >= cap:
                    raise GroupTooLargeError(
                        f"closure exceeded {cap} elements; the generated group is probably infinite"
                    )
                graph.add_node(h)
                order.append(h)
                frontier.append(h)
            graph.add_edge(g, h, generator=label)
    logger.info("closed %d generator(s) of size %d into a group of order %d", len(generators), n, len(order))
    return MatGroup(n, tuple(order), graph)


def conjugate(group: MatGroup, p: QMatrix) -> MatGroup:
    """The conjugate group P^-1 G P, same enumeration order."""
    p_inv = inverse(p)
    elements = tuple(p_inv @ g @ p for g in group.elements)
    graph = nx.relabel_nodes(group.cayley, dict(zip(group.elements, elements))) if group.cayley is not None else None
    return MatGroup(group.n, elements, graph)


def random_invertible(n: int, rng: np.random.Generator, bound: int = 3) -> QMatrix:
    """Random integer matrix with entries in [-bound, bound] and nonzero determinant."""
    while True:
        m = QMatrix.from_rows(rng.integers(-bound, bound + 1, size=(n, n)).tolist())
        if det(m):
            return m


def permutation_matrix(images: Sequence[int]) -> QMatrix:
    """Matrix sending basis vector e_j to e_(images[j]) (1-based images)."""
    n = len(images)
    rows = [[0] * n for _ in range(n)]
    for j, i in enumerate(images):
        rows[i - 1][j] = 1
    return QMatrix.from_rows(rows)


def symmetric_group(n: int) -> MatGroup:
    """S_n as permutation matrices, generated by a transposition and an n-cycle."""
    if n == 1:
        return close([QMatrix.identity(1)])
    swap = [2, 1] + list(range(3, n + 1))
    cycle = list(range(2, n + 1)) + [1]
    return close([permutation_matrix(swap), permutation_matrix(cycle)])


def cyclic3_group() -> MatGroup:
    """C_3 generated by the cyclic 3 x 3 matrix with rows (0,0,1), (1,0,0), (0,1,0)."""
    g = QMatrix.from_rows([[0, 0, 1], [1, 0, 0], [0, 1, 0]])
    return close([g])


def trivial_group(n: int) -> MatGroup:
    return close([QMatrix.identity(n)])
