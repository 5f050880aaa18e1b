# module1_exactalg/linalg.py

import logging
from dataclasses import dataclass
from functools import reduce
from math import gcd, lcm
from typing import Any, Callable, Dict, Hashable, List, Mapping, Optional, Sequence, Tuple

import numpy as np
from sympy.polys.domains import QQ

from common.errors import SingularMatrixError

logger = logging.getLogger(__name__)


def _parts(value) -> Tuple[int, int]:
    if isinstance(value, int):
        return value, 1
    value = QQ.convert(value)
    return int(QQ.numer(value)), int(QQ.denom(value))


@dataclass(frozen=True)
class QMatrix:
    """
    Dense rational matrix, immutable and hashable (group elements are stored in sets).

    entries are QQ values in row-major order.
    """
    rows: int
    cols: int
    entries: Tuple[Any, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"QMatrix needs {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Any]]) -> "QMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, tuple(QQ.convert(x) for r in rows for x in r))

    @classmethod
    def from_array(cls, arr: np.ndarray) -> "QMatrix":
        r, c = arr.shape
        return cls(r, c, tuple(QQ.convert(x) for x in arr.flat))

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls(n, n, tuple(QQ.one if i == j else QQ.zero for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "QMatrix":
        return cls(rows, cols, (QQ.zero,) * (rows * cols))

    def __getitem__(self, index: Tuple[int, int]):
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Tuple[Any, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> List[List[Any]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def to_array(self) -> np.ndarray:
        arr = np.empty((self.rows, self.cols), dtype=object)
        for i in range(self.rows):
            for j in range(self.cols):
                arr[i, j] = self[i, j]
        return arr

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_identity(self) -> bool:
        return self.is_square and self == QMatrix.identity(self.rows)

    def transpose(self) -> "QMatrix":
        return QMatrix.from_array(self.to_array().T)

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        return QMatrix.from_array(self.to_array() @ other.to_array())

    def __add__(self, other: "QMatrix") -> "QMatrix":
        return QMatrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "QMatrix") -> "QMatrix":
        return QMatrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def scale(self, c) -> "QMatrix":
        c = QQ.convert(c)
        return QMatrix(self.rows, self.cols, tuple(c * a for a in self.entries))

    def trace(self):
        return sum((self[i, i] for i in range(min(self.rows, self.cols))), QQ.zero)

    def power(self, k: int) -> "QMatrix":
        result = QMatrix.identity(self.rows)
        for _ in range(k):
            result = result @ self
        return result


def _integer_rows(m: QMatrix) -> List[List[int]]:
    """Scale every row by the lcm of its denominators (row space is unchanged)."""
    rows = []
    for i in range(m.rows):
        parts = [_parts(c) for c in m.row(i)]
        den = reduce(lcm, (q for _, q in parts), 1)
        rows.append([p * (den // q) for p, q in parts])
    return rows


def _bareiss(rows: List[List[int]], ncols: int) -> Tuple[np.ndarray, List[int], int]:
    """
    Fraction-free row echelon form of an integer matrix.

    Returns the echelon array, the pivot columns and the number of row swaps.
    Every intermediate entry is a minor of the input, so the divisions are exact.
    """
    a = np.array(rows, dtype=object).reshape(len(rows), ncols)
    nrows = a.shape[0]
    rank = 0
    prev = 1
    swaps = 0
    pivots: List[int] = []
    for col in range(ncols):
        if rank == nrows:
            break
        nz = [i for i in range(rank, nrows) if a[i, col] != 0]
        if not nz:
            continue
        if nz[0] != rank:
            a[[rank, nz[0]]] = a[[nz[0], rank]]
            swaps += 1
        p = a[rank, col]
        if rank + 1 < nrows and col + 1 < ncols:
            below = a[rank + 1:, col].copy()
            a[rank + 1:, col + 1:] = (
                p * a[rank + 1:, col + 1:] - np.multiply.outer(below, a[rank, col + 1:])
            ) // prev
        a[rank + 1:, col] = 0
        prev = p
        pivots.append(col)
        rank += 1
    return a, pivots, swaps


def rank(m: QMatrix) -> int:
    """Rank over QQ via fraction-free elimination."""
    if m.rows == 0 or m.cols == 0:
        return 0
    _, pivots, _ = _bareiss(_integer_rows(m), m.cols)
    return len(pivots)


def det(m: QMatrix):
    if not m.is_square:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return QQ.one
    rows = _integer_rows(m)
    scale = reduce(lambda acc, i: acc * _row_scale(m, i), range(n), 1)
    a, pivots, swaps = _bareiss(rows, n)
    if len(pivots) < n:
        return QQ.zero
    value = QQ(int(a[n - 1, n - 1]), scale)
    return -value if swaps % 2 else value


def _row_scale(m: QMatrix, i: int) -> int:
    return reduce(lcm, (_parts(c)[1] for c in m.row(i)), 1)


def rref(m: QMatrix) -> Tuple[QMatrix, List[int]]:
    """Reduced row echelon form over QQ; the echelon pass is fraction-free."""
    if m.rows == 0 or m.cols == 0:
        return m, []
    a, pivots, _ = _bareiss(_integer_rows(m), m.cols)
    r = [[QQ.convert(int(x)) for x in a[i]] for i in range(len(pivots))]
    for i, col in enumerate(pivots):
        p = r[i][col]
        r[i] = [x / p for x in r[i]]
    for i in reversed(range(len(pivots))):
        col = pivots[i]
        for k in range(i):
            f = r[k][col]
            if f:
                r[k] = [x - f * y for x, y in zip(r[k], r[i])]
    while len(r) < m.rows:
        r.append([QQ.zero] * m.cols)
    return QMatrix.from_rows(r), pivots


def nullspace(m: QMatrix) -> List[Tuple[Any, ...]]:
    """Basis of {v : m v = 0}, one vector per free column."""
    reduced, pivots = rref(m)
    free = [j for j in range(m.cols) if j not in pivots]
    basis = []
    for f in free:
        v = [QQ.zero] * m.cols
        v[f] = QQ.one
        for i, col in enumerate(pivots):
            v[col] = -reduced[i, f]
        basis.append(tuple(v))
    return basis


def solve(m: QMatrix, b: Sequence[Any]) -> Optional[Tuple[Any, ...]]:
    """
    One exact solution of m x = b (free variables set to zero), or None if inconsistent.
    """
    if len(b) != m.rows:
        raise ValueError(f"right-hand side has {len(b)} entries, matrix has {m.rows} rows")
    augmented = QMatrix.from_rows([list(m.row(i)) + [b[i]] for i in range(m.rows)])
    reduced, pivots = rref(augmented)
    if m.cols in pivots:
        return None
    x = [QQ.zero] * m.cols
    for i, col in enumerate(pivots):
        x[col] = reduced[i, m.cols]
    return tuple(x)


def inverse(m: QMatrix) -> QMatrix:
    if not m.is_square:
        raise SingularMatrixError("only square matrices can be inverted")
    n = m.rows
    eye = QMatrix.identity(n)
    augmented = QMatrix.from_rows([list(m.row(i)) + list(eye.row(i)) for i in range(n)])
    reduced, pivots = rref(augmented)
    if pivots[:n] != list(range(n)):
        raise SingularMatrixError(f"matrix is singular (rank {sum(1 for p in pivots if p < n)} < {n})")
    return QMatrix.from_rows([reduced.row(i)[n:] for i in range(n)])


class EchelonBasis:
    """
    Incremental echelon basis of sparse vectors over QQ.

    Vectors are mappings key -> rational (a SparsePoly is one). Rows are kept as
    primitive integer vectors indexed by their leading key, the smallest key under
    `key`. Only the leading entry is reduced, which is enough for membership and rank.
    """

    def __init__(self, key: Optional[Callable[[Hashable], Any]] = None):
        self._key = key
        self._rows: Dict[Hashable, Dict[Hashable, int]] = {}

    def __len__(self) -> int:
        return len(self._rows)

    @property
    def rank(self) -> int:
        return len(self._rows)

    def _lead(self, vec: Mapping[Hashable, int]) -> Hashable:
        if self._key is None:
            return min(vec)
        return min(vec, key=self._key)

    @staticmethod
    def _primitive(vec: Mapping[Hashable, Any]) -> Dict[Hashable, int]:
        parts = {k: _parts(c) for k, c in vec.items() if c}
        if not parts:
            return {}
        den = reduce(lcm, (q for _, q in parts.values()), 1)
        ints = {k: p * (den // q) for k, (p, q) in parts.items()}
        g = reduce(gcd, ints.values())
        return {k: v // g for k, v in ints.items()} if g != 1 else ints

    def reduce(self, vector: Mapping[Hashable, Any]) -> Dict[Hashable, int]:
        """Residual of `vector` after eliminating leading keys; empty iff in the span."""
        v = self._primitive(vector)
        while v:
            lead = self._lead(v)
            row = self._rows.get(lead)
            if row is None:
                return v
            a, b = row[lead], v[lead]
            new = {k: a * c for k, c in v.items()}
            for k, c in row.items():
                x = new.get(k, 0) - b * c
                if x:
                    new[k] = x
                else:
                    new.pop(k, None)
            v = self._primitive(new)
        return v

    def contains(self, vector: Mapping[Hashable, Any]) -> bool:
        return not self.reduce(vector)

    def add(self, vector: Mapping[Hashable, Any]) -> bool:
        """Add `vector` to the span; returns True iff the rank grew."""
        residual = self.reduce(vector)
        if not residual:
            return False
        self._rows[self._lead(residual)] = residual
        return True

    def extend(self, vectors) -> int:
        return sum(1 for v in vectors if self.add(v))


def span_rank(vectors, key: Optional[Callable[[Hashable], Any]] = None) -> int:
    basis = EchelonBasis(key)
    basis.extend(vectors)
    return basis.rank
