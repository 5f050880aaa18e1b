# module4_tracealg/evaluation.py

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Union

import numpy as np
from sympy.polys.domains import QQ
from sympy.polys.rings import PolyRing

from common.constants import SPECIALIZATION_RANGE
from common.errors import AlphabetError
from module1_exactalg.linalg import QMatrix
from module1_exactalg.polynomials import make_ring
from .trace_expr import TraceExpr, TraceMonomial, TraceWord, canonical_word

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GenericMatrix:
    """
    n x n matrix of independent variables (traceless: the last diagonal entry is minus
    the sum of the other diagonal entries; diagonal: off-diagonal entries are 0).
    """
    n: int
    index: int
    traceless: bool
    entries: np.ndarray

    def trace(self):
        return np.trace(self.entries)


def _variable_names(n: int, d: int, traceless: bool, diagonal: Optional[int]) -> List[str]:
    prefix = "y" if traceless else "x"
    names = []
    for i in range(1, d + 1):
        for p in range(1, n + 1):
            for q in range(1, n + 1):
                if traceless and p == q == n:
                    continue
                if diagonal == i and p != q:
                    continue
                names.append(f"{prefix}{i}_{p}{q}")
    return names


def generic_ring(n: int, d: int, traceless: bool = False, diagonal: Optional[int] = None) -> PolyRing:
    if traceless and n < 2:
        raise ValueError("traceless generic matrices need n >= 2")
    return make_ring(_variable_names(n, d, traceless, diagonal))


def generic_matrices(
    n: int,
    d: int,
    traceless: bool = False,
    diagonal: Optional[int] = None,
) -> List[GenericMatrix]:
    """
    d generic n x n matrices over one polynomial ring.

    `diagonal` makes matrix number `diagonal` a generic diagonal matrix. Trace expressions
    are conjugation invariant (or equivariant), so a linear combination of them vanishes
    identically iff it vanishes with one argument diagonal.
    """
    ring = generic_ring(n, d, traceless, diagonal)
    gens = dict(zip(_variable_names(n, d, traceless, diagonal), ring.gens))
    prefix = "y" if traceless else "x"
    result = []
    for i in range(1, d + 1):
        entries = np.empty((n, n), dtype=object)
        for p in range(1, n + 1):
            for q in range(1, n + 1):
                entries[p - 1, q - 1] = gens.get(f"{prefix}{i}_{p}{q}", ring.zero)
        if traceless:
            entries[n - 1, n - 1] = -sum((entries[p, p] for p in range(n - 1)), ring.zero)
        result.append(GenericMatrix(n, i, traceless, entries))
    return result


def _identity(n: int, zero, one) -> np.ndarray:
    eye = np.empty((n, n), dtype=object)
    for p in range(n):
        for q in range(n):
            eye[p, q] = one if p == q else zero
    return eye


def _scale(matrix: np.ndarray, s) -> np.ndarray:
    out = np.empty(matrix.shape, dtype=object)
    for index, value in np.ndenumerate(matrix):
        out[index] = value * s
    return out


class TraceEvaluator:
    """
    Evaluates trace expressions on a fixed tuple of matrices, caching word products and traces.

    Scalars are polynomials (symbolic mode) or rationals (specialization).
    """

    def __init__(self, matrices: Sequence[np.ndarray], zero, one):
        if not matrices:
            raise ValueError("need at least one matrix")
        self.n = matrices[0].shape[0]
        self.matrices = list(matrices)
        self.zero = zero
        self.one = one
        self._products: Dict[tuple, np.ndarray] = {(): _identity(self.n, zero, one)}
        self._traces: Dict[TraceWord, object] = {}

    @classmethod
    def symbolic(cls, n: int, d: int, traceless: bool = False, diagonal: Optional[int] = None) -> "TraceEvaluator":
        mats = generic_matrices(n, d, traceless, diagonal)
        ring = generic_ring(n, d, traceless, diagonal)
        return cls([m.entries for m in mats], ring.zero, ring.one)

    @classmethod
    def specialized(cls, matrices: Sequence[QMatrix], traceless: bool = False) -> "TraceEvaluator":
        for i, m in enumerate(matrices, start=1):
            if traceless and m.trace():
                raise AlphabetError(f"matrix {i} is supplied for a traceless slot but has trace {m.trace()}")
        return cls([m.to_array() for m in matrices], QQ.zero, QQ.one)

    @property
    def d(self) -> int:
        return len(self.matrices)

    def _check_letters(self, letters):
        bad = [x for x in letters if not 1 <= x <= self.d]
        if bad:
            raise AlphabetError(f"letters {sorted(set(bad))} are outside 1..{self.d}")

    def product(self, letters: Sequence[int]) -> np.ndarray:
        key = tuple(letters)
        if key not in self._products:
            self._check_letters(key[-1:])
            self._products[key] = self.product(key[:-1]) @ self.matrices[key[-1] - 1]
        return self._products[key]

    def trace(self, letters: Sequence[int]):
        w = canonical_word(letters)
        if w not in self._traces:
            self._traces[w] = np.trace(self.product(w))
        return self._traces[w]

    def monomial_scalar(self, m: TraceMonomial):
        value = self.one
        for w in m.words:
            value = value * self.trace(w)
        return value

    def evaluate(self, expr: TraceExpr):
        """Scalar for a pure expression, n x n object array for a mixed one."""
        self._check_letters(expr.letters())
        if expr.is_pure:
            total = self.zero
            for m, c in expr.items():
                total = total + self.monomial_scalar(m) * c
            return total
        total = _scale(self._products[()], self.zero)
        for m, c in expr.items():
            total = total + _scale(self.product(m.outer), self.monomial_scalar(m) * c)
        return total

    def evaluate_monomial(self, m: TraceMonomial, as_matrix: bool = False):
        """With as_matrix, a pure monomial comes back as its scalar times E."""
        if m.is_pure and not as_matrix:
            return self.monomial_scalar(m)
        return _scale(self.product(m.outer), self.monomial_scalar(m))


@lru_cache(maxsize=32)
def symbolic_evaluator(n: int, d: int, traceless: bool = False, diagonal: Optional[int] = None) -> TraceEvaluator:
    return TraceEvaluator.symbolic(n, d, traceless, diagonal)


def is_zero_value(value) -> bool:
    if isinstance(value, np.ndarray):
        return all(not x for x in value.flat)
    return not value


def evaluate(
    expr: TraceExpr,
    n: Optional[int] = None,
    matrices: Optional[Sequence[QMatrix]] = None,
    traceless: bool = False,
) -> Union[object, np.ndarray]:
    """
    Evaluate `expr` symbolically on generic n x n matrices, or on concrete rational
    `matrices` when they are given.
    """
    if matrices is not None:
        return TraceEvaluator.specialized(matrices, traceless).evaluate(expr)
    if n is None:
        raise ValueError("symbolic evaluation needs the matrix size n")
    d = max(expr.letters(), default=1)
    return symbolic_evaluator(n, d, traceless).evaluate(expr)


def verify_zero(expr: TraceExpr, n: int, traceless: bool = False) -> bool:
    """True iff expr vanishes identically on generic n x n matrices."""
    return is_zero_value(evaluate(expr, n, traceless=traceless))


def sample_rng(seed: int, index: int) -> np.random.Generator:
    """Independent random stream per sample index, reproducible in any evaluation order."""
    return np.random.default_rng([seed, index])


def random_specialization(
    n: int,
    d: int,
    rng: np.random.Generator,
    traceless: bool = False,
    bound: int = SPECIALIZATION_RANGE,
) -> List[QMatrix]:
    """d random integer matrices with entries in [-bound, bound]."""
    result = []
    for _ in range(d):
        entries = rng.integers(-bound, bound + 1, size=(n, n)).tolist()
        if traceless:
            entries[n - 1][n - 1] = -sum(entries[p][p] for p in range(n - 1))
        result.append(QMatrix.from_rows(entries))
    return result


def traceless_parts(matrices: Sequence[np.ndarray]) -> List[np.ndarray]:
    """Y = X - tr(X)/n E for each matrix."""
    out = []
    for x in matrices:
        n = x.shape[0]
        shift = np.trace(x) * QQ(1, n)
        y = x.copy()
        for p in range(n):
            y[p, p] = y[p, p] - shift
        out.append(y)
    return out
