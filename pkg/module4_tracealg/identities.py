# module4_tracealg/identities.py

from itertools import combinations, permutations
from typing import List, Sequence

from sympy.combinatorics import Permutation
from sympy.polys.domains import QQ

from module2_symmfunc.schur import newton_e_from_p
from .evaluation import TraceEvaluator, generic_matrices, generic_ring, traceless_parts
from .trace_expr import TraceExpr, TraceMonomial, tr, word


def standard_polynomial(letters: Sequence[int]) -> TraceExpr:
    """s_k(X_l1, ..., X_lk) = sum over S_k of sign(sigma) X_l(sigma 1) ... X_l(sigma k)."""
    k = len(letters)
    result = TraceExpr.zero()
    for perm in permutations(range(k)):
        sign = Permutation(list(perm)).signature()
        result = result + word(*[letters[i] for i in perm]) * sign
    return result


def trace_standard(letters: Sequence[int], n: int) -> TraceExpr:
    return standard_polynomial(letters).trace(n)


def cayley_hamilton_2(letter: int = 1) -> TraceExpr:
    """c(X) = X^2 - tr(X) X + (tr^2(X) - tr(X^2)) / 2."""
    x = letter
    return word(x, x) - tr(x) * word(x) + (tr(x) * tr(x) - tr(x, x)) * QQ(1, 2)


def psi2() -> TraceExpr:
    """Mixed Cayley-Hamilton identity for 2 x 2 matrices, the linearization of c(X)."""
    return (
        word(1, 2) + word(2, 1)
        - tr(1) * word(2) - tr(2) * word(1)
        + tr(1) * tr(2) - tr(1, 2)
    )


def phi2() -> TraceExpr:
    """Pure Cayley-Hamilton identity tr(Psi2(X1, X2) X3)."""
    return (psi2() * word(3)).trace(2)


def _power_sums_to_trace(poly, letter: int) -> TraceExpr:
    """Replace p_j by tr(X^j) in a polynomial in p1..pk."""
    result = TraceExpr.zero()
    for monom, c in poly.items():
        words = [(letter,) * (j + 1) for j, e in enumerate(monom) for _ in range(e)]
        result = result + TraceExpr({TraceMonomial.make(words): c})
    return result


def cayley_hamilton(n: int, letter: int = 1) -> TraceExpr:
    """
    chi(X) = sum_k (-1)^k e_k(X) X^(n-k), with e_k written in tr(X^j) by the Newton formulas.
    It vanishes on n x n matrices.
    """
    result = word(*([letter] * n))
    for k in range(1, n + 1):
        e_k = _power_sums_to_trace(newton_e_from_p(k), letter)
        term = e_k * word(*([letter] * (n - k)))
        result = result + term * (-1) ** k
    return result


def determinant_2(letter: int = 1) -> TraceExpr:
    """det(X) = (tr^2(X) - tr(X^2)) / 2 for 2 x 2 matrices."""
    return (tr(letter) * tr(letter) - tr(letter, letter)) * QQ(1, 2)


def sibirskii_generators(d: int) -> List[TraceExpr]:
    """tr(X_i), tr(X_i^2), tr(X_i X_j) (i < j), tr(X_i X_j X_k) (i < j < k): minimal generators of C_2d."""
    gens = [tr(i) for i in range(1, d + 1)]
    gens += [tr(i, i) for i in range(1, d + 1)]
    gens += [tr(i, j) for i, j in combinations(range(1, d + 1), 2)]
    gens += [tr(i, j, k) for i, j, k in combinations(range(1, d + 1), 3)]
    return gens


def substitute_traceless(e: TraceExpr, n: int, d: int) -> TraceExpr:
    """
    Rewrite e under X_i = tr(X_i) E / n + Y_i.

    In the result letters 1..d stand for X_i and appear only as tr(X_i); letters d+1..2d
    stand for the traceless parts Y_i.
    """
    shift = {i: i + d for i in range(1, d + 1)}

    def expand(letters, as_trace: bool) -> TraceExpr:
        total = TraceExpr.zero()
        k = len(letters)
        for mask in range(1 << k):
            scalar_positions = [p for p in range(k) if mask >> p & 1]
            kept = [shift[letters[p]] for p in range(k) if not mask >> p & 1]
            factor = TraceExpr.scalar(QQ(1, n ** len(scalar_positions)))
            for p in scalar_positions:
                factor = factor * tr(letters[p])
            if as_trace:
                rest = TraceExpr.tr(*kept) if kept else TraceExpr.scalar(n)
            else:
                rest = word(*kept) if kept else TraceExpr.scalar(1)
            total = total + factor * rest
        return total

    result = TraceExpr.zero()
    for m, c in e.items():
        term = TraceExpr.scalar(c)
        for w in m.words:
            term = term * expand(w, True)
        if m.outer:
            term = term * expand(m.outer, False)
        result = result + term
    return result


def traceless_generator_check(d: int) -> bool:
    """
    Every Sibirskii generator equals its rewriting in tr(X_i) and traces of traceless parts,
    checked by symbolic evaluation on generic 2 x 2 matrices.
    """
    ring = generic_ring(2, d)
    xs = [m.entries for m in generic_matrices(2, d)]
    ys = traceless_parts(xs)
    direct = TraceEvaluator(xs, ring.zero, ring.one)
    split = TraceEvaluator(xs + ys, ring.zero, ring.one)
    for g in sibirskii_generators(d):
        if direct.evaluate(g) != split.evaluate(substitute_traceless(g, 2, d)):
            return False
    return True
