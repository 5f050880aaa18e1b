# module3_fingroup/invariants.py

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from sympy.polys.domains import QQ
from tqdm import tqdm

from common.errors import ConsistencyError
from module1_exactalg.linalg import EchelonBasis, QMatrix, solve
from module1_exactalg.polynomials import (
    SparsePoly,
    is_homogeneous,
    make_ring,
    max_degree,
    monomial,
    monomial_key,
    monomials_of_degree,
    series_ring,
    substitute,
)
from module1_exactalg.series import TruncSeries, series_inverse
from module2_symmfunc.schur import elementary_from_power_sums
from .groups import MatGroup

logger = logging.getLogger(__name__)


def variables_ring(n: int):
    return make_ring([f"x{i}" for i in range(1, n + 1)])


def act(g: QMatrix, f: SparsePoly) -> SparsePoly:
    """g(f) with g(x_j) = sum_i g_ij x_i."""
    ring = f.ring
    xs = ring.gens
    images = [sum((xs[i] * g[i, j] for i in range(g.rows) if g[i, j]), ring.zero) for j in range(g.cols)]
    return substitute(f, images, ring)


def _det_one_minus_tg(g: QMatrix) -> Tuple:
    """Coefficients of det(1 - t g) = sum (-1)^j e_j t^j, with e_j from traces of powers."""
    power_traces = []
    power = QMatrix.identity(g.rows)
    for _ in range(g.rows):
        power = power @ g
        power_traces.append(power.trace())
    e = elementary_from_power_sums(power_traces)
    return tuple(c if j % 2 == 0 else -c for j, c in enumerate(e))


def molien(group: MatGroup, bound: int) -> TruncSeries:
    """(1/|G|) sum_g 1/det(1 - t g) up to degree `bound`."""
    R = series_ring(1)
    by_charpoly: Dict[Tuple, int] = {}
    for g in group:
        key = _det_one_minus_tg(g)
        by_charpoly[key] = by_charpoly.get(key, 0) + 1
    total = R.zero
    for coeffs, count in by_charpoly.items():
        denom = R.from_dict({(j,): c for j, c in enumerate(coeffs) if c})
        total = total + series_inverse(denom, bound) * count
    logger.debug("Molien series over %d conjugacy-like classes", len(by_charpoly))
    return TruncSeries.of(total * QQ(1, group.order), bound)


def reynolds(group: MatGroup, f: SparsePoly) -> SparsePoly:
    """rho(f) = (1/|G|) sum_g g(f)."""
    total = f.ring.zero
    for g in group:
        total = total + act(g, f)
    return total * QQ(1, group.order)


@dataclass
class InvariantBasis:
    degree: int
    basis: List[SparsePoly]

    def is_invariant_under(self, group: MatGroup) -> bool:
        return all(act(g, f) == f for f in self.basis for g in group)


def invariant_basis(group: MatGroup, degree: int) -> InvariantBasis:
    """Basis of the degree-k invariants spanned by Reynolds images of monomials."""
    ring = variables_ring(group.n)
    span = EchelonBasis(key=monomial_key)
    basis = []
    for m in monomials_of_degree(group.n, degree):
        image = reynolds(group, monomial(ring, m))
        if span.add(image):
            basis.append(image)
    return InvariantBasis(degree, basis)


def _products_of_degree(gens: List[Tuple[int, SparsePoly]], degree: int, cache: Dict) -> List[SparsePoly]:
    """All products g_i1 g_i2 ... (i1 <= i2 <= ...) of generators with total degree `degree`."""
    out = []

    def walk(start: int, remaining: int, indices: Tuple[int, ...]):
        if remaining == 0:
            out.append(_product(indices, gens, cache))
            return
        for i in range(start, len(gens)):
            d = gens[i][0]
            if d <= remaining:
                walk(i, remaining - d, indices + (i,))

    walk(0, degree, ())
    return out


def _product(indices: Tuple[int, ...], gens, cache: Dict) -> SparsePoly:
    if indices not in cache:
        if len(indices) == 1:
            cache[indices] = gens[indices[0]][1]
        else:
            cache[indices] = _product(indices[:-1], gens, cache) * gens[indices[-1]][1]
    return cache[indices]


def extract_generators(
    group: MatGroup,
    maxdeg: Optional[int] = None,
    progress: bool = False,
) -> List[Tuple[int, List[SparsePoly]]]:
    """
    Generators of the invariant ring up to degree `maxdeg` (default |G|, the Noether bound).

    In each degree the span of products of earlier generators is extended by Reynolds images
    of monomials, lexicographically earliest first, until its dimension reaches the Molien
    coefficient. Returns the degrees that contributed new generators with those generators.
    """
    order = group.order
    if maxdeg is None:
        maxdeg = order
    elif maxdeg < order:
        logger.warning(
            "maxdeg=%d is below the Noether bound |G|=%d; generators above degree %d are not searched",
            maxdeg, order, maxdeg,
        )
    ring = variables_ring(group.n)
    hilbert = molien(group, maxdeg)
    found: List[Tuple[int, SparsePoly]] = []
    result: List[Tuple[int, List[SparsePoly]]] = []
    cache: Dict = {}

    for k in tqdm(range(1, maxdeg + 1), desc="invariant degrees", disable=not progress):
        target = int(hilbert.coefficient((k,)))
        span = EchelonBasis(key=monomial_key)
        for prod in _products_of_degree(found, k, cache):
            span.add(prod)
        new: List[SparsePoly] = []
        if span.rank < target:
            for m in monomials_of_degree(group.n, k):
                image = reynolds(group, monomial(ring, m))
                if span.add(image):
                    new.append(image)
                    if span.rank == target:
                        break
        if span.rank != target:
            raise ConsistencyError(f"degree {k}: invariant span has dimension {span.rank}, Molien predicts {target}")
        logger.debug("degree %d: dim %d, %d new generator(s)", k, target, len(new))
        if new:
            result.append((k, new))
            found.extend((k, f) for f in new)
    return result


def generator_degrees(extracted: List[Tuple[int, List[SparsePoly]]]) -> List[int]:
    return [k for k, polys in extracted for _ in polys]


def _weighted_exponents(weights: Sequence[int], total: int) -> List[Tuple[int, ...]]:
    out = []

    def walk(i: int, remaining: int, prefix: Tuple[int, ...]):
        if i == len(weights):
            if remaining == 0:
                out.append(prefix)
            return
        for e in range(remaining // weights[i] + 1):
            walk(i + 1, remaining - e * weights[i], prefix + (e,))

    walk(0, total, ())
    return out


def express_in_subalgebra(
    f: SparsePoly,
    generators: Sequence[SparsePoly],
    names: Optional[Sequence[str]] = None,
) -> Optional[SparsePoly]:
    """
    Write f as a polynomial in homogeneous `generators`, or return None if f is not in
    the subalgebra they generate. Solved degree by degree with exact linear algebra.
    """
    if any(not g or not is_homogeneous(g) or max_degree(g) < 1 for g in generators):
        raise ValueError("generators must be nonzero homogeneous polynomials of positive degree")
    weights = [max_degree(g) for g in generators]
    yring = make_ring(list(names) if names else [f"y{i}" for i in range(1, len(generators) + 1)])
    result = yring.zero

    components: Dict[int, Dict] = {}
    for m, c in f.items():
        components.setdefault(sum(m), {})[m] = c

    for k in sorted(components):
        component = components[k]
        exps = _weighted_exponents(weights, k)
        products = []
        for e in exps:
            p = f.ring.one
            for g, power in zip(generators, e):
                if power:
                    p = p * g ** power
            products.append(p)
        keys = set(component)
        for p in products:
            keys.update(p.keys())
        rows = sorted(keys, key=monomial_key)
        if not products:
            return None
        matrix = QMatrix.from_rows([[p.get(m, QQ.zero) for p in products] for m in rows])
        x = solve(matrix, [component.get(m, QQ.zero) for m in rows])
        if x is None:
            return None
        for e, c in zip(exps, x):
            if c:
                result = result + monomial(yring, e, c)
    return result
