# module1_exactalg/polynomials.py

from itertools import combinations_with_replacement
from typing import Dict, List, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement, PolyRing

# Exponent vector of a monomial; its length is the arity of the ring.
Monomial = Tuple[int, ...]

# Sparse multivariate polynomial over QQ: a dict monomial -> nonzero rational.
SparsePoly = PolyElement


def make_ring(names: Sequence[str]) -> PolyRing:
    """
    Polynomial ring over QQ with the given generator names.

    Rings are cached by sympy, so calling this twice with the same names
    returns the same ring and polynomials from both calls can be mixed.
    """
    return PolyRing(list(names), QQ, grlex)


def series_ring(arity: int, prefix: str = "t") -> PolyRing:
    if arity == 1:
        return make_ring([prefix])
    return make_ring([f"{prefix}{i}" for i in range(1, arity + 1)])


def rational(numerator: int, denominator: int = 1):
    return QQ(numerator, denominator)


def parse_rational(text: str):
    """Parse "p/q" or "p" into an exact rational."""
    text = text.strip()
    try:
        if "/" in text:
            num, den = text.split("/", 1)
            return QQ(int(num), int(den))
        return QQ(int(text))
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"not a rational number: {text!r}") from e


def format_rational(value) -> str:
    value = QQ.convert(value)
    return f"{int(QQ.numer(value))}/{int(QQ.denom(value))}"


def total_degree(monom: Monomial) -> int:
    return sum(monom)


def monomial_key(monom: Monomial):
    """Graded lexicographic sort key used for every vectorization."""
    return grlex(monom)


def monomial(ring: PolyRing, exponents: Sequence[int], coeff=1) -> SparsePoly:
    return ring.term_new(tuple(exponents), ring.domain.convert(coeff))


def one_minus(ring: PolyRing, exponents: Sequence[int], coeff=1) -> SparsePoly:
    """The factor 1 - coeff * t^exponents, the usual shape of a Hilbert series denominator."""
    return ring.one - monomial(ring, exponents, coeff)


def truncate(poly: SparsePoly, bound: int) -> SparsePoly:
    """Drop every term of total degree above `bound`."""
    return poly.ring.from_dict({m: c for m, c in poly.items() if sum(m) <= bound})


def max_degree(poly: SparsePoly) -> int:
    return max((sum(m) for m in poly), default=-1)


def is_homogeneous(poly: SparsePoly) -> bool:
    return len({sum(m) for m in poly}) <= 1


def substitute(poly: SparsePoly, images: Sequence[SparsePoly], target: PolyRing) -> SparsePoly:
    """
    Simultaneous substitution x_i -> images[i] of all generators of `poly.ring`.

    The images live in `target`, which may differ from the source ring.
    """
    if len(images) != poly.ring.ngens:
        raise ValueError(f"need {poly.ring.ngens} images, got {len(images)}")
    powers: List[Dict[int, SparsePoly]] = [{} for _ in images]
    result = target.zero
    for monom, coeff in poly.items():
        term = target.ground_new(coeff)
        for i, e in enumerate(monom):
            if e == 0:
                continue
            cache = powers[i]
            if e not in cache:
                cache[e] = images[i] ** e
            term = term * cache[e]
        result = result + term
    return result


def monomials_of_degree(arity: int, degree: int) -> List[Monomial]:
    """
    All exponent vectors of the given total degree, lexicographically earliest first
    (the largest power of the first variable leads).
    """
    result = []
    for combo in combinations_with_replacement(range(arity), degree):
        exps = [0] * arity
        for i in combo:
            exps[i] += 1
        result.append(tuple(exps))
    result.sort(reverse=True)
    return result


def swap_variables(poly: SparsePoly, order: Sequence[int]) -> SparsePoly:
    """Permute variables: the exponent of variable i moves to position order[i]."""
    out = {}
    for monom, coeff in poly.items():
        new = [0] * len(monom)
        for i, e in enumerate(monom):
            new[order[i]] = e
        out[tuple(new)] = coeff
    return poly.ring.from_dict(out)
