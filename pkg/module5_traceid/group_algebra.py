# module5_traceid/group_algebra.py

from dataclasses import dataclass, field
from math import factorial
from typing import Dict, Iterable, List, Optional

import numpy as np
from sympy.polys.domains import QQ

from module1_exactalg.polynomials import format_rational, parse_rational
from module4_tracealg.trace_expr import TraceExpr, TraceMonomial
from .permutations import Perm, all_perms, compose, cycles, embed, make_perm, sign


@dataclass
class GroupAlgElem:
    """sum alpha_sigma sigma in QS_m."""
    m: int
    terms: Dict[Perm, object] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for p, c in self.terms.items():
            if len(p) != self.m:
                raise ValueError(f"{p} is not in S_{self.m}")
            c = QQ.convert(c)
            if c:
                clean[tuple(p)] = c
        self.terms = clean

    @classmethod
    def of(cls, perm: Perm, coeff=1) -> "GroupAlgElem":
        return cls(len(perm), {tuple(perm): coeff})

    def __add__(self, other: "GroupAlgElem") -> "GroupAlgElem":
        self._check(other)
        terms = dict(self.terms)
        for p, c in other.terms.items():
            terms[p] = terms.get(p, QQ.zero) + c
        return GroupAlgElem(self.m, terms)

    def __sub__(self, other: "GroupAlgElem") -> "GroupAlgElem":
        return self + other.scale(-1)

    def scale(self, c) -> "GroupAlgElem":
        c = QQ.convert(c)
        return GroupAlgElem(self.m, {p: v * c for p, v in self.terms.items()})

    def __mul__(self, other: "GroupAlgElem") -> "GroupAlgElem":
        self._check(other)
        terms: Dict[Perm, object] = {}
        for p, a in self.terms.items():
            for q, b in other.terms.items():
                r = compose(p, q)
                terms[r] = terms.get(r, QQ.zero) + a * b
        return GroupAlgElem(self.m, terms)

    def _check(self, other: "GroupAlgElem"):
        if other.m != self.m:
            raise ValueError(f"elements of QS_{self.m} and QS_{other.m} cannot be combined")

    def __bool__(self) -> bool:
        return bool(self.terms)

    def embed(self, m: int) -> "GroupAlgElem":
        return GroupAlgElem(m, {embed(p, m): c for p, c in self.terms.items()})

    def lines(self) -> List[str]:
        return [" ".join(str(x) for x in p) + f" : {format_rational(c)}" for p, c in sorted(self.terms.items())]


def parse_group_alg_lines(lines: Iterable[str]) -> GroupAlgElem:
    terms = {}
    m: Optional[int] = None
    for raw in lines:
        raw = raw.strip()
        if not raw:
            continue
        perm_text, coeff = raw.split(":")
        perm = make_perm(perm_text.split())
        m = len(perm) if m is None else m
        terms[perm] = parse_rational(coeff)
    if m is None:
        raise ValueError("no terms to parse")
    return GroupAlgElem(m, terms)


def trace_monomial_of(sigma: Perm) -> TraceMonomial:
    """tr_sigma: one trace per cycle, reading the letters along the cycle."""
    return TraceMonomial.make(cycles(sigma))


def trace_poly(e: GroupAlgElem) -> TraceExpr:
    terms: Dict[TraceMonomial, object] = {}
    for p, c in e.terms.items():
        key = trace_monomial_of(p)
        terms[key] = terms.get(key, QQ.zero) + c
    return TraceExpr(terms)


def fundamental(n: int) -> GroupAlgElem:
    """sum over S_(n+1) of sign(sigma) sigma."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return GroupAlgElem(n + 1, {p: sign(p) for p in all_perms(n + 1)})


def random_element(m: int, rng: np.random.Generator, terms: int = 6, coeff_range: int = 3) -> GroupAlgElem:
    """Random element with up to `terms` permutations and integer coefficients in [-coeff_range, coeff_range]."""
    perms = list(all_perms(m))
    picks = rng.choice(len(perms), size=min(terms, factorial(m)), replace=False)
    return GroupAlgElem(m, {perms[int(i)]: int(rng.integers(-coeff_range, coeff_range + 1)) for i in picks})


def random_ideal_element(n: int, m: int, rng: np.random.Generator, terms: int = 3) -> GroupAlgElem:
    """Random combination of products a * fundamental(n) * b, an element of J(n, m) for m > n."""
    perms = list(all_perms(m))
    g = fundamental(n).embed(m)
    result = GroupAlgElem(m)
    for _ in range(terms):
        a = GroupAlgElem.of(perms[int(rng.integers(len(perms)))])
        b = GroupAlgElem.of(perms[int(rng.integers(len(perms)))])
        result = result + (a * g * b).scale(int(rng.integers(1, 4)))
    return result
