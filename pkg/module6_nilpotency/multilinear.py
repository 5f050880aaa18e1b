# module6_nilpotency/multilinear.py

from dataclasses import dataclass, field
from typing import Dict, List

from sympy.polys.domains import QQ

from module1_exactalg.polynomials import format_rational
from module5_traceid.permutations import Perm, all_perms


@dataclass
class MultilinearElem:
    """
    Multilinear element of degree N of the free algebra: the permutation sigma stands for
    the monomial x_sigma(1) x_sigma(2) ... x_sigma(N).
    """
    N: int
    terms: Dict[Perm, object] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for p, c in self.terms.items():
            if len(p) != self.N:
                raise ValueError(f"monomial {p} does not have degree {self.N}")
            c = QQ.convert(c)
            if c:
                clean[tuple(p)] = c
        self.terms = clean

    def monomial_text(self, p: Perm) -> str:
        return "".join(f"x{i}" for i in p)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{format_rational(c)}*{self.monomial_text(p)}" for p, c in sorted(self.terms.items()))

    def lines(self) -> List[str]:
        return [" ".join(str(x) for x in p) + f" : {format_rational(c)}" for p, c in sorted(self.terms.items())]


def full_linearization(n: int) -> MultilinearElem:
    """sum over S_n of x_sigma(1) ... x_sigma(n), the full linearization of x^n."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return MultilinearElem(n, {p: 1 for p in all_perms(n)})
