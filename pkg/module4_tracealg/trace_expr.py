# module4_tracealg/trace_expr.py

from dataclasses import dataclass
from typing import Dict, Iterable, Mapping, Sequence, Tuple

from sympy.polys.domains import QQ

from module1_exactalg.polynomials import format_rational

# Letters are 1..d; a trace word is stored as its lexicographically minimal rotation.
TraceWord = Tuple[int, ...]


def canonical_word(letters: Sequence[int]) -> TraceWord:
    w = tuple(letters)
    if not w:
        raise ValueError("trace words are nonempty")
    return min(w[i:] + w[:i] for i in range(len(w)))


@dataclass(frozen=True, order=True)
class TraceMonomial:
    """
    tr(w_1) tr(w_2) ... tr(w_r) * outer.

    `words` is a sorted tuple of canonical trace words; `outer` is a plain word
    (empty means the identity matrix, i.e. a pure trace monomial).
    """
    words: Tuple[TraceWord, ...] = ()
    outer: Tuple[int, ...] = ()

    @classmethod
    def make(cls, words: Iterable[Sequence[int]] = (), outer: Sequence[int] = ()) -> "TraceMonomial":
        return cls(tuple(sorted(canonical_word(w) for w in words)), tuple(outer))

    def __mul__(self, other: "TraceMonomial") -> "TraceMonomial":
        return TraceMonomial(tuple(sorted(self.words + other.words)), self.outer + other.outer)

    @property
    def is_pure(self) -> bool:
        return not self.outer

    def letters(self) -> set:
        out = set(self.outer)
        for w in self.words:
            out.update(w)
        return out

    def multidegree(self, d: int) -> Tuple[int, ...]:
        deg = [0] * d
        for w in self.words + (self.outer,):
            for letter in w:
                deg[letter - 1] += 1
        return tuple(deg)

    def __str__(self) -> str:
        parts = ["tr(" + "".join(f"X{i}" for i in w) + ")" for w in self.words]
        if self.outer:
            parts.append("".join(f"X{i}" for i in self.outer))
        return "*".join(parts) if parts else "1"


class TraceExpr:
    """Rational linear combination of trace monomials."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[TraceMonomial, object] = None):
        self.terms: Dict[TraceMonomial, object] = {}
        for m, c in (terms or {}).items():
            c = QQ.convert(c)
            if c:
                self.terms[m] = c

    # constructors

    @classmethod
    def zero(cls) -> "TraceExpr":
        return cls()

    @classmethod
    def scalar(cls, c) -> "TraceExpr":
        return cls({TraceMonomial(): c})

    @classmethod
    def tr(cls, *letters: int) -> "TraceExpr":
        return cls({TraceMonomial.make([letters]): 1})

    @classmethod
    def word(cls, *letters: int) -> "TraceExpr":
        """The matrix product X_{l1} X_{l2} ... (an element of the mixed algebra)."""
        return cls({TraceMonomial((), tuple(letters)): 1})

    # arithmetic

    def _add(self, other: "TraceExpr", sign: int) -> "TraceExpr":
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, QQ.zero) + c * sign
        return TraceExpr(terms)

    @staticmethod
    def _lift(other) -> "TraceExpr":
        return other if isinstance(other, TraceExpr) else TraceExpr.scalar(other)

    def __add__(self, other) -> "TraceExpr":
        return self._add(self._lift(other), 1)

    __radd__ = __add__

    def __sub__(self, other) -> "TraceExpr":
        return self._add(self._lift(other), -1)

    def __rsub__(self, other) -> "TraceExpr":
        return self._lift(other)._add(self, -1)

    def __neg__(self) -> "TraceExpr":
        return TraceExpr({m: -c for m, c in self.terms.items()})

    def __mul__(self, other) -> "TraceExpr":
        if not isinstance(other, TraceExpr):
            c = QQ.convert(other)
            return TraceExpr({m: v * c for m, v in self.terms.items()})
        terms: Dict[TraceMonomial, object] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 * m2
                terms[m] = terms.get(m, QQ.zero) + c1 * c2
        return TraceExpr(terms)

    def __rmul__(self, other) -> "TraceExpr":
        return self * other

    def __pow__(self, k: int) -> "TraceExpr":
        result = TraceExpr.scalar(1)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, TraceExpr):
            other = TraceExpr.scalar(other)
        return self.terms == other.terms

    __hash__ = None

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def items(self):
        return self.terms.items()

    # structure

    @property
    def is_pure(self) -> bool:
        return all(m.is_pure for m in self.terms)

    def letters(self) -> set:
        out = set()
        for m in self.terms:
            out |= m.letters()
        return out

    def multidegrees(self, d: int) -> set:
        return {m.multidegree(d) for m in self.terms}

    def trace(self, n: int) -> "TraceExpr":
        """tr of a mixed expression; tr of the identity matrix is n."""
        terms: Dict[TraceMonomial, object] = {}
        for m, c in self.terms.items():
            if m.outer:
                key = TraceMonomial.make(m.words + (m.outer,))
                coeff = c
            else:
                key = m
                coeff = c * n
            terms[key] = terms.get(key, QQ.zero) + coeff
        return TraceExpr(terms)

    def map_letters(self, mapping: Mapping[int, int]) -> "TraceExpr":
        terms: Dict[TraceMonomial, object] = {}
        for m, c in self.terms.items():
            key = TraceMonomial.make(
                [[mapping.get(x, x) for x in w] for w in m.words],
                [mapping.get(x, x) for x in m.outer],
            )
            terms[key] = terms.get(key, QQ.zero) + c
        return TraceExpr(terms)

    def __repr__(self) -> str:
        return f"TraceExpr({str(self)})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{format_rational(c)}*{m}" for m, c in sorted(self.terms.items()))


def trace_of(e: TraceExpr, n: int) -> TraceExpr:
    return e.trace(n)


tr = TraceExpr.tr
word = TraceExpr.word
