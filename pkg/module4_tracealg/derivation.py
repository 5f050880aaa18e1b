# module4_tracealg/derivation.py

from typing import Dict, Union

from sympy.polys.domains import QQ

from module1_exactalg.polynomials import SparsePoly
from .trace_expr import TraceExpr, TraceMonomial


def _delta_expr(e: TraceExpr) -> TraceExpr:
    terms: Dict[TraceMonomial, object] = {}

    def bump(m: TraceMonomial, c):
        terms[m] = terms.get(m, QQ.zero) + c

    for m, c in e.items():
        words = list(m.words)
        for i, w in enumerate(words):
            for pos, letter in enumerate(w):
                if letter == 2:
                    changed = w[:pos] + (1,) + w[pos + 1:]
                    bump(TraceMonomial.make(words[:i] + [changed] + words[i + 1:], m.outer), c)
        for pos, letter in enumerate(m.outer):
            if letter == 2:
                outer = m.outer[:pos] + (1,) + m.outer[pos + 1:]
                bump(TraceMonomial.make(words, outer), c)
    return TraceExpr(terms)


def _delta_poly(f: SparsePoly) -> SparsePoly:
    ring = f.ring
    names = [str(s) for s in ring.symbols]
    index = {name: i for i, name in enumerate(names)}
    result = ring.zero
    for i, name in enumerate(names):
        letter, _, entry = name[1:].partition("_")
        if letter != "2":
            continue
        target = index.get(f"{name[0]}1_{entry}")
        if target is None:
            raise ValueError(f"variable {name} has no counterpart in the first generic matrix")
        result = result + f.diff(ring.gens[i]) * ring.gens[target]
    return result


def delta(e: Union[TraceExpr, SparsePoly], times: int = 1):
    """
    The derivation with delta(X1) = 0, delta(X2) = X1 (and the same on traceless parts),
    commuting with the trace. On polynomials in generic entries it sends every entry
    variable of the second matrix to the matching entry of the first.
    """
    step = _delta_expr if isinstance(e, TraceExpr) else _delta_poly
    for _ in range(times):
        e = step(e)
    return e
