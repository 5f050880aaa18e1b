# module3_fingroup/cyclic_example.py

import logging
from dataclasses import dataclass
from typing import List

from common.errors import ConsistencyError
from module1_exactalg.polynomials import SparsePoly, substitute
from .groups import cyclic3_group
from .invariants import express_in_subalgebra, extract_generators, generator_degrees, variables_ring

logger = logging.getLogger(__name__)


@dataclass
class CyclicExample:
    """
    Cyclically symmetric polynomials in three variables.

    f4 satisfies f4^2 - a f4 + b = 0 with a = alpha(e1, e2, e3), b = beta(e1, e2, e3).
    """
    f4: SparsePoly
    a: SparsePoly
    b: SparsePoly
    alpha: SparsePoly
    beta: SparsePoly
    generator_degrees: List[int]
    relation_holds: bool


def cyclic_example() -> CyclicExample:
    R = variables_ring(3)
    x1, x2, x3 = R.gens
    e1 = x1 + x2 + x3
    e2 = x1 * x2 + x1 * x3 + x2 * x3
    e3 = x1 * x2 * x3

    f4 = x1**2 * x2 + x2**2 * x3 + x3**2 * x1
    other_half = x1 * x2**2 + x2 * x3**2 + x3 * x1**2
    a = f4 + other_half
    b = f4 * (a - f4)

    alpha = express_in_subalgebra(a, [e1, e2, e3])
    beta = express_in_subalgebra(b, [e1, e2, e3])
    if alpha is None or beta is None:
        raise ConsistencyError("a or b is not a polynomial in e1, e2, e3")

    a_back = substitute(alpha, [e1, e2, e3], R)
    b_back = substitute(beta, [e1, e2, e3], R)
    holds = a_back == a and b_back == b and not (f4**2 - a_back * f4 + b_back)

    degrees = generator_degrees(extract_generators(cyclic3_group()))
    logger.info("cyclic example: generator degrees %s, relation holds: %s", degrees, holds)
    return CyclicExample(f4, a, b, alpha, beta, degrees, holds)
