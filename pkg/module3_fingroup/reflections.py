# module3_fingroup/reflections.py

import logging
from typing import List, Tuple

import networkx as nx

from module1_exactalg.linalg import QMatrix, rank
from .groups import MatGroup

logger = logging.getLogger(__name__)


def is_pseudo_reflection(g: QMatrix) -> bool:
    """
    rank(g - 1) == 1. Elements of a finite group have finite order and are diagonalizable
    over an extension of QQ, so this is the same as being similar to diag(xi, 1, ..., 1).
    """
    return rank(g - QMatrix.identity(g.rows)) == 1


def reflection_check(group: MatGroup) -> Tuple[List[QMatrix], bool]:
    """
    Pseudo-reflections of G and whether they generate G.

    The generated subgroup is the set reachable from the identity in the graph with
    edges g -> g r for every pseudo-reflection r.
    """
    reflections = [g for g in group if is_pseudo_reflection(g)]
    graph = nx.DiGraph()
    graph.add_nodes_from(group.elements)
    for g in group:
        for r in reflections:
            graph.add_edge(g, g @ r)
    reached = {group.identity} | nx.descendants(graph, group.identity)
    generated = len(reached) == group.order
    logger.info(
        "group of order %d has %d pseudo-reflection(s); generated by them: %s",
        group.order, len(reflections), generated,
    )
    return reflections, generated
