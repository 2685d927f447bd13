"""Fractional and r-integral Hadwiger numbers via exact packing programs over brambles."""
import logging
from fractions import Fraction
from typing import List, Optional, Sequence

import networkx as nx

from certificates.bramble import Bramble, require_bramble
from config import Budget, resolve_budget
from graph_core.graph import Graph, to_mask, touches
from minors.hadwiger import connected_sets
from minors.lp import solve_ip, solve_lp
from minors.model import Model, require_model
from utils.errors import InputError, check_budget

logger = logging.getLogger(__name__)


def _load_rows(n: int, element_masks: Sequence[int]) -> List[List[int]]:
    """Row v holds 1 for every element containing v."""
    return [[mask >> v & 1 for mask in element_masks] for v in range(n)]


def fractional_order(g: Graph, b: Bramble) -> Fraction:
    """max sum of w over elements, subject to each vertex carrying total weight at most 1."""
    require_bramble(g, b)
    masks = [to_mask(element) for element in b.elements]
    value, _ = solve_lp([1] * len(masks), _load_rows(g.n, masks), [1] * g.n)
    return value


def integral_order(g: Graph, b: Bramble, r: int) -> Fraction:
    """Same program with every weight restricted to a multiple of 1/r."""
    if r < 1:
        raise InputError(f"r must be at least 1, got {r}")
    require_bramble(g, b)
    masks = [to_mask(element) for element in b.elements]
    value, _ = solve_ip([1] * len(masks), _load_rows(g.n, masks), [r] * g.n)
    return Fraction(value, r)


def bramble_from_model(m: Model) -> Bramble:
    """The branch sets of a complete-minor model pairwise touch, so they form a bramble."""
    require_model(m)
    if m.pattern.m != m.pattern.n * (m.pattern.n - 1) // 2:
        raise InputError("only complete-minor models give brambles")
    return Bramble(m.branches)


def maximal_brambles(g: Graph) -> List[Bramble]:
    """Inclusion-maximal families of pairwise touching connected sets."""
    sets = connected_sets(g)
    touch = nx.Graph()
    touch.add_nodes_from(range(len(sets)))
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            if touches(g, sets[i], sets[j]):
                touch.add_edge(i, j)
    brambles = []
    for clique in nx.find_cliques(touch):
        brambles.append(Bramble.of(
            [v for v in range(g.n) if sets[i] >> v & 1] for i in sorted(clique)
        ))
    return brambles


def had_f_small(g: Graph, r: Optional[int] = None, budget: Optional[Budget] = None) -> Fraction:
    """
    had_f(g), or had_r(g) when r is given: the best weighted bramble over
    every family of pairwise touching connected sets. Adding elements
    never lowers the optimum, so only maximal families are solved.
    """
    budget = resolve_budget(budget)
    check_budget("had_f_small", g.n, budget.had_f_vertices)
    if g.n == 0:
        return Fraction(0)
    best = Fraction(0)
    families = maximal_brambles(g)
    for b in families:
        value = fractional_order(g, b) if r is None else integral_order(g, b, r)
        if value > best:
            best = value
    logger.info(f"had_f_small n={g.n} r={r}: {len(families)} maximal brambles -> {best}")
    return best
