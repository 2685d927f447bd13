import logging
from typing import List, Optional, Tuple

from config import Budget, resolve_budget
from decompositions.tree_decomposition import (
    TreeDecomposition,
    minimalize_td,
    td_from_elimination_ordering,
    validate_td,
)
from graph_core.graph import Graph, reach_mask
from utils.errors import check_budget

logger = logging.getLogger(__name__)


def _q_size(adjacency, full: int, eliminated: int, v: int) -> int:
    """Neighbours of v's component in G[eliminated + v], outside that set."""
    inside = eliminated | (1 << v)
    component = reach_mask(adjacency, 1 << v, inside)
    boundary = 0
    mask = component
    while mask:
        low = mask & -mask
        mask ^= low
        boundary |= adjacency[low.bit_length() - 1]
    return (boundary & full & ~inside).bit_count()


def elimination_table(g: Graph) -> List[int]:
    """
    table[P] = least possible max |Q| when eliminating the rest after P.

    Filled from the full set downward, since every entry only reads supersets.
    """
    n = g.n
    full = g.full_mask
    adjacency = g.adjacency_masks
    table = [0] * (1 << n)
    table[full] = -1
    for eliminated in range(full - 1, -1, -1):
        best = n
        rest = full & ~eliminated
        while rest:
            low = rest & -rest
            rest ^= low
            v = low.bit_length() - 1
            after = table[eliminated | low]
            if after >= best:
                continue
            q = _q_size(adjacency, full, eliminated, v)
            value = q if q > after else after
            if value < best:
                best = value
        table[eliminated] = best
    return table


def optimal_elimination_ordering(g: Graph, budget: Optional[Budget] = None) -> Tuple[int, List[int]]:
    """Treewidth and the lexicographically smallest ordering attaining it."""
    budget = resolve_budget(budget)
    check_budget("exact_treewidth", g.n, budget.tw_vertices)
    if g.n == 0:
        return -1, []
    table = elimination_table(g)
    width = table[0]
    full = g.full_mask
    adjacency = g.adjacency_masks
    ordering = []
    eliminated = 0
    while eliminated != full:
        for v in range(g.n):
            if eliminated >> v & 1:
                continue
            nxt = eliminated | (1 << v)
            if max(_q_size(adjacency, full, eliminated, v), table[nxt]) <= width:
                ordering.append(v)
                eliminated = nxt
                break
        else:
            raise AssertionError("elimination table has no optimal continuation")
    return width, ordering


def exact_treewidth(g: Graph, budget: Optional[Budget] = None) -> Tuple[int, TreeDecomposition]:
    """
    Exact treewidth by the elimination-ordering subset DP.

    Returns:
        (width, td) where td validates at that width and has no bag contained in a neighbour
    """
    width, ordering = optimal_elimination_ordering(g, budget)
    if g.n == 0:
        return -1, TreeDecomposition.build([], [])
    td = minimalize_td(g, td_from_elimination_ordering(g, ordering))
    checked = validate_td(g, td)
    if checked != width:
        raise AssertionError(f"ordering td has width {checked}, expected {width}")
    logger.info(f"exact_treewidth n={g.n} m={g.m} -> {width}")
    return width, td
