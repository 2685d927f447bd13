import logging
from typing import Dict, List, Optional, Tuple

from config import Budget, resolve_budget
from decompositions.branch import BranchDecomposition, validate_bd
from graph_core.graph import Graph
from utils.errors import check_budget

logger = logging.getLogger(__name__)


def exact_branchwidth(g: Graph, budget: Optional[Budget] = None) -> Tuple[int, Optional[BranchDecomposition]]:
    """
    Exact branchwidth by dynamic programming over edge subsets.

    f(S) is the best width of a rooted decomposition of the edges in S,
    including the boundary of S itself; the answer is f(E) with the root
    suppressed. Graphs with at most one edge have branchwidth 0 and no
    decomposition.
    """
    budget = resolve_budget(budget)
    check_budget("exact_branchwidth", g.m, budget.bw_edges)
    edges = g.sorted_edges()
    m = len(edges)
    if m <= 1:
        return 0, None

    full = (1 << m) - 1
    ends = [(1 << u) | (1 << v) for u, v in edges]
    touched = [0] * (1 << m)
    for s in range(1, full + 1):
        low = s & -s
        touched[s] = touched[s ^ low] | ends[low.bit_length() - 1]

    best = [0] * (1 << m)
    split: Dict[int, int] = {}
    for s in range(1, full + 1):
        boundary = (touched[s] & touched[full ^ s]).bit_count()
        low = s & -s
        rest = s ^ low
        if not rest:
            best[s] = boundary
            continue
        value = None
        sub = rest
        # T = low | sub ranges over the proper subsets of s that keep its lowest edge
        while True:
            sub = (sub - 1) & rest
            part = low | sub
            candidate = max(best[part], best[s ^ part])
            if value is None or candidate < value:
                value = candidate
                split[s] = part
            if sub == 0:
                break
        best[s] = max(boundary, value)

    width = best[full]
    bd = _assemble(edges, full, split)
    checked = validate_bd(g, bd)
    if checked != width:
        raise AssertionError(f"assembled decomposition has width {checked}, expected {width}")
    logger.info(f"exact_branchwidth m={m} -> {width}")
    return width, bd


def _assemble(edges, full: int, split: Dict[int, int]) -> BranchDecomposition:
    tree_edges: List[Tuple[int, int]] = []
    leaf_map = {}
    counter = [0]

    def build(s: int) -> int:
        node = counter[0]
        counter[0] += 1
        if s & (s - 1) == 0:
            leaf_map[edges[s.bit_length() - 1]] = node
            return node
        part = split[s]
        for child in (build(part), build(s ^ part)):
            tree_edges.append((node, child))
        return node

    part = split[full]
    left = build(part)
    right = build(full ^ part)
    # the root would have degree 2, so its two subtrees are joined directly
    tree_edges.append((left, right))
    return BranchDecomposition.build(counter[0], tree_edges, leaf_map)
