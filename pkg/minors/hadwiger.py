import logging
from math import isqrt
from typing import Dict, List, Optional, Tuple

from config import Budget, resolve_budget
from decompositions.treewidth import exact_treewidth
from graph_core.graph import Graph, from_mask, mask_is_connected, neighbourhood_mask
from minors.model import Model, require_model
from utils.errors import check_budget

logger = logging.getLogger(__name__)


def connected_sets(g: Graph) -> List[int]:
    """Every vertex set inducing a connected subgraph, as masks in ascending order."""
    return [mask for mask in range(1, 1 << g.n) if mask_is_connected(g, mask)]


def _edge_bound(m: int) -> int:
    """Largest t with t(t-1)/2 <= m."""
    t = (1 + isqrt(1 + 8 * m)) // 2
    while t * (t - 1) // 2 > m:
        t -= 1
    return t


def find_clique_model(g: Graph, t: int, sets_by_low: Optional[Dict[int, List[int]]] = None) -> Optional[List[int]]:
    """
    Branch masks of a K_t model, or None.

    Branches are chosen in increasing order of their lowest vertex; each new
    branch is a connected set disjoint from the earlier ones and touching
    all of them.
    """
    if t == 0:
        return []
    if sets_by_low is None:
        sets_by_low = _group_by_low(g)
    reach = {mask: neighbourhood_mask(g, mask) | mask for low in sets_by_low for mask in sets_by_low[low]}
    chosen: List[int] = []

    def extend(used: int, after: int) -> bool:
        if len(chosen) == t:
            return True
        needed = t - len(chosen)
        free_above = g.full_mask & ~used & ~((1 << (after + 1)) - 1)
        if free_above.bit_count() < needed:
            return False
        for low in range(after + 1, g.n):
            if used >> low & 1:
                continue
            for mask in sets_by_low.get(low, ()):
                if mask & used:
                    continue
                if all(reach[mask] & branch for branch in chosen):
                    chosen.append(mask)
                    if extend(used | mask, low):
                        return True
                    chosen.pop()
        return False

    return list(chosen) if extend(0, -1) else None


def _group_by_low(g: Graph) -> Dict[int, List[int]]:
    groups: Dict[int, List[int]] = {}
    for mask in connected_sets(g):
        groups.setdefault((mask & -mask).bit_length() - 1, []).append(mask)
    for masks in groups.values():
        masks.sort(key=lambda mask: (mask.bit_count(), mask))
    return groups


def hadwiger_number(g: Graph, budget: Optional[Budget] = None) -> Tuple[int, Model]:
    """
    Order of the largest complete minor, with a model.

    The search starts at min(tw+1, the edge-count bound) and walks down.
    """
    budget = resolve_budget(budget)
    check_budget("hadwiger_number", g.n, budget.had_vertices)
    if g.n == 0:
        return 0, Model.complete(g, [])
    width, _ = exact_treewidth(g, budget.model_copy(update={"tw_vertices": max(budget.tw_vertices, g.n)}))
    upper = min(width + 1, _edge_bound(g.m), g.n)
    groups = _group_by_low(g)
    for t in range(upper, 0, -1):
        branches = find_clique_model(g, t, groups)
        if branches is not None:
            model = Model.complete(g, [from_mask(mask) for mask in branches])
            require_model(model)
            logger.info(f"hadwiger_number n={g.n} m={g.m} -> {t}")
            return t, model
    raise AssertionError("a single vertex is always a K_1 model")
