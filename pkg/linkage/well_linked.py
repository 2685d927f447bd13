"""Well-linked, externally well-linked and k-connected vertex sets."""
import logging
from itertools import combinations
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from config import Budget, resolve_budget
from graph_core.flow import disjoint_paths
from graph_core.graph import Graph, VertexSet, component_masks, from_mask, to_mask
from graph_core.verdict import Verdict
from utils.errors import InputError, check_budget

logger = logging.getLogger(__name__)


def _equal_size_pairs(s: List[int], max_size: int, disjoint: bool) -> Iterator[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """Unordered pairs (A, B) of subsets of s with |A| = |B| <= max_size."""
    for size in range(1, max_size + 1):
        subsets = list(combinations(s, size))
        for i, a in enumerate(subsets):
            for b in subsets[i:]:
                if disjoint and set(a) & set(b):
                    continue
                yield a, b


def is_well_linked(g: Graph, s: Iterable[int], external: bool = False, budget: Optional[Budget] = None) -> Verdict:
    """
    Every A, B within s of equal size are joined by |A| vertex-disjoint paths.

    Internal mode checks every pair, intersecting ones included. External
    mode checks disjoint pairs and forbids s as internal path vertices.
    """
    s_set = sorted(g.check_vertices(s, "s"))
    budget = resolve_budget(budget)
    check_budget("is_well_linked", g.n, budget.wl_vertices)
    forbidden = s_set if external else []
    for a, b in _equal_size_pairs(s_set, len(s_set), disjoint=external):
        count, _ = disjoint_paths(g, a, b, forbidden)
        if count < len(a):
            return Verdict.failed(f"only {count} disjoint paths for |A|={len(a)}", (frozenset(a), frozenset(b)))
    return Verdict.passed()


def _best_balance(weights: List[int]) -> int:
    """Largest min(w(P), w(Q)) over splits of the weights into two groups."""
    total = sum(weights)
    reachable = 1
    for weight in weights:
        reachable |= reachable << weight
    best = 0
    for value in range(total // 2 + 1):
        if reachable >> value & 1:
            best = value
    return best


class _CutOracle:
    """Checks well-linkedness through separations instead of flows.

    s fails exactly when some Z and some split of the components of g - Z
    into two groups P, Q give min(|s n P|, |s n Q|) > |Z - s|.
    """

    def __init__(self, g: Graph):
        self.g = g
        self._components: Dict[int, List[int]] = {}

    def components(self, z_mask: int) -> List[int]:
        parts = self._components.get(z_mask)
        if parts is None:
            parts = component_masks(self.g, z_mask)
            self._components[z_mask] = parts
        return parts

    def violation(self, s_mask: int) -> Optional[int]:
        half = s_mask.bit_count() // 2
        for z_mask in range(1 << self.g.n):
            outside = (z_mask & ~s_mask).bit_count()
            if outside >= half:
                continue
            weights = [(part & s_mask).bit_count() for part in self.components(z_mask)]
            if _best_balance([w for w in weights if w]) > outside:
                return z_mask
        return None


def is_well_linked_by_cuts(g: Graph, s: Iterable[int], budget: Optional[Budget] = None) -> Verdict:
    s_mask = to_mask(g.check_vertices(s, "s"))
    budget = resolve_budget(budget)
    check_budget("is_well_linked_by_cuts", g.n, budget.wl_vertices)
    z_mask = _CutOracle(g).violation(s_mask)
    if z_mask is not None:
        return Verdict.failed("separation splits s too evenly", from_mask(z_mask))
    return Verdict.passed()


def well_linked_number(g: Graph, budget: Optional[Budget] = None) -> Tuple[int, VertexSet]:
    """Size of a largest well-linked set, with the lexicographically least one of that size."""
    budget = resolve_budget(budget)
    check_budget("well_linked_number", g.n, budget.wl_vertices)
    oracle = _CutOracle(g)
    for size in range(g.n, 0, -1):
        for s in combinations(range(g.n), size):
            if oracle.violation(to_mask(s)) is None:
                logger.info(f"well_linked_number n={g.n} -> {size} with s={list(s)}")
                return size, frozenset(s)
    return 0, frozenset()


def is_k_connected_set(
    g: Graph, s: Iterable[int], k: int, external: bool = False, budget: Optional[Budget] = None
) -> Verdict:
    """
    |s| >= k and all A, B within s with |A| = |B| <= k are joined by |A| disjoint paths.

    External mode forbids s as internal path vertices and removes the edges of
    g[s], keeping only the edges that join A to B directly.
    """
    if k < 1:
        raise InputError(f"k must be at least 1, got {k}")
    s_set = sorted(g.check_vertices(s, "s"))
    budget = resolve_budget(budget)
    check_budget("is_k_connected_set", g.n, budget.wl_vertices)
    if len(s_set) < k:
        return Verdict.failed(f"|s| = {len(s_set)} < k = {k}", frozenset(s_set))
    inside = g.induced_edges(s_set)
    for a, b in _equal_size_pairs(s_set, k, disjoint=False):
        if external:
            a_set, b_set = set(a), set(b)
            removed = [
                (u, v) for u, v in inside
                if not ((u in a_set and v in b_set) or (u in b_set and v in a_set))
            ]
            count, _ = disjoint_paths(g, a, b, s_set, removed_edges=removed)
        else:
            count, _ = disjoint_paths(g, a, b)
        if count < len(a):
            return Verdict.failed(f"only {count} disjoint paths for |A|={len(a)}", (frozenset(a), frozenset(b)))
    return Verdict.passed()
