"""k-linked sets and the linkedness of a graph."""
import logging
from itertools import combinations
from math import comb
from typing import Dict, Iterable, List, Optional, Tuple

from certificates.bramble import Bramble
from config import Budget, resolve_budget
from graph_core.graph import Graph, VertexSet, component_masks, from_mask, to_mask
from graph_core.verdict import Verdict
from utils.errors import InputError, check_budget

logger = logging.getLogger(__name__)


class _ComponentTable:
    """Components of g - X, computed once per X mask."""

    def __init__(self, g: Graph):
        self.g = g
        self._cache: Dict[int, List[int]] = {}

    def __call__(self, x_mask: int) -> List[int]:
        parts = self._cache.get(x_mask)
        if parts is None:
            parts = component_masks(self.g, x_mask)
            self._cache[x_mask] = parts
        return parts


def _cuts(table: _ComponentTable, x_mask: int, s_mask: int) -> bool:
    """True when no component of g - X holds more than half of s."""
    size = s_mask.bit_count()
    return all(2 * (part & s_mask).bit_count() <= size for part in table(x_mask))


def _least_cut(table: _ComponentTable, s_mask: int, max_size: int) -> Optional[int]:
    n = table.g.n
    for size in range(min(max_size, n) + 1):
        for x in combinations(range(n), size):
            x_mask = to_mask(x)
            if _cuts(table, x_mask, s_mask):
                return x_mask
    return None


def min_linking_cut(g: Graph, s: Iterable[int], budget: Optional[Budget] = None) -> Tuple[int, VertexSet]:
    """
    Smallest X leaving no component with more than half of s.

    s is k-linked exactly when this size is at least k.
    """
    s_mask = to_mask(g.check_vertices(s, "s"))
    budget = resolve_budget(budget)
    check_budget("min_linking_cut", 1 << g.n, budget.subset_enumeration)
    x_mask = _least_cut(_ComponentTable(g), s_mask, g.n)
    # X = V always cuts
    return x_mask.bit_count(), from_mask(x_mask)


def is_k_linked(g: Graph, s: Iterable[int], k: int, budget: Optional[Budget] = None) -> Verdict:
    """Every X with |X| < k leaves a component holding more than half of s."""
    if k < 1:
        raise InputError(f"k must be at least 1, got {k}")
    s_mask = to_mask(g.check_vertices(s, "s"))
    budget = resolve_budget(budget)
    check_budget(
        "is_k_linked", sum(comb(g.n, size) for size in range(min(k, g.n + 1))), budget.subset_enumeration
    )
    x_mask = _least_cut(_ComponentTable(g), s_mask, k - 1)
    if x_mask is not None:
        return Verdict.failed("X leaves no component with more than half of s", from_mask(x_mask))
    return Verdict.passed()


def linkedness(g: Graph, budget: Optional[Budget] = None) -> Tuple[int, VertexSet]:
    """Largest k with a k-linked set, and the lexicographically least such set."""
    budget = resolve_budget(budget)
    check_budget("linkedness", g.n, budget.link_vertices)
    if g.n == 0:
        return 0, frozenset()
    table = _ComponentTable(g)
    subsets = sorted(
        (s for size in range(1, g.n + 1) for s in combinations(range(g.n), size))
    )
    best, witness = 0, ()
    for s in subsets:
        s_mask = to_mask(s)
        # s only matters if it survives every X of size <= best
        if _least_cut(table, s_mask, best) is not None:
            continue
        cut = _least_cut(table, s_mask, g.n)
        best, witness = cut.bit_count(), s
    logger.info(f"linkedness n={g.n} -> {best} with s={list(witness)}")
    return best, frozenset(witness)


def bramble_from_linked_set(g: Graph, s: Iterable[int], k: int, budget: Optional[Budget] = None) -> Bramble:
    """
    For a k-linked s, the components of g - X holding more than half of s,
    over all |X| < k. Any two share a vertex of s and no set of fewer than k
    vertices meets them all, so they form a bramble of order at least k.
    """
    s_set = g.check_vertices(s, "s")
    verdict = is_k_linked(g, s_set, k, budget)
    if not verdict:
        raise InputError(f"s is not {k}-linked: X={sorted(verdict.witness)} cuts it")
    s_mask = to_mask(s_set)
    size = len(s_set)
    table = _ComponentTable(g)
    found = set()
    for x_size in range(min(k, g.n + 1)):
        for x in combinations(range(g.n), x_size):
            big = next(part for part in table(to_mask(x)) if 2 * (part & s_mask).bit_count() > size)
            found.add(big)
    elements = sorted((from_mask(mask) for mask in found), key=lambda e: (len(e), sorted(e)))
    return Bramble(tuple(elements))
