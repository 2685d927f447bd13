"""(k, S, c)-separators in both the standard and the starred variant, with exact rational thresholds."""
import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Dict, Iterable, List, Optional, Tuple

import networkx as nx

from config import Budget, resolve_budget
from decompositions.normalize import normalize_td
from decompositions.tree_decomposition import TreeDecomposition, is_normalised, validate_td
from graph_core.graph import Graph, VertexSet, component_masks, from_mask, to_mask
from graph_core.verdict import Verdict
from utils.errors import InputError, check_budget

logger = logging.getLogger(__name__)

# how many recent witnesses sep_number retries before searching
_WITNESS_CACHE = 16


@dataclass(frozen=True)
class SeparatorCert:
    x: VertexSet
    s: VertexSet
    c: Fraction
    variant: bool = False


def check_fraction(c) -> Fraction:
    c = Fraction(c)
    if not Fraction(1, 2) <= c < 1:
        raise InputError(f"c must lie in [1/2, 1), got {c}")
    return c


def _heavy_component(g: Graph, x_mask: int, s_mask: int, c: Fraction, variant: bool) -> Optional[int]:
    """First component of g - x that breaks the bound, as a mask, or None."""
    rest = (s_mask & ~x_mask).bit_count()
    base = s_mask.bit_count() if variant else rest
    for component in component_masks(g, x_mask):
        count = (component & s_mask).bit_count()
        if c.denominator * count > c.numerator * base:
            return component
    return None


def is_separator(g: Graph, cert: SeparatorCert) -> Verdict:
    c = check_fraction(cert.c)
    x = g.check_vertices(cert.x, "x")
    s = g.check_vertices(cert.s, "s")
    heavy = _heavy_component(g, to_mask(x), to_mask(s), c, cert.variant)
    if heavy is not None:
        return Verdict.failed("component holds too many vertices of s", from_mask(heavy))
    return Verdict.passed()


def min_separator(
    g: Graph,
    s: Iterable[int],
    c,
    variant: bool = False,
    max_size: Optional[int] = None,
    budget: Optional[Budget] = None,
) -> Optional[VertexSet]:
    """Smallest X (lexicographically least among those) separating s, or None if none has size <= max_size."""
    c = check_fraction(c)
    s_mask = to_mask(g.check_vertices(s, "s"))
    budget = resolve_budget(budget)
    limit = g.n if max_size is None else min(max_size, g.n)
    check_budget("min_separator", sum(comb(g.n, size) for size in range(limit + 1)), budget.subset_enumeration)
    for size in range(limit + 1):
        for x in combinations(range(g.n), size):
            if _heavy_component(g, to_mask(x), s_mask, c, variant) is None:
                return frozenset(x)
    return None


def sep_number_certificate(
    g: Graph,
    c,
    variant: bool = False,
    guided: bool = False,
    budget: Optional[Budget] = None,
) -> Tuple[int, VertexSet, VertexSet]:
    """
    Separation number together with a hardest S and its smallest separator X.

    Sets S are visited from largest to smallest. A short list of separators
    that worked before is tried first; only when none of them fits within
    the current maximum does the search over all X run, growing the maximum
    if it has to. guided=True lets the search take the larger vertex budget.
    """
    c = check_fraction(c)
    budget = resolve_budget(budget)
    limit = budget.sep_guided_vertices if guided else budget.sep_vertices
    check_budget("sep_number", g.n, limit)
    if g.n == 0:
        return 0, frozenset(), frozenset()

    x_by_size: Dict[int, List[int]] = {}

    def x_masks(size: int) -> List[int]:
        if size not in x_by_size:
            x_by_size[size] = [to_mask(x) for x in combinations(range(g.n), size)]
        return x_by_size[size]

    def search(s_mask: int, low: int, high: int) -> Optional[int]:
        for size in range(low, high + 1):
            for x in x_masks(size):
                if _heavy_component(g, x, s_mask, c, variant) is None:
                    return x
        return None

    recent: List[int] = []
    best = 0
    hardest = (0, 0)
    for size in range(g.n, 0, -1):
        for s in combinations(range(g.n), size):
            s_mask = to_mask(s)
            hit = next(
                (x for x in recent if x.bit_count() <= best and _heavy_component(g, x, s_mask, c, variant) is None),
                None,
            )
            if hit is None:
                hit = search(s_mask, 0, best)
            if hit is None:
                hit = search(s_mask, best + 1, g.n)
                if hit is None:
                    raise AssertionError("X = V always separates")
                best = hit.bit_count()
                hardest = (s_mask, hit)
                logger.debug(f"sep_number raised to {best} by S={s}")
            if hit in recent:
                recent.remove(hit)
            recent.insert(0, hit)
            del recent[_WITNESS_CACHE:]
    logger.info(f"sep_number c={c} variant={variant} n={g.n} -> {best}")
    return best, from_mask(hardest[0]), from_mask(hardest[1])


def sep_number(
    g: Graph,
    c,
    variant: bool = False,
    guided: bool = False,
    budget: Optional[Budget] = None,
) -> int:
    """Least k such that every S has a (k, S, c)-separator."""
    return sep_number_certificate(g, c, variant, guided, budget)[0]


def separator_from_td(g: Graph, s: Iterable[int], td: TreeDecomposition) -> VertexSet:
    """
    A (width+1, s, 1/2)-separator read off a normalised decomposition.

    For each tree edge XY let U_X be the vertices occurring only on X's side.
    If neither U_X nor U_Y holds more than half of s - (X n Y), then X n Y
    separates. Otherwise every edge points to its large side and a bag with
    no outgoing edge separates.
    """
    s_set = g.check_vertices(s, "s")
    width = validate_td(g, td)
    if not td.bags:
        return frozenset()
    if not is_normalised(td):
        td = normalize_td(g, td)
    s_mask = to_mask(s_set)
    half = Fraction(1, 2)
    tree = td.tree()
    bags = [to_mask(bag) for bag in td.bags]

    def side_mask(frm: int, to: int) -> int:
        pruned = tree.copy()
        pruned.remove_edge(frm, to)
        mask = 0
        for node in nx.node_connected_component(pruned, to):
            mask |= bags[node]
        return mask

    def separates(x_mask: int) -> bool:
        return _heavy_component(g, x_mask, s_mask, half, False) is None

    out_degree = {node: 0 for node in range(len(bags))}
    for x, y in td.sorted_edges():
        shared = bags[x] & bags[y]
        if separates(shared):
            logger.debug(f"separator_from_td: bags {x} and {y} share a separator")
            return from_mask(shared)
        rest = s_mask & ~shared
        only_x, only_y = side_mask(y, x), side_mask(x, y)
        u_x = only_x & ~only_y & rest
        u_y = only_y & ~only_x & rest
        if 2 * u_y.bit_count() > rest.bit_count():
            out_degree[x] += 1
        elif 2 * u_x.bit_count() > rest.bit_count():
            out_degree[y] += 1
        else:
            raise AssertionError(f"edge ({x}, {y}) has no large side yet its intersection fails")
    sink = min(node for node, degree in out_degree.items() if degree == 0)
    if not separates(bags[sink]) or bags[sink].bit_count() > width + 1:
        raise AssertionError(f"sink bag {sorted(from_mask(bags[sink]))} does not separate")
    return from_mask(bags[sink])
