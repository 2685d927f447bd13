"""Brambles: validation, exact order, the grid bramble and the Helly hitting bag."""
import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, List, Optional, Tuple

import networkx as nx

from certificates.hitting import HittingSet, minimum_hitting_set
from decompositions.tree_decomposition import TreeDecomposition, validate_td
from families.generators import grid
from graph_core.graph import Graph, VertexSet, component_masks, from_mask, mask_is_connected, to_mask, touches
from graph_core.verdict import Verdict
from utils.errors import CertificateError, InputError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Bramble:
    elements: Tuple[VertexSet, ...]

    @classmethod
    def of(cls, elements: Iterable[Iterable[int]]) -> "Bramble":
        return cls(tuple(frozenset(element) for element in elements))

    def __len__(self) -> int:
        return len(self.elements)


def check_elements(g: Graph, elements: Iterable[VertexSet]) -> None:
    for element in elements:
        g.check_vertices(element, "element")


def validate_bramble(g: Graph, b: Bramble) -> Verdict:
    """Every element non-empty and connected, every pair touching."""
    check_elements(g, b.elements)
    masks = [to_mask(element) for element in b.elements]
    for element, mask in zip(b.elements, masks):
        if not mask_is_connected(g, mask):
            return Verdict.failed("element is empty or disconnected", element)
    for i, j in combinations(range(len(masks)), 2):
        if not touches(g, masks[i], masks[j]):
            return Verdict.failed("elements do not touch", (b.elements[i], b.elements[j]))
    return Verdict.passed()


def require_bramble(g: Graph, b: Bramble) -> None:
    verdict = validate_bramble(g, b)
    if not verdict:
        raise CertificateError(f"invalid bramble: {verdict.reason}", witness=verdict.witness)


def bramble_order(g: Graph, b: Bramble) -> Tuple[int, HittingSet]:
    require_bramble(g, b)
    hs = HittingSet(minimum_hitting_set(b.elements))
    logger.debug(f"bramble of {len(b)} elements has order {hs.order}")
    return hs.order, hs


def grid_bramble(k: int) -> Tuple[Graph, Bramble]:
    """
    The k x k grid with the bramble of crosses of its top-left (k-1) x (k-1)
    subgrid, the bottom row, and the right column minus its bottom vertex.
    Its order is k+1.
    """
    if k < 2:
        raise InputError(f"grid_bramble needs k >= 2, got {k}")
    g = grid(k, k)
    elements: List[VertexSet] = []
    for i in range(k - 1):
        for j in range(k - 1):
            row = {i * k + c for c in range(k - 1)}
            column = {r * k + j for r in range(k - 1)}
            elements.append(frozenset(row | column))
    elements.append(frozenset((k - 1) * k + c for c in range(k)))
    elements.append(frozenset(r * k + (k - 1) for r in range(k - 1)))
    return g, Bramble(tuple(elements))


def hitting_bag(g: Graph, b: Bramble, td: TreeDecomposition) -> VertexSet:
    """
    A bag meeting every element of b.

    Starts at node 0; while some element misses the current bag, steps to the
    neighbour on whose side that element lives. The steps never reverse, so
    the walk ends within one pass over the tree.

    Raises:
        CertificateError: b is not a bramble of g, or td is not a tree decomposition of g
    """
    require_bramble(g, b)
    validate_td(g, td)
    if not td.bags:
        return frozenset()
    tree = td.tree()
    holders = [
        {x for x, bag in enumerate(td.bags) if bag & element}
        for element in b.elements
    ]
    node = 0
    for _ in range(len(td.bags)):
        bag = td.bags[node]
        missed = next((i for i, element in enumerate(b.elements) if not bag & element), None)
        if missed is None:
            return bag
        pruned = tree.copy()
        pruned.remove_node(node)
        step = None
        for y in sorted(tree.neighbors(node)):
            if holders[missed] & nx.node_connected_component(pruned, y):
                step = y
                break
        if step is None:
            raise AssertionError(f"element {sorted(b.elements[missed])} meets no bag")
        node = step
    raise AssertionError("hitting bag walk did not terminate")


def confining_component(g: Graph, b: Bramble, x: Iterable[int]) -> Optional[VertexSet]:
    """The unique component of g - x containing a whole element, or None when x hits b."""
    removed = to_mask(g.check_vertices(x, "x"))
    masks = [to_mask(element) for element in b.elements]
    confining = [
        component
        for component in component_masks(g, removed)
        if any(mask & component == mask for mask in masks)
    ]
    if not confining:
        return None
    if len(confining) > 1:
        raise CertificateError(
            "two components each contain a whole element, so the family is not a bramble",
            witness=[sorted(from_mask(c)) for c in confining],
        )
    return from_mask(confining[0])
