"""Embedding a graph as a minor of a tree product built from one of its tree decompositions."""
import logging
from collections import deque
from typing import Dict, List, Optional, Tuple

from config import Budget
from decompositions.chordal import chordal_completion, peo
from decompositions.tree_decomposition import TreeDecomposition, validate_td
from decompositions.treewidth import exact_treewidth
from graph_core.graph import Graph
from minors.model import Model, require_model
from tree_products.products import TreeGraph, cart_product_tree, lex_product
from utils.errors import InputError

logger = logging.getLogger(__name__)


def _decomposition_tree(td: TreeDecomposition) -> TreeGraph:
    return TreeGraph.from_edges(len(td.bags), td.edges)


def _slots(td: TreeDecomposition) -> Dict[int, int]:
    """Each vertex takes the smallest slot free in the first bag (BFS from node 0) holding it."""
    neighbours = td.neighbours()
    slot: Dict[int, int] = {}
    seen = {0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        taken = {slot[v] for v in td.bags[x] if v in slot}
        free = (i for i in range(len(td.bags[x])) if i not in taken)
        for v in sorted(td.bags[x]):
            if v not in slot:
                slot[v] = next(free)
        for y in sorted(neighbours[x]):
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return slot


def model_in_lex_product(g: Graph, td: TreeDecomposition) -> Tuple[TreeGraph, int, Model]:
    """G as a minor of T[K_{w+1}], T the tree of td and w its width."""
    width = validate_td(g, td)
    k = width + 1
    tree = _decomposition_tree(td)
    slot = _slots(td)
    branches: List[set] = [set() for _ in range(g.n)]
    for x, bag in enumerate(td.bags):
        for v in bag:
            branches[v].add(x * k + slot[v])
    model = Model.of(lex_product(tree, k), g, branches)
    require_model(model)
    return tree, k, model


def greedy_colouring(h: Graph, ordering: List[int]) -> Dict[int, int]:
    """Colour vertices in the given order with the smallest colour unused by coloured neighbours."""
    colour: Dict[int, int] = {}
    for v in ordering:
        used = {colour[w] for w in h.neighbors(v) if w in colour}
        colour[v] = next(c for c in range(h.n + 1) if c not in used)
    return colour


def model_in_cart_product(g: Graph, budget: Optional[Budget] = None) -> Tuple[TreeGraph, int, Model]:
    """
    G as a minor of T box K_{tw+1}.

    Colours the chordal completion of a minimum-width decomposition along a
    reversed perfect elimination ordering, which needs at most tw+1 colours,
    and sends v to the copies of its colour in the bags holding v.
    """
    if g.n < 1:
        raise InputError("model_in_cart_product needs at least one vertex")
    width, td = exact_treewidth(g, budget)
    k = width + 1
    completion = chordal_completion(g, td)
    ordering = peo(completion)
    if ordering is None:
        raise AssertionError("chordal completion has no perfect elimination ordering")
    colour = greedy_colouring(completion, list(reversed(ordering)))
    if max(colour.values()) >= k:
        raise AssertionError(f"greedy colouring used {max(colour.values()) + 1} colours, expected <= {k}")
    tree = _decomposition_tree(td)
    branches: List[set] = [set() for _ in range(g.n)]
    for x, bag in enumerate(td.bags):
        for v in bag:
            branches[v].add(x * k + colour[v])
    model = Model.of(cart_product_tree(tree, k), g, branches)
    require_model(model)
    logger.debug(f"model_in_cart_product: tw={width}, {len(td.bags)} tree nodes")
    return tree, k, model
