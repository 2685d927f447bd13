"""Lexicographic and cartesian products of a tree with K_k, and their tree decompositions."""
import logging
from dataclasses import dataclass
from itertools import combinations
from typing import List, Tuple

from decompositions.tree_decomposition import TreeDecomposition
from graph_core.graph import Graph, mask_is_connected
from utils.errors import InputError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TreeGraph(Graph):
    """A Graph that is connected with exactly n-1 edges."""

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InputError("a tree needs at least one node")
        if self.m != self.n - 1 or not mask_is_connected(self, self.full_mask):
            raise InputError(f"graph on {self.n} vertices with {self.m} edges is not a tree")


def as_tree(g: Graph) -> TreeGraph:
    if isinstance(g, TreeGraph):
        return g
    return TreeGraph.from_edges(g.n, g.edges)


def _check_k(k: int) -> None:
    if k < 1:
        raise InputError(f"k must be at least 1, got {k}")


def lex_product(t: Graph, k: int) -> Graph:
    """T[K_k]: node x becomes the clique x*k .. x*k+k-1, tree edges become K_{k,k}."""
    tree = as_tree(t)
    _check_k(k)
    edges: List[Tuple[int, int]] = []
    for x in range(tree.n):
        edges.extend(combinations(range(x * k, x * k + k), 2))
    for x, y in tree.sorted_edges():
        edges.extend((x * k + i, y * k + j) for i in range(k) for j in range(k))
    return Graph.from_edges(tree.n * k, edges)


def cart_product_tree(t: Graph, k: int) -> Graph:
    """T box K_k: a clique per node, and (x, i) joined to (y, i) along each tree edge."""
    tree = as_tree(t)
    _check_k(k)
    edges: List[Tuple[int, int]] = []
    for x in range(tree.n):
        edges.extend(combinations(range(x * k, x * k + k), 2))
    for x, y in tree.sorted_edges():
        edges.extend((x * k + i, y * k + i) for i in range(k))
    return Graph.from_edges(tree.n * k, edges)


def td_of_lex_product(t: Graph, k: int) -> TreeDecomposition:
    """
    Bag K_x at node x; the idx-th tree edge xy is subdivided by node N+idx
    carrying K_x u K_y. Width 2k-1 whenever t has an edge.
    """
    tree = as_tree(t)
    _check_k(k)
    copies = [frozenset(range(x * k, x * k + k)) for x in range(tree.n)]
    bags = list(copies)
    edges = []
    for idx, (x, y) in enumerate(tree.sorted_edges()):
        middle = tree.n + idx
        bags.append(copies[x] | copies[y])
        edges.extend([(x, middle), (middle, y)])
    return TreeDecomposition.build(bags, edges)


def td_of_cart_product(t: Graph, k: int) -> TreeDecomposition:
    """
    Each tree edge xy (x < y) is subdivided k times; level j carries
    {(x, i) : i >= j} u {(y, i) : i <= j}, so every bag has at most k+1 vertices.
    """
    tree = as_tree(t)
    _check_k(k)
    bags = [frozenset(range(x * k, x * k + k)) for x in range(tree.n)]
    edges = []
    for idx, (x, y) in enumerate(tree.sorted_edges()):
        previous = x
        for j in range(k):
            node = tree.n + idx * k + j
            bags.append(
                frozenset(x * k + i for i in range(j, k)) | frozenset(y * k + i for i in range(j + 1))
            )
            edges.append((previous, node))
            previous = node
        edges.append((previous, y))
    td = TreeDecomposition.build(bags, edges)
    logger.debug(f"td_of_cart_product: {len(bags)} bags, width {td.width}")
    return td
