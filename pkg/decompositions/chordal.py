"""Chordal structure: elimination orderings, chordal completions and k-trees."""
import logging
from itertools import combinations
from typing import List, Optional, Sequence

from decompositions.tree_decomposition import TreeDecomposition, validate_td
from graph_core.graph import Graph
from utils.errors import InputError

logger = logging.getLogger(__name__)


def maximum_cardinality_search(g: Graph) -> List[int]:
    """Visit order of MCS; ties go to the smallest vertex id."""
    weight = [0] * g.n
    visited = [False] * g.n
    order = []
    for _ in range(g.n):
        v = max((u for u in range(g.n) if not visited[u]), key=lambda u: (weight[u], -u))
        visited[v] = True
        order.append(v)
        for w in g.neighbors(v):
            if not visited[w]:
                weight[w] += 1
    return order


def is_perfect_elimination_ordering(g: Graph, ordering: Sequence[int]) -> bool:
    position = {v: i for i, v in enumerate(ordering)}
    if sorted(position) != list(range(g.n)):
        return False
    for v in ordering:
        later = [w for w in g.neighbors(v) if position[w] > position[v]]
        if any(not g.has_edge(a, b) for a, b in combinations(later, 2)):
            return False
    return True


def peo(g: Graph) -> Optional[List[int]]:
    """A perfect elimination ordering when g is chordal, else None."""
    ordering = list(reversed(maximum_cardinality_search(g)))
    if is_perfect_elimination_ordering(g, ordering):
        return ordering
    return None


def chordal_completion(g: Graph, td: TreeDecomposition) -> Graph:
    """Join every pair of vertices sharing a bag."""
    validate_td(g, td)
    edges = set(g.edges)
    for bag in td.bags:
        edges.update(combinations(sorted(bag), 2))
    return Graph.from_edges(g.n, edges)


def is_k_tree(g: Graph, k: int) -> bool:
    """K_{k+1}, or reducible to it by deleting k-simplicial vertices one at a time."""
    if k < 1:
        raise InputError(f"is_k_tree needs k >= 1, got {k}")
    if g.n < k + 1:
        return False
    alive = set(range(g.n))
    neighbours = {v: set(g.neighbors(v)) for v in alive}

    def simplicial(v: int) -> bool:
        nbrs = neighbours[v]
        return len(nbrs) == k and all(b in neighbours[a] for a, b in combinations(sorted(nbrs), 2))

    while len(alive) > k + 1:
        v = next((u for u in sorted(alive) if simplicial(u)), None)
        if v is None:
            return False
        for w in neighbours.pop(v):
            neighbours[w].discard(v)
        alive.discard(v)
    return all(len(neighbours[v]) == k for v in alive)
