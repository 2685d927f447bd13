"""Tree decompositions: the data type, validation and the small rewrites shared by the constructions."""
import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from graph_core.graph import Graph, VertexSet
from utils.errors import CertificateError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TreeDecomposition:
    """Bags indexed by tree node 0..len(bags)-1, tree edges as sorted pairs."""

    bags: Tuple[VertexSet, ...]
    edges: FrozenSet[Tuple[int, int]]

    @classmethod
    def build(cls, bags: Sequence[Iterable[int]], edges: Iterable[Tuple[int, int]]) -> "TreeDecomposition":
        return cls(
            tuple(frozenset(bag) for bag in bags),
            frozenset((min(x, y), max(x, y)) for x, y in edges),
        )

    @property
    def width(self) -> int:
        return max((len(bag) for bag in self.bags), default=0) - 1

    @property
    def node_count(self) -> int:
        return len(self.bags)

    def sorted_edges(self) -> List[Tuple[int, int]]:
        return sorted(self.edges)

    def tree(self) -> nx.Graph:
        tree = nx.Graph()
        tree.add_nodes_from(range(len(self.bags)))
        tree.add_edges_from(self.sorted_edges())
        return tree

    def neighbours(self) -> Dict[int, List[int]]:
        result: Dict[int, List[int]] = {x: [] for x in range(len(self.bags))}
        for x, y in self.sorted_edges():
            result[x].append(y)
            result[y].append(x)
        return result


def validate_td(g: Graph, td: TreeDecomposition) -> int:
    """
    Check the three decomposition conditions and return the width.

    Raises:
        CertificateError: naming the first violated condition, with a witness
    """
    if not td.bags:
        if g.n == 0:
            return -1
        raise CertificateError("malformed tree: no nodes", witness=None)
    for x, y in td.edges:
        if not (0 <= x < len(td.bags) and 0 <= y < len(td.bags)) or x == y:
            raise CertificateError(f"malformed tree: bad edge ({x}, {y})", witness=(x, y))
    tree = td.tree()
    if not nx.is_tree(tree):
        raise CertificateError("malformed tree: tree edges do not form a tree", witness=td.sorted_edges())
    for x, bag in enumerate(td.bags):
        for v in bag:
            if not 0 <= v < g.n:
                raise CertificateError(f"bag {x} holds unknown vertex {v}", witness=(x, v))

    for v in range(g.n):
        holders = [x for x, bag in enumerate(td.bags) if v in bag]
        if not holders:
            raise CertificateError(f"vertex {v} is in no bag", witness=v)
        if not nx.is_connected(tree.subgraph(holders)):
            raise CertificateError(f"bags holding vertex {v} are not connected", witness=v)

    for u, v in g.sorted_edges():
        if not any(u in bag and v in bag for bag in td.bags):
            raise CertificateError(f"edge ({u}, {v}) is in no bag", witness=(u, v))
    return td.width


def relabel(bags: Dict[int, VertexSet], edges: Iterable[Tuple[int, int]]) -> TreeDecomposition:
    """Renumber surviving nodes 0..k-1 in ascending order of their old ids."""
    order = {old: new for new, old in enumerate(sorted(bags))}
    return TreeDecomposition.build(
        [bags[old] for old in sorted(bags)],
        [(order[x], order[y]) for x, y in edges],
    )


def contract_edge(bags: Dict[int, VertexSet], adjacency: Dict[int, set], keep: int, drop: int) -> None:
    """Merge node drop into keep in place; keep takes the union of both bags."""
    bags[keep] = bags[keep] | bags[drop]
    for z in adjacency.pop(drop):
        adjacency[z].discard(drop)
        if z != keep:
            adjacency[z].add(keep)
            adjacency[keep].add(z)
    del bags[drop]


def mutable_copy(td: TreeDecomposition) -> Tuple[Dict[int, VertexSet], Dict[int, set]]:
    bags = dict(enumerate(td.bags))
    adjacency: Dict[int, set] = {x: set() for x in bags}
    for x, y in td.edges:
        adjacency[x].add(y)
        adjacency[y].add(x)
    return bags, adjacency


def freeze(bags: Dict[int, VertexSet], adjacency: Dict[int, set]) -> TreeDecomposition:
    edges = {(min(x, y), max(x, y)) for x, nbrs in adjacency.items() for y in nbrs}
    return relabel(bags, edges)


def minimalize_td(g: Graph, td: TreeDecomposition) -> TreeDecomposition:
    """Contract every tree edge whose one bag is contained in the other, to fixpoint."""
    validate_td(g, td)
    bags, adjacency = mutable_copy(td)
    changed = True
    while changed:
        changed = False
        for x in sorted(bags):
            for y in sorted(adjacency[x]):
                if bags[y] <= bags[x]:
                    contract_edge(bags, adjacency, x, y)
                    changed = True
                    break
                if bags[x] <= bags[y]:
                    contract_edge(bags, adjacency, y, x)
                    changed = True
                    break
            if changed:
                break
    return freeze(bags, adjacency)


def td_from_elimination_ordering(g: Graph, ordering: Sequence[int]) -> TreeDecomposition:
    """
    Bag of v = v plus its neighbours later in the ordering after filling in.

    Each node is joined to the node of its earliest later neighbour; the
    roots of separate components are chained so the result is one tree.
    """
    position = {v: i for i, v in enumerate(ordering)}
    if sorted(position) != list(range(g.n)):
        raise CertificateError("ordering is not a permutation of the vertices", witness=list(ordering))
    neighbours = [set(g.neighbors(v)) for v in range(g.n)]
    bags: List[FrozenSet[int]] = [frozenset()] * g.n
    parent: List[Optional[int]] = [None] * g.n
    for v in ordering:
        later = {w for w in neighbours[v] if position[w] > position[v]}
        bags[position[v]] = frozenset(later | {v})
        for a in later:
            neighbours[a] |= later - {a}
        if later:
            parent[position[v]] = position[min(later, key=position.__getitem__)]
    edges = [(i, p) for i, p in enumerate(parent) if p is not None]
    roots = [i for i, p in enumerate(parent) if p is None]
    edges.extend(zip(roots, roots[1:]))
    return TreeDecomposition.build(bags, edges)


def is_normalised(td: TreeDecomposition) -> bool:
    sizes = {len(bag) for bag in td.bags}
    if len(sizes) > 1:
        return False
    return all(
        len(td.bags[x] - td.bags[y]) == 1 and len(td.bags[y] - td.bags[x]) == 1
        for x, y in td.edges
    )
