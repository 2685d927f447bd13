"""Branch decompositions and the two conversions between tree and branch decompositions."""
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Mapping, Tuple

import networkx as nx

from decompositions.tree_decomposition import (
    TreeDecomposition,
    minimalize_td,
    validate_td,
)
from graph_core.graph import Edge, Graph, VertexSet
from utils.errors import CertificateError, InputError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BranchDecomposition:
    """A tree on nodes 0..node_count-1 whose leaves carry the graph edges."""

    node_count: int
    edges: FrozenSet[Tuple[int, int]]
    leaves: Tuple[Tuple[Edge, int], ...]

    @classmethod
    def build(
        cls, node_count: int, edges: Iterable[Tuple[int, int]], leaf_map: Mapping[Edge, int]
    ) -> "BranchDecomposition":
        return cls(
            node_count,
            frozenset((min(x, y), max(x, y)) for x, y in edges),
            tuple(sorted(((min(e), max(e)), leaf) for e, leaf in leaf_map.items())),
        )

    @cached_property
    def leaf_map(self) -> Dict[Edge, int]:
        return dict(self.leaves)

    def sorted_edges(self) -> List[Tuple[int, int]]:
        return sorted(self.edges)

    def tree(self) -> nx.Graph:
        tree = nx.Graph()
        tree.add_nodes_from(range(self.node_count))
        tree.add_edges_from(self.sorted_edges())
        return tree


def _check_structure(g: Graph, bd: BranchDecomposition) -> nx.Graph:
    if g.m < 2:
        raise InputError(f"branch decompositions need at least 2 edges, graph has {g.m}")
    tree = bd.tree()
    if any(not (0 <= x < bd.node_count and 0 <= y < bd.node_count) or x == y for x, y in bd.edges):
        raise CertificateError("malformed tree: bad edge", witness=bd.sorted_edges())
    if not nx.is_tree(tree):
        raise CertificateError("malformed tree: tree edges do not form a tree", witness=bd.sorted_edges())
    for x in range(bd.node_count):
        if tree.degree(x) not in (1, 3):
            raise CertificateError(f"node {x} has degree {tree.degree(x)}", witness=x)
    mapped = set(bd.leaf_map)
    if len(bd.leaf_map) != len(bd.leaves) or mapped != set(g.edges):
        missing = sorted(set(g.edges) - mapped) or sorted(mapped - set(g.edges))
        raise CertificateError("leaf map is not a bijection from the graph edges", witness=missing)
    leaves = sorted(x for x in range(bd.node_count) if tree.degree(x) == 1)
    if sorted(bd.leaf_map.values()) != leaves:
        raise CertificateError("leaf map does not hit every leaf exactly once", witness=leaves)
    return tree


def vertices_across(g: Graph, bd: BranchDecomposition) -> Dict[Tuple[int, int], VertexSet]:
    """For every tree edge, the vertices with incident graph edges on both sides."""
    tree = bd.tree()
    edge_at = {leaf: e for e, leaf in bd.leaf_map.items()}
    degree = [g.degree(v) for v in range(g.n)]
    result = {}
    for x, y in bd.sorted_edges():
        pruned = tree.copy()
        pruned.remove_edge(x, y)
        side = nx.node_connected_component(pruned, y)
        inside_count: Dict[int, int] = {}
        for node in side:
            if node in edge_at:
                for v in edge_at[node]:
                    inside_count[v] = inside_count.get(v, 0) + 1
        result[(x, y)] = frozenset(v for v, count in inside_count.items() if count < degree[v])
    return result


def validate_bd(g: Graph, bd: BranchDecomposition) -> int:
    """Width of bd: the most vertices across any one tree edge."""
    _check_structure(g, bd)
    return max(len(across) for across in vertices_across(g, bd).values())


def td_to_bd(g: Graph, td: TreeDecomposition) -> BranchDecomposition:
    """
    Branch decomposition of width at most width(td)+1.

    Minimalizes td, hangs a leaf bag {v, w} off a bag covering each edge,
    prunes leaves that carry no edge, suppresses degree-2 nodes and finally
    splits nodes of degree above 3.
    """
    if g.m < 2:
        raise InputError(f"td_to_bd needs at least 2 edges, graph has {g.m}")
    td = minimalize_td(g, td)
    bags: Dict[int, VertexSet] = dict(enumerate(td.bags))
    adjacency: Dict[int, set] = {x: set() for x in bags}
    for x, y in td.edges:
        adjacency[x].add(y)
        adjacency[y].add(x)
    next_id = len(bags)
    leaf_of: Dict[Edge, int] = {}
    for u, v in g.sorted_edges():
        host = min(x for x, bag in enumerate(td.bags) if u in bag and v in bag)
        bags[next_id] = frozenset((u, v))
        adjacency[next_id] = {host}
        adjacency[host].add(next_id)
        leaf_of[(u, v)] = next_id
        next_id += 1
    edge_leaves = set(leaf_of.values())

    # prune
    pending = [x for x in adjacency if len(adjacency[x]) <= 1 and x not in edge_leaves]
    while pending:
        x = pending.pop()
        if x not in adjacency:
            continue
        for y in adjacency.pop(x):
            adjacency[y].discard(x)
            if len(adjacency[y]) <= 1 and y not in edge_leaves:
                pending.append(y)
        del bags[x]

    # suppress degree 2
    for x in sorted(adjacency):
        if len(adjacency[x]) == 2:
            y, z = sorted(adjacency.pop(x))
            adjacency[y].discard(x)
            adjacency[z].discard(x)
            adjacency[y].add(z)
            adjacency[z].add(y)
            del bags[x]

    # split high degree
    for x in sorted(adjacency):
        while len(adjacency[x]) > 3:
            y, z = sorted(adjacency[x])[:2]
            s = next_id
            next_id += 1
            bags[s] = bags[x] & (bags[y] | bags[z])
            adjacency[x] -= {y, z}
            adjacency[y].discard(x)
            adjacency[z].discard(x)
            adjacency[y].add(s)
            adjacency[z].add(s)
            adjacency[s] = {x, y, z}
            adjacency[x].add(s)

    order = {old: new for new, old in enumerate(sorted(adjacency))}
    edges = {(order[x], order[y]) for x in adjacency for y in adjacency[x] if x < y}
    bd = BranchDecomposition.build(
        len(order), edges, {e: order[leaf] for e, leaf in leaf_of.items()}
    )
    logger.debug(f"td_to_bd: td width {td.width} -> bd on {bd.node_count} nodes")
    return bd


def bd_to_td(g: Graph, bd: BranchDecomposition) -> TreeDecomposition:
    """
    Leaf bags hold the endpoints of their edge; an internal bag holds every
    vertex across one of its tree edges. Isolated vertices get singleton
    bags hung off node 0.
    """
    tree = _check_structure(g, bd)
    across = vertices_across(g, bd)
    edge_at = {leaf: e for e, leaf in bd.leaf_map.items()}
    bags: List[set] = []
    for x in range(bd.node_count):
        if tree.degree(x) == 1:
            bags.append(set(edge_at[x]))
        else:
            bag: set = set()
            for y in tree.neighbors(x):
                bag |= across[(min(x, y), max(x, y))]
            bags.append(bag)
    edges = bd.sorted_edges()
    for v in range(g.n):
        if g.degree(v) == 0:
            edges.append((0, len(bags)))
            bags.append({v})
    td = TreeDecomposition.build(bags, edges)
    validate_td(g, td)
    return td
