"""Vertex-disjoint path packing via unit-capacity max-flow (Menger)."""
import logging
from typing import Iterable, List, Tuple

import networkx as nx
from networkx.algorithms.flow import edmonds_karp

from graph_core.graph import Graph

logger = logging.getLogger(__name__)

_SOURCE = "source"
_SINK = "sink"


def _split_network(g: Graph, a, b, forbidden, removed_edges) -> nx.DiGraph:
    """Each vertex v becomes (v,'in') -> (v,'out') with capacity 1.

    Forbidden vertices keep their split arc only when they are endpoints, so
    a path can start or end there but never pass through.
    """
    network = nx.DiGraph()
    for v in range(g.n):
        if v in forbidden and v not in a and v not in b:
            continue
        network.add_edge((v, "in"), (v, "out"), capacity=1)
    for u, v in g.sorted_edges():
        if (u, v) in removed_edges:
            continue
        for x, y in ((u, v), (v, u)):
            # a path may only leave a forbidden vertex at its start and enter one at its end
            if x in forbidden and x not in a:
                continue
            if y in forbidden and y not in b:
                continue
            if network.has_node((x, "out")) and network.has_node((y, "in")):
                network.add_edge((x, "out"), (y, "in"), capacity=1)
    for v in sorted(a):
        network.add_edge(_SOURCE, (v, "in"), capacity=1)
    for v in sorted(b):
        network.add_edge((v, "out"), _SINK, capacity=1)
    return network


def _trace_paths(flow, a_only: List[int]) -> List[List[int]]:
    paths = []
    for start in a_only:
        if flow[_SOURCE].get((start, "in"), 0) != 1:
            continue
        path = [start]
        node = (start, "out")
        while True:
            nxt = min(
                (target for target, value in flow[node].items() if value == 1),
                key=lambda t: (t == _SINK, t),
                default=None,
            )
            if nxt is None or nxt == _SINK:
                break
            flow[node][nxt] = 0
            vertex = nxt[0]
            path.append(vertex)
            node = (vertex, "out")
        paths.append(path)
    return paths


def disjoint_paths(
    g: Graph,
    a: Iterable[int],
    b: Iterable[int],
    forbidden_internal: Iterable[int] = (),
    removed_edges: Iterable[Tuple[int, int]] = (),
) -> Tuple[int, List[List[int]]]:
    """
    Maximum number of vertex-disjoint a-b paths avoiding forbidden_internal.

    A vertex in a and b is served by the singleton path [v]. removed_edges
    lets callers delete host edges from the network without rebuilding g.

    Returns:
        (count, paths) where each path is a list of vertices from a to b
    """
    a_set = g.check_vertices(a, "a")
    b_set = g.check_vertices(b, "b")
    forbidden = g.check_vertices(forbidden_internal, "forbidden_internal")
    removed = frozenset((min(u, v), max(u, v)) for u, v in removed_edges)

    shared = sorted(a_set & b_set)
    a_rest = a_set - b_set
    b_rest = b_set - a_set
    singleton_paths = [[v] for v in shared]
    if not a_rest or not b_rest:
        return len(shared), singleton_paths

    # shared vertices are already used by their singleton paths
    blocked = set(shared)
    network = _split_network(g, a_rest, b_rest, forbidden | blocked, removed)
    for v in shared:
        for node in ((v, "in"), (v, "out")):
            if network.has_node(node):
                network.remove_node(node)

    value, flow = nx.maximum_flow(network, _SOURCE, _SINK, flow_func=edmonds_karp)
    paths = _trace_paths(flow, sorted(a_rest))
    logger.debug(f"disjoint_paths |a|={len(a_set)} |b|={len(b_set)} -> {len(shared) + value}")
    return len(shared) + value, singleton_paths + paths
