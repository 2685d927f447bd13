"""Immutable simple graphs on vertices 0..n-1.

Besides the plain set view, every graph carries per-vertex neighbour
bitmasks; the exhaustive oracles work on those masks because they run the
same component computation hundreds of thousands of times.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import FrozenSet, Iterable, Iterator, List, Tuple

import networkx as nx

from utils.errors import InputError

Edge = Tuple[int, int]
VertexSet = FrozenSet[int]


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def from_mask(mask: int) -> VertexSet:
    return frozenset(bits(mask))


@dataclass(frozen=True)
class Graph:
    n: int
    edges: FrozenSet[Edge]
    adjacency: Tuple[VertexSet, ...] = field(compare=False, repr=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        if n < 0:
            raise InputError(f"vertex count must be non-negative, got {n}")
        normalized = set()
        neighbours: List[set] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            a, b = (u, v) if u < v else (v, u)
            normalized.add((a, b))
            neighbours[a].add(b)
            neighbours[b].add(a)
        return cls(n, frozenset(normalized), tuple(frozenset(s) for s in neighbours))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> VertexSet:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    @cached_property
    def adjacency_masks(self) -> Tuple[int, ...]:
        return tuple(to_mask(nbrs) for nbrs in self.adjacency)

    @cached_property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.sorted_edges())
        return graph

    def check_vertices(self, vertices: Iterable[int], what: str = "vertex set") -> VertexSet:
        """Return vertices as a frozenset, raising InputError for out-of-range members."""
        result = frozenset(vertices)
        for v in result:
            if not isinstance(v, int) or not 0 <= v < self.n:
                raise InputError(f"{what}: vertex {v!r} out of range for n={self.n}")
        return result

    def induced_edges(self, vertices: Iterable[int]) -> List[Edge]:
        keep = frozenset(vertices)
        return [(u, v) for (u, v) in self.sorted_edges() if u in keep and v in keep]

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2


def reach_mask(adjacency: Tuple[int, ...], seed: int, allowed: int) -> int:
    """Vertices reachable from seed through vertices of allowed (seed included)."""
    seen = seed
    frontier = seed
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        new = adjacency[low.bit_length() - 1] & allowed & ~seen
        seen |= new
        frontier |= new
    return seen


def component_masks(g: Graph, removed_mask: int) -> List[int]:
    """Components of g minus removed_mask, as bitmasks ordered by minimum vertex."""
    adjacency = g.adjacency_masks
    remaining = g.full_mask & ~removed_mask
    result = []
    while remaining:
        low = remaining & -remaining
        comp = reach_mask(adjacency, low, remaining)
        result.append(comp)
        remaining &= ~comp
    return result


def components(g: Graph, removed: Iterable[int] = ()) -> List[VertexSet]:
    """Connected components of g - removed, sorted by minimum vertex."""
    removed_set = g.check_vertices(removed, "removed")
    remaining = g.to_networkx()
    remaining.remove_nodes_from(removed_set)
    parts = [frozenset(c) for c in nx.connected_components(remaining)]
    return sorted(parts, key=min)


def is_connected_subset(g: Graph, s: Iterable[int]) -> bool:
    """True iff s is non-empty and g[s] is connected."""
    subset = g.check_vertices(s)
    if not subset:
        return False
    mask = to_mask(subset)
    start = 1 << min(subset)
    return reach_mask(g.adjacency_masks, start, mask) == mask


def mask_is_connected(g: Graph, mask: int) -> bool:
    if not mask:
        return False
    return reach_mask(g.adjacency_masks, mask & -mask, mask) == mask


def touches(g: Graph, a_mask: int, b_mask: int) -> bool:
    """Two vertex sets touch if they share a vertex or an edge joins them."""
    if a_mask & b_mask:
        return True
    adjacency = g.adjacency_masks
    return any(adjacency[v] & b_mask for v in bits(a_mask))


def neighbourhood_mask(g: Graph, mask: int) -> int:
    adjacency = g.adjacency_masks
    result = 0
    for v in bits(mask):
        result |= adjacency[v]
    return result


def cartesian_with_k2(g: Graph) -> Graph:
    """G box K_2: vertex (v, i) is v + i*n, the matching joins the copies."""
    n = g.n
    edges = []
    for u, v in g.sorted_edges():
        edges.append((u, v))
        edges.append((u + n, v + n))
    edges.extend((v, v + n) for v in range(n))
    return Graph.from_edges(2 * n, edges)


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))
