"""Deterministic generators for the extremal families and the test corpora.

Randomized kinds draw from ``random.Random(seed)``, i.e. the Mersenne
Twister MT19937, so a (kind, parameters, seed) triple always yields the
same graph.
"""
import logging
import random
from fractions import Fraction
from itertools import combinations
from typing import List

import networkx as nx

from graph_core.graph import Edge, Graph, complete_graph
from utils.errors import InputError

logger = logging.getLogger(__name__)


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise InputError(message)


def psi(n: int, k: int) -> Graph:
    """
    Clique A = 0..n-1 joined to an independent set B of size k*n.

    Vertex a in A is paired with the consecutive block n+a*k .. n+a*k+k-1 of
    B and adjacent to every other vertex of B.
    """
    _require(n >= 2, f"psi needs n >= 2, got {n}")
    _require(k >= 1, f"psi needs k >= 1, got {k}")
    edges: List[Edge] = list(combinations(range(n), 2))
    for a in range(n):
        paired = range(n + a * k, n + a * k + k)
        edges.extend((a, b) for b in range(n, n + k * n) if b not in paired)
    return Graph.from_edges(n + k * n, edges)


def grid(rows: int, cols: int) -> Graph:
    """rows x cols grid, vertex (r, c) is r*cols + c."""
    _require(rows >= 1 and cols >= 1, f"grid needs positive dimensions, got {rows}x{cols}")
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return Graph.from_edges(rows * cols, edges)


def complete(n: int) -> Graph:
    _require(n >= 1, f"complete needs n >= 1, got {n}")
    return complete_graph(n)


def complete_bipartite(p: int, q: int) -> Graph:
    """K_{p,q} with sides 0..p-1 and p..p+q-1."""
    _require(p >= 1 and q >= 1, f"complete_bipartite needs positive sides, got {p},{q}")
    return Graph.from_edges(p + q, ((i, p + j) for i in range(p) for j in range(q)))


def kn_minus_matching(n: int) -> Graph:
    """K_{n,n} without the perfect matching (i, n+i)."""
    _require(n >= 1, f"kn_minus_matching needs n >= 1, got {n}")
    return Graph.from_edges(2 * n, ((i, n + j) for i in range(n) for j in range(n) if i != j))


def path(n: int) -> Graph:
    _require(n >= 1, f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def random_tree(n: int, seed: int) -> Graph:
    """Uniform labelled tree via a seeded Pruefer sequence."""
    _require(n >= 1, f"random_tree needs n >= 1, got {n}")
    if n <= 2:
        return path(n)
    rng = random.Random(seed)
    sequence = [rng.randrange(n) for _ in range(n - 2)]
    tree = nx.from_prufer_sequence(sequence)
    return Graph.from_edges(n, tree.edges())


def gnp(n: int, p: Fraction, seed: int) -> Graph:
    """Erdos-Renyi G(n, p) with exact rational p; pairs are drawn in lexicographic order."""
    _require(n >= 1, f"gnp needs n >= 1, got {n}")
    p = Fraction(p)
    _require(0 <= p <= 1, f"gnp probability must lie in [0,1], got {p}")
    rng = random.Random(seed)
    edges = [
        (u, v)
        for u, v in combinations(range(n), 2)
        if rng.randrange(p.denominator) < p.numerator
    ]
    return Graph.from_edges(n, edges)
