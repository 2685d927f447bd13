import logging
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from math import comb
from typing import Iterable, Optional, Tuple

from certificates.bramble import Bramble, bramble_order, check_elements, confining_component
from certificates.hitting import minimum_hitting_set
from config import Budget, resolve_budget
from families.generators import complete, kn_minus_matching
from graph_core.graph import Graph, VertexSet, from_mask, mask_is_connected, to_mask
from graph_core.verdict import Verdict
from utils.errors import CertificateError, InputError, check_budget

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Tangle:
    """Connected vertex sets such that any three share a vertex or one edge meets all three."""

    elements: Tuple[VertexSet, ...]

    @classmethod
    def of(cls, elements: Iterable[Iterable[int]]) -> "Tangle":
        return cls(tuple(frozenset(element) for element in elements))

    def as_bramble(self) -> Bramble:
        return Bramble(self.elements)


def validate_tangle(g: Graph, t: Tangle) -> Verdict:
    """Checks all unordered triples, repetition allowed."""
    check_elements(g, t.elements)
    edges = g.sorted_edges()
    vertex_masks = [to_mask(element) for element in t.elements]
    for element, mask in zip(t.elements, vertex_masks):
        if not mask_is_connected(g, mask):
            return Verdict.failed("element is empty or disconnected", element)
    # edge_masks[i]: edges with an endpoint in element i
    edge_masks = []
    for element in t.elements:
        edge_masks.append(sum(1 << idx for idx, (u, v) in enumerate(edges) if u in element or v in element))
    for i, j, k in combinations_with_replacement(range(len(t.elements)), 3):
        if vertex_masks[i] & vertex_masks[j] & vertex_masks[k]:
            continue
        if edge_masks[i] & edge_masks[j] & edge_masks[k]:
            continue
        return Verdict.failed(
            "triple has no common vertex and no edge meeting all three",
            (t.elements[i], t.elements[j], t.elements[k]),
        )
    return Verdict.passed()


def tangle_order(g: Graph, t: Tangle) -> int:
    verdict = validate_tangle(g, t)
    if not verdict:
        raise CertificateError(f"invalid tangle: {verdict.reason}", witness=verdict.witness)
    return len(minimum_hitting_set(t.elements))


def tangle_from_bramble(g: Graph, b: Bramble, k: int, budget: Optional[Budget] = None) -> Tangle:
    """
    Collect the confining component of g - X for every X with |X| < k/2.

    Needs bramble_order(b) >= k, so no such X hits b and every X has a
    confining component. The result has order at least ceil(k/2).
    """
    if k <= 1:
        raise InputError(f"tangle_from_bramble needs k >= 2, got {k} (the family would be empty)")
    budget = resolve_budget(budget)
    order, _ = bramble_order(g, b)
    if order < k:
        raise InputError(f"bramble has order {order} < k={k}")
    max_size = (k - 1) // 2
    subsets = sum(comb(g.n, size) for size in range(max_size + 1))
    check_budget("tangle_from_bramble", subsets, budget.subset_enumeration)

    found = set()
    for size in range(max_size + 1):
        for x in combinations(range(g.n), size):
            component = confining_component(g, b, x)
            if component is None:
                raise AssertionError(f"X={list(x)} hits a bramble of order {order}")
            found.add(component)
    tangle = Tangle(tuple(sorted(found, key=lambda c: (len(c), sorted(c)))))
    logger.info(f"tangle_from_bramble k={k}: {subsets} separators, {len(tangle.elements)} elements")
    return tangle


def clique_tangle(n: int, budget: Optional[Budget] = None) -> Tuple[Graph, Tangle]:
    """
    K_n with every vertex set of more than n/3 vertices.

    Any three such sets have two that intersect, and in K_n a shared vertex
    plus any vertex of the third set gives a common vertex or an edge. A set
    misses one of them exactly when it has fewer than 2n/3 vertices, so the
    order is ceil(2n/3) = bw(K_n). For 3 | n this makes tw(K_n)+1 = 3/2 bw(K_n).
    """
    if n < 3:
        raise InputError(f"clique_tangle needs n >= 3, got {n}")
    check_budget("clique_tangle", 1 << n, resolve_budget(budget).subset_enumeration)
    g = complete(n)
    elements = [frozenset(s) for size in range(n // 3 + 1, n + 1) for s in combinations(range(n), size)]
    return g, Tangle(tuple(elements))


def kn_minus_matching_tangle(n: int, budget: Optional[Budget] = None) -> Tuple[Graph, Tangle]:
    """
    K_{n,n} minus a perfect matching with every connected set of at least n vertices.

    Deleting fewer than n vertices leaves a component of at least n vertices,
    and deleting one side leaves none, so the order is n = tw+1 = bw.
    """
    if n < 4:
        raise InputError(f"kn_minus_matching_tangle needs n >= 4, got {n}")
    check_budget("kn_minus_matching_tangle", 1 << (2 * n), resolve_budget(budget).subset_enumeration)
    g = kn_minus_matching(n)
    elements = [
        from_mask(mask)
        for mask in range(1 << g.n)
        if mask.bit_count() >= n and mask_is_connected(g, mask)
    ]
    elements.sort(key=lambda e: (len(e), sorted(e)))
    logger.debug(f"kn_minus_matching_tangle n={n}: {len(elements)} connected sets")
    return g, Tangle(tuple(elements))
