"""Exact minimum hitting sets by branch-and-bound over vertex bitmasks."""
import logging
from dataclasses import dataclass
from typing import Iterable, List

from graph_core.graph import VertexSet, bits, from_mask, to_mask
from utils.errors import InputError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HittingSet:
    vertices: VertexSet

    @property
    def order(self) -> int:
        return len(self.vertices)


def _drop_supersets(masks: List[int]) -> List[int]:
    kept: List[int] = []
    for mask in masks:
        if not any(small & mask == small for small in kept):
            kept.append(mask)
    return kept


def _disjoint_packing(masks: List[int], chosen: int) -> int:
    """Greedy count of pairwise disjoint elements not yet hit; a lower bound on what is still needed."""
    used = 0
    count = 0
    for mask in masks:
        if mask & chosen or mask & used:
            continue
        used |= mask
        count += 1
    return count


def minimum_hitting_set(elements: Iterable[Iterable[int]]) -> VertexSet:
    """
    Smallest vertex set meeting every element.

    Elements are explored in order of increasing size and the search
    branches on the vertices of the first element not yet hit.
    """
    masks = [to_mask(element) for element in elements]
    if any(mask == 0 for mask in masks):
        raise InputError("cannot hit an empty element")
    masks = _drop_supersets(sorted(set(masks), key=lambda m: (m.bit_count(), m)))
    if not masks:
        return frozenset()

    # greedy start: the lowest vertex of every element still unhit
    best = 0
    for mask in masks:
        if not mask & best:
            best |= mask & -mask
    best_size = best.bit_count()
    nodes = 0

    def search(chosen: int, size: int) -> None:
        nonlocal best, best_size, nodes
        nodes += 1
        unhit = next((mask for mask in masks if not mask & chosen), None)
        if unhit is None:
            if size < best_size:
                best, best_size = chosen, size
            return
        if size + _disjoint_packing(masks, chosen) >= best_size:
            return
        for v in bits(unhit):
            search(chosen | (1 << v), size + 1)

    search(0, 0)
    logger.debug(f"minimum_hitting_set: {len(masks)} elements, order {best_size}, {nodes} nodes")
    return from_mask(best)
