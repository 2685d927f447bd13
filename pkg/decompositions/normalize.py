import logging

from decompositions.tree_decomposition import (
    TreeDecomposition,
    contract_edge,
    freeze,
    mutable_copy,
    validate_td,
)
from graph_core.graph import Graph

logger = logging.getLogger(__name__)


def _grow(bags, adjacency, size: int) -> bool:
    changed = False
    progress = True
    while progress:
        progress = False
        for x in sorted(bags):
            if len(bags[x]) != size:
                continue
            for y in sorted(adjacency[x]):
                if len(bags[y]) < size:
                    bags[y] = bags[y] | {min(bags[x] - bags[y])}
                    progress = changed = True
    return changed


def _subdivide(bags, adjacency) -> bool:
    changed = False
    next_id = max(bags) + 1
    for x in sorted(bags):
        for y in sorted(adjacency[x]):
            if y < x:
                continue
            left, right = x, y
            while len(bags[left] - bags[right]) > 1:
                z = next_id
                next_id += 1
                bags[z] = (bags[left] - {min(bags[left] - bags[right])}) | {min(bags[right] - bags[left])}
                adjacency[left].discard(right)
                adjacency[right].discard(left)
                adjacency[z] = {left, right}
                adjacency[left].add(z)
                adjacency[right].add(z)
                left = z
                changed = True
    return changed


def _contract_equal(bags, adjacency) -> bool:
    changed = False
    progress = True
    while progress:
        progress = False
        for x in sorted(bags):
            twin = next((y for y in sorted(adjacency[x]) if bags[y] == bags[x]), None)
            if twin is not None:
                contract_edge(bags, adjacency, min(x, twin), max(x, twin))
                progress = changed = True
                break
    return changed


def normalize_td(g: Graph, td: TreeDecomposition) -> TreeDecomposition:
    """
    Rewrite td so every bag has size width+1 and adjacent bags swap exactly one vertex.

    Runs three phases until nothing changes: grow small bags from a full
    neighbour, subdivide edges whose bags differ in more than one vertex,
    contract edges joining equal bags.
    """
    width = validate_td(g, td)
    if width < 0:
        return td
    bags, adjacency = mutable_copy(td)
    rounds = 0
    while True:
        rounds += 1
        grown = _grow(bags, adjacency, width + 1)
        split = _subdivide(bags, adjacency)
        merged = _contract_equal(bags, adjacency)
        if not (grown or split or merged):
            break
    result = freeze(bags, adjacency)
    logger.debug(f"normalised td of width {width} in {rounds} rounds: {len(td.bags)} -> {len(result.bags)} bags")
    return result
