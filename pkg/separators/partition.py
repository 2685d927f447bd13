import logging
from fractions import Fraction
from typing import Iterable, List

from graph_core.graph import Graph, VertexSet, component_masks, from_mask, to_mask
from utils.errors import InputError

logger = logging.getLogger(__name__)

_BOUND = {3: Fraction(1, 2), 2: Fraction(2, 3)}


def partition_components(g: Graph, x: Iterable[int], s: Iterable[int], max_parts: int) -> List[VertexSet]:
    """
    Group the components of g - x into at most max_parts parts.

    With three parts no part holds more than half of s - x, with two parts
    no more than two thirds; the two lightest parts are merged until few
    enough remain.

    Raises:
        InputError: if a single component is already over the bound
    """
    if max_parts not in _BOUND:
        raise InputError(f"max_parts must be 2 or 3, got {max_parts}")
    bound = _BOUND[max_parts]
    x_mask = to_mask(g.check_vertices(x, "x"))
    s_mask = to_mask(g.check_vertices(s, "s"))
    total = (s_mask & ~x_mask).bit_count()

    parts = []
    for component in component_masks(g, x_mask):
        weight = (component & s_mask).bit_count()
        if weight > bound * total:
            raise InputError(
                f"component {sorted(from_mask(component))} holds {weight} of {total} vertices of s - x, over {bound}"
            )
        parts.append((weight, component))

    while len(parts) > max_parts:
        parts.sort(key=lambda part: (part[0], (part[1] & -part[1]).bit_length()))
        (w1, c1), (w2, c2) = parts[0], parts[1]
        if w1 + w2 > bound * total:
            raise AssertionError(f"two lightest parts weigh {w1 + w2} > {bound} of {total}")
        parts = [(w1 + w2, c1 | c2)] + parts[2:]

    result = [from_mask(component) for _, component in sorted(parts, key=lambda part: (part[1] & -part[1]))]
    logger.debug(f"partition_components: {len(result)} parts from |s-x|={total}")
    return result
