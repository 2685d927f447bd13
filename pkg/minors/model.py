"""Minor models: branch sets in a host graph realizing a pattern graph."""
import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence, Tuple

from graph_core.graph import Graph, VertexSet, complete_graph, mask_is_connected, to_mask
from graph_core.verdict import Verdict
from utils.errors import CertificateError, InputError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Model:
    """branches[p] is the branch set in host of pattern vertex p."""

    host: Graph
    pattern: Graph
    branches: Tuple[VertexSet, ...]

    @classmethod
    def of(cls, host: Graph, pattern: Graph, branches: Sequence[Iterable[int]]) -> "Model":
        return cls(host, pattern, tuple(frozenset(branch) for branch in branches))

    @classmethod
    def complete(cls, host: Graph, branches: Sequence[Iterable[int]]) -> "Model":
        """A K_t model with t = len(branches)."""
        return cls.of(host, complete_graph(len(branches)), branches)

    @property
    def order(self) -> int:
        return self.pattern.n


def validate_model(m: Model) -> Verdict:
    """Branches non-empty, disjoint and connected; every pattern edge realized by a host edge."""
    if len(m.branches) != m.pattern.n:
        raise InputError(f"{len(m.branches)} branches for a pattern on {m.pattern.n} vertices")
    masks = [to_mask(m.host.check_vertices(branch, f"branch {p}")) for p, branch in enumerate(m.branches)]
    for p, mask in enumerate(masks):
        if not mask_is_connected(m.host, mask):
            return Verdict.failed(f"branch {p} is empty or disconnected", p)
    for p, q in combinations(range(len(masks)), 2):
        if masks[p] & masks[q]:
            return Verdict.failed(f"branches {p} and {q} overlap", (p, q))
    adjacency = m.host.adjacency_masks
    for p, q in m.pattern.sorted_edges():
        reach = 0
        for v in m.branches[p]:
            reach |= adjacency[v]
        if not reach & masks[q]:
            return Verdict.failed(f"no host edge between branches {p} and {q}", (p, q))
    return Verdict.passed()


def require_model(m: Model) -> None:
    verdict = validate_model(m)
    if not verdict:
        raise CertificateError(f"invalid model: {verdict.reason}", witness=verdict.witness)


def identity_model(g: Graph) -> Model:
    return Model.of(g, g, [[v] for v in range(g.n)])
