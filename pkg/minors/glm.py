"""Grid-like minors and their lift to a complete minor of G box K_2."""
import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional, Sequence, Tuple

from certificates.bramble import Bramble, validate_bramble
from families.generators import grid
from graph_core.graph import Graph, VertexSet, cartesian_with_k2, mask_is_connected, to_mask
from graph_core.verdict import Verdict
from minors.model import Model, require_model, validate_model
from utils.errors import CertificateError, InputError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GridLikeMinorCert:
    """
    paths[i] induces a path in the host; sides[i] is 0 or 1; kt_branches
    groups path indices into the branch sets of a complete minor of the
    intersection graph of the paths.
    """

    paths: Tuple[VertexSet, ...]
    sides: Tuple[int, ...]
    kt_branches: Tuple[VertexSet, ...]

    @classmethod
    def of(
        cls, paths: Sequence[Iterable[int]], sides: Sequence[int], kt_branches: Sequence[Iterable[int]]
    ) -> "GridLikeMinorCert":
        return cls(
            tuple(frozenset(p) for p in paths),
            tuple(sides),
            tuple(frozenset(branch) for branch in kt_branches),
        )


def intersection_graph(paths: Sequence[VertexSet]) -> Graph:
    return Graph.from_edges(
        len(paths), ((i, j) for i, j in combinations(range(len(paths)), 2) if paths[i] & paths[j])
    )


def _induces_path(g: Graph, vertices: VertexSet) -> bool:
    if not mask_is_connected(g, to_mask(vertices)):
        return False
    inner = g.induced_edges(vertices)
    if len(inner) != len(vertices) - 1:
        return False
    return all(len(g.neighbors(v) & vertices) <= 2 for v in vertices)


def validate_glm(g: Graph, cert: GridLikeMinorCert) -> int:
    """
    Returns:
        t, the order of the complete minor in the intersection graph

    Raises:
        CertificateError: naming the offending path, edge or branch
    """
    if len(cert.sides) != len(cert.paths):
        raise CertificateError("one side per path is required", witness=len(cert.sides))
    for i, p in enumerate(cert.paths):
        g.check_vertices(p, f"path {i}")
        if not _induces_path(g, p):
            raise CertificateError(f"path {i} does not induce a path", witness=i)
        if cert.sides[i] not in (0, 1):
            raise CertificateError(f"path {i} has side {cert.sides[i]}", witness=i)
    meet = intersection_graph(cert.paths)
    for i, j in meet.sorted_edges():
        if cert.sides[i] == cert.sides[j]:
            raise CertificateError(f"paths {i} and {j} meet but lie on the same side", witness=(i, j))
    if not cert.kt_branches:
        raise CertificateError("empty complete-minor model", witness=None)
    verdict = validate_model(Model.complete(meet, cert.kt_branches))
    if not verdict:
        raise CertificateError(f"intersection-graph model: {verdict.reason}", witness=verdict.witness)
    return len(cert.kt_branches)


def glm_from_grid(k: int) -> Tuple[Graph, GridLikeMinorCert]:
    """
    The k x k grid with its rows (side 0, paths 0..k-1) and columns
    (side 1, paths k..2k-1). Their intersection graph is K_{k,k}, and the
    branches {row i, column i} for i < k-1 together with {row k-1} and
    {column k-1} form a K_{k+1} model in it.
    """
    if k < 2:
        raise InputError(f"glm_from_grid needs k >= 2, got {k}")
    g = grid(k, k)
    rows = [frozenset(r * k + c for c in range(k)) for r in range(k)]
    columns = [frozenset(r * k + c for r in range(k)) for c in range(k)]
    branches = [frozenset((i, k + i)) for i in range(k - 1)]
    branches.extend([frozenset((k - 1,)), frozenset((2 * k - 1,))])
    return g, GridLikeMinorCert(tuple(rows + columns), tuple([0] * k + [1] * k), tuple(branches))


def model_in_product_from_glm(g: Graph, cert: GridLikeMinorCert) -> Model:
    """Put each path in the copy of its side and take the union per branch: a K_t model in g box K_2."""
    t = validate_glm(g, cert)
    host = cartesian_with_k2(g)
    branches = []
    for branch in cert.kt_branches:
        lifted = set()
        for i in branch:
            lifted.update(v + cert.sides[i] * g.n for v in cert.paths[i])
        branches.append(lifted)
    model = Model.complete(host, branches)
    require_model(model)
    logger.debug(f"lifted grid-like minor of order {t} into G box K_2")
    return model


@dataclass(frozen=True)
class WeightedBramble:
    bramble: Bramble
    weights: Tuple[Fraction, ...]

    @property
    def total(self) -> Fraction:
        return sum(self.weights, Fraction(0))


def validate_weighted_bramble(g: Graph, wb: WeightedBramble, r: Optional[int] = None) -> Verdict:
    """Bramble, non-negative weights with vertex load at most 1, and multiples of 1/r when r is given."""
    verdict = validate_bramble(g, wb.bramble)
    if not verdict:
        return verdict
    if len(wb.weights) != len(wb.bramble.elements):
        return Verdict.failed("one weight per element is required", len(wb.weights))
    for element, weight in zip(wb.bramble.elements, wb.weights):
        if weight < 0:
            return Verdict.failed("negative weight", element)
        if r is not None and (weight * r).denominator != 1:
            return Verdict.failed(f"weight {weight} is not a multiple of 1/{r}", element)
    for v in range(g.n):
        load = sum((w for e, w in zip(wb.bramble.elements, wb.weights) if v in e), Fraction(0))
        if load > 1:
            return Verdict.failed(f"vertex load {load} exceeds 1", v)
    return Verdict.passed()


def weighted_bramble_from_product_model(g: Graph, m: Model, r: int) -> WeightedBramble:
    """
    Project each branch of a K_t model in g box K_2 onto g and give every
    projection weight floor(r/2)/r. A vertex lies in at most two projections,
    so the load stays at most 1.
    """
    if r < 2:
        raise InputError(f"r must be at least 2, got {r}")
    host = cartesian_with_k2(g)
    if m.host.n != host.n or m.host.edges != host.edges:
        raise CertificateError("model host is not G box K_2", witness=m.host.n)
    require_model(m)
    projections = [frozenset(v % g.n for v in branch) for branch in m.branches]
    weight = Fraction(r // 2, r)
    wb = WeightedBramble(Bramble(tuple(projections)), tuple(weight for _ in projections))
    verdict = validate_weighted_bramble(g, wb, r)
    if not verdict:
        raise AssertionError(f"projected bramble invalid: {verdict.reason}")
    return wb
