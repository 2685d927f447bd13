"""
Certificate interchange: one JSON document per certificate with a ``kind``
discriminator. Vertex lists are 0-based and sorted; fractions are strings.
"""
import json
import logging
from fractions import Fraction
from typing import Annotated, List, Literal, Optional, Union

from pydantic import BaseModel, Field, TypeAdapter, ValidationError

from certificates.bramble import Bramble, bramble_order, validate_bramble
from certificates.tangle import Tangle, tangle_order, validate_tangle
from decompositions.branch import BranchDecomposition, validate_bd
from graph_core.graph import Graph
from minors.glm import GridLikeMinorCert, WeightedBramble, validate_glm, validate_weighted_bramble
from minors.model import Model, validate_model
from separators.separator import SeparatorCert, is_separator
from utils.errors import CertificateError, InputError

logger = logging.getLogger(__name__)


def _sorted(vertices) -> List[int]:
    return sorted(vertices)


class GraphDoc(BaseModel):
    n: int = Field(ge=0)
    edges: List[List[int]]

    @classmethod
    def of(cls, g: Graph) -> "GraphDoc":
        return cls(n=g.n, edges=[list(e) for e in g.sorted_edges()])

    def to_graph(self) -> Graph:
        if any(len(e) != 2 for e in self.edges):
            raise InputError("graph edges must be pairs")
        return Graph.from_edges(self.n, (tuple(e) for e in self.edges))


class BrambleDoc(BaseModel):
    kind: Literal["bramble"] = "bramble"
    elements: List[List[int]]


class TangleDoc(BaseModel):
    kind: Literal["tangle"] = "tangle"
    elements: List[List[int]]


class SeparatorDoc(BaseModel):
    kind: Literal["separator"] = "separator"
    x: List[int]
    s: List[int]
    c: str
    variant: bool = False


class ModelDoc(BaseModel):
    """host is omitted when the model lives in the graph it is verified against."""

    kind: Literal["model"] = "model"
    pattern: GraphDoc
    branches: List[List[int]]
    host: Optional[GraphDoc] = None


class BranchDecompositionDoc(BaseModel):
    kind: Literal["bd"] = "bd"
    node_count: int
    tree_edges: List[List[int]]
    leaves: List[List[int]]  # [u, v, leaf]


class GlmDoc(BaseModel):
    kind: Literal["glm"] = "glm"
    paths: List[List[int]]
    sides: List[int]
    kt_branches: List[List[int]]


class WeightedBrambleDoc(BaseModel):
    kind: Literal["weighted-bramble"] = "weighted-bramble"
    elements: List[List[int]]
    weights: List[str]
    r: Optional[int] = None


Certificate = Annotated[
    Union[
        BrambleDoc,
        TangleDoc,
        SeparatorDoc,
        ModelDoc,
        BranchDecompositionDoc,
        GlmDoc,
        WeightedBrambleDoc,
    ],
    Field(discriminator="kind"),
]
_ADAPTER = TypeAdapter(Certificate)


class VerificationResult(BaseModel):
    kind: str
    ok: bool
    value: Optional[str] = None  # order, width or total weight
    reason: Optional[str] = None


# ---------------------------------------------------------------------
# domain object -> document
# ---------------------------------------------------------------------
def bramble_doc(b: Bramble) -> BrambleDoc:
    return BrambleDoc(elements=[_sorted(e) for e in b.elements])


def tangle_doc(t: Tangle) -> TangleDoc:
    return TangleDoc(elements=[_sorted(e) for e in t.elements])


def separator_doc(cert: SeparatorCert) -> SeparatorDoc:
    return SeparatorDoc(x=_sorted(cert.x), s=_sorted(cert.s), c=str(Fraction(cert.c)), variant=cert.variant)


def model_doc(m: Model, include_host: bool = False) -> ModelDoc:
    return ModelDoc(
        pattern=GraphDoc.of(m.pattern),
        branches=[_sorted(branch) for branch in m.branches],
        host=GraphDoc.of(m.host) if include_host else None,
    )


def bd_doc(bd: BranchDecomposition) -> BranchDecompositionDoc:
    return BranchDecompositionDoc(
        node_count=bd.node_count,
        tree_edges=[list(e) for e in bd.sorted_edges()],
        leaves=[[u, v, leaf] for (u, v), leaf in bd.leaves],
    )


def glm_doc(cert: GridLikeMinorCert) -> GlmDoc:
    return GlmDoc(
        paths=[_sorted(p) for p in cert.paths],
        sides=list(cert.sides),
        kt_branches=[_sorted(branch) for branch in cert.kt_branches],
    )


def weighted_bramble_doc(wb: WeightedBramble, r: Optional[int] = None) -> WeightedBrambleDoc:
    return WeightedBrambleDoc(
        elements=[_sorted(e) for e in wb.bramble.elements],
        weights=[str(w) for w in wb.weights],
        r=r,
    )


# ---------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------
def dump_certificate(doc: BaseModel) -> str:
    return json.dumps(doc.model_dump(), indent=2, sort_keys=True) + "\n"


def load_certificate(text: str):
    try:
        return _ADAPTER.validate_json(text)
    except ValidationError as e:
        raise InputError(f"not a certificate document: {e.error_count()} error(s): {e.errors()[0]['msg']}") from e


# ---------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------
def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as e:
        raise InputError(f"bad fraction {text!r}") from e


def _verify(doc, g: Graph) -> VerificationResult:
    kind = doc.kind
    if kind == "bramble":
        b = Bramble.of(doc.elements)
        verdict = validate_bramble(g, b)
        if not verdict:
            return VerificationResult(kind=kind, ok=False, reason=verdict.reason)
        order, _ = bramble_order(g, b)
        return VerificationResult(kind=kind, ok=True, value=str(order))
    if kind == "tangle":
        t = Tangle.of(doc.elements)
        verdict = validate_tangle(g, t)
        if not verdict:
            return VerificationResult(kind=kind, ok=False, reason=verdict.reason)
        return VerificationResult(kind=kind, ok=True, value=str(tangle_order(g, t)))
    if kind == "separator":
        cert = SeparatorCert(frozenset(doc.x), frozenset(doc.s), _fraction(doc.c), doc.variant)
        verdict = is_separator(g, cert)
        return VerificationResult(kind=kind, ok=verdict.ok, value=str(len(cert.x)), reason=verdict.reason or None)
    if kind == "model":
        host = doc.host.to_graph() if doc.host is not None else g
        verdict = validate_model(Model.of(host, doc.pattern.to_graph(), doc.branches))
        return VerificationResult(kind=kind, ok=verdict.ok, value=str(doc.pattern.n), reason=verdict.reason or None)
    if kind == "bd":
        if any(len(entry) != 3 for entry in doc.leaves):
            raise InputError("bd leaves must be [u, v, leaf] triples")
        bd = BranchDecomposition.build(
            doc.node_count,
            (tuple(e) for e in doc.tree_edges),
            {(u, v): leaf for u, v, leaf in doc.leaves},
        )
        return VerificationResult(kind=kind, ok=True, value=str(validate_bd(g, bd)))
    if kind == "glm":
        cert = GridLikeMinorCert.of(doc.paths, doc.sides, doc.kt_branches)
        return VerificationResult(kind=kind, ok=True, value=str(validate_glm(g, cert)))
    wb = WeightedBramble(Bramble.of(doc.elements), tuple(_fraction(w) for w in doc.weights))
    verdict = validate_weighted_bramble(g, wb, doc.r)
    return VerificationResult(kind=kind, ok=verdict.ok, value=str(wb.total), reason=verdict.reason or None)


def verify_certificate(doc, g: Graph) -> VerificationResult:
    """Re-check a certificate against g; validation failures come back as ok=False."""
    try:
        result = _verify(doc, g)
    except CertificateError as e:
        result = VerificationResult(kind=doc.kind, ok=False, reason=str(e))
    logger.info(f"verified {result.kind}: ok={result.ok} value={result.value}")
    return result
