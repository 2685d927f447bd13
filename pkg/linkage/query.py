from typing import Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from config import Budget
from graph_core.graph import Graph
from graph_core.verdict import Verdict
from linkage.linked import is_k_linked
from linkage.well_linked import is_k_connected_set, is_well_linked

LinkageMode = Literal["linked", "well_linked", "ext_well_linked", "k_connected", "ext_k_connected"]


class LinkageQuery(BaseModel):
    model_config = ConfigDict(frozen=True)

    s: Tuple[int, ...]
    k: int = Field(default=1, ge=1)
    mode: LinkageMode = "linked"


def run_linkage_query(g: Graph, query: LinkageQuery, budget: Optional[Budget] = None) -> Verdict:
    s = g.check_vertices(query.s, "s")
    if query.mode == "linked":
        return is_k_linked(g, s, query.k, budget)
    if query.mode == "well_linked":
        return is_well_linked(g, s, external=False, budget=budget)
    if query.mode == "ext_well_linked":
        return is_well_linked(g, s, external=True, budget=budget)
    return is_k_connected_set(g, s, query.k, external=query.mode == "ext_k_connected", budget=budget)
