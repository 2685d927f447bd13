"""
Per-graph parameter report: every parameter the exact oracles can reach
within budget, and the inequalities tying them to treewidth.
"""
import logging
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Union

from pydantic import BaseModel, Field

from certificates.bramble import bramble_order, grid_bramble
from config import Budget, resolve_budget
from decompositions.branchwidth import exact_branchwidth
from decompositions.treewidth import exact_treewidth
from graph_core.graph import Graph, cartesian_with_k2
from harness.pace_io import emit_gr
from linkage.linked import bramble_from_linked_set, linkedness
from linkage.well_linked import well_linked_number
from minors.fractional import had_f_small
from minors.glm import glm_from_grid, model_in_product_from_glm, validate_glm, weighted_bramble_from_product_model
from minors.hadwiger import hadwiger_number
from minors.model import validate_model
from separators.separator import sep_number
from tree_products.models import model_in_cart_product, model_in_lex_product
from utils.errors import BudgetExceeded
from utils.file_cache import get_cache

logger = logging.getLogger(__name__)

BUDGET_EXCEEDED = "budget-exceeded"

Value = Union[int, str]

_SEPARATION_LEVELS = (("1/2", Fraction(1, 2)), ("2/3", Fraction(2, 3)))


class VerdictRecord(BaseModel):
    name: str
    holds: bool
    lhs: str
    rhs: str


class ParameterReport(BaseModel):
    graph_id: str
    n: int
    m: int
    values: Dict[str, Value] = Field(default_factory=dict)
    witnesses: Dict[str, str] = Field(default_factory=dict)
    verdicts: List[VerdictRecord] = Field(default_factory=list)

    @property
    def all_hold(self) -> bool:
        return all(v.holds for v in self.verdicts)

    def failed(self) -> List[VerdictRecord]:
        return [v for v in self.verdicts if not v.holds]


def _exact(value) -> Value:
    """Integers stay integers; proper fractions become strings such as '3/2'."""
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else str(value)
    return value


def _number(value: Value) -> Fraction:
    return Fraction(value)


class _ReportBuilder:
    def __init__(self, g: Graph, budget: Budget, graph_id: str):
        self.g = g
        self.budget = budget
        self.report = ParameterReport(graph_id=graph_id, n=g.n, m=g.m)
        self.tw_td = None

    def attempt(self, name: str, compute: Callable[[], object]) -> Optional[object]:
        """Run one oracle; a refused budget marks the value instead of failing the report."""
        try:
            value = compute()
        except BudgetExceeded as e:
            logger.info(f"{self.report.graph_id}: {name} skipped ({e})")
            self.report.values[name] = BUDGET_EXCEEDED
            return None
        self.report.values[name] = _exact(value)
        return value

    def known(self, *names: str) -> bool:
        values = self.report.values
        return all(name in values and values[name] != BUDGET_EXCEEDED for name in names)

    def value(self, name: str) -> Fraction:
        return _number(self.report.values[name])

    def check(self, name: str, lhs: Fraction, rhs: Fraction) -> None:
        self.report.verdicts.append(
            VerdictRecord(name=name, holds=lhs <= rhs, lhs=str(_exact(Fraction(lhs))), rhs=str(_exact(Fraction(rhs))))
        )

    def check_true(self, name: str, holds: bool, detail: str = "") -> None:
        self.report.verdicts.append(VerdictRecord(name=name, holds=holds, lhs=detail or str(holds), rhs="True"))

    # -----------------------------------------------------------------
    # parameters
    # -----------------------------------------------------------------
    def decompositions(self) -> None:
        def tw():
            width, td = exact_treewidth(self.g, self.budget)
            self.tw_td = td
            # bramble number via the duality bn = tw+1
            self.report.values["bn_proxy"] = width + 1
            self.report.witnesses["tw"] = f"tree decomposition with {td.node_count} bags"
            return width

        self.attempt("tw", tw)

        def bw():
            width, bd = exact_branchwidth(self.g, self.budget)
            if bd is not None:
                self.report.witnesses["bw"] = f"branch decomposition with {bd.node_count} nodes"
            # tangle number via the duality tn = bw
            self.report.values["tn_proxy"] = width
            return width

        self.attempt("bw", bw)

    def separators(self) -> None:
        for label, c in _SEPARATION_LEVELS:
            self.attempt(f"sep_{label}", lambda c=c: sep_number(self.g, c, False, budget=self.budget))
            self.attempt(f"sep*_{label}", lambda c=c: sep_number(self.g, c, True, budget=self.budget))

    def linkage(self) -> None:
        def link():
            k, s = linkedness(self.g, self.budget)
            self.report.witnesses["link"] = f"linked set {sorted(s)}"
            if k >= 1:
                bramble = bramble_from_linked_set(self.g, s, k, self.budget)
                order, _ = bramble_order(self.g, bramble)
                self.report.values["linked_bramble_order"] = order
            return k

        self.attempt("link", link)

        def wl():
            size, s = well_linked_number(self.g, self.budget)
            self.report.witnesses["wl"] = f"well-linked set {sorted(s)}"
            return size

        self.attempt("wl", wl)

    def minors(self) -> None:
        def had():
            t, model = hadwiger_number(self.g, self.budget)
            self.report.witnesses["had"] = f"K_{t} model, branch sizes {[len(b) for b in model.branches]}"
            return t

        self.attempt("had", had)
        self.attempt("had_f", lambda: had_f_small(self.g, None, self.budget))
        self.attempt("had_2", lambda: had_f_small(self.g, 2, self.budget))
        self.attempt("had_3", lambda: had_f_small(self.g, 3, self.budget))
        if self.known("had_2", "had_3") and self.value("had_2") > 0:
            # recorded only; no bound between the two is asserted
            self.report.values["had_3/had_2"] = _exact(self.value("had_3") / self.value("had_2"))
        self.attempt("had_box_k2", lambda: hadwiger_number(cartesian_with_k2(self.g), self.budget)[0])

    def tree_products(self) -> None:
        if self.g.n == 0 or self.tw_td is None:
            return
        _, k, model = model_in_lex_product(self.g, self.tw_td)
        self.report.values["ltp_k"] = k
        self.check_true("ltp_model_valid", validate_model(model).ok)

        def ctp():
            _, k, cart_model = model_in_cart_product(self.g, self.budget)
            self.check_true("ctp_model_valid", validate_model(cart_model).ok)
            return k

        self.attempt("ctp_k", ctp)

    def grid_attachments(self, k: int) -> None:
        _, bramble = grid_bramble(k)
        order, _ = bramble_order(self.g, bramble)
        self.report.values["grid_bramble_order"] = order
        _, cert = glm_from_grid(k)
        t = validate_glm(self.g, cert)
        self.report.values["glm_order"] = t
        lifted = model_in_product_from_glm(self.g, cert)
        self.check_true("glm_lift_valid", validate_model(lifted).ok)
        for r in (2, 3):
            total = weighted_bramble_from_product_model(self.g, lifted, r).total
            self.report.values[f"glm_weighted_total_r{r}"] = _exact(total)
            self.check(f"glm_order/3 <= weighted_total_r{r}", Fraction(t, 3), total)

    # -----------------------------------------------------------------
    # inequality battery
    # -----------------------------------------------------------------
    def verdicts(self) -> None:
        known, value, check = self.known, self.value, self.check
        if known("tw"):
            tw1 = value("tw") + 1
            for label, c in _SEPARATION_LEVELS:
                sep, star = f"sep_{label}", f"sep*_{label}"
                if known(sep, star):
                    check(f"{star} <= {sep}", value(star), value(sep))
                if known(sep):
                    check(f"{sep} <= tw+1", value(sep), tw1)
                if known(star):
                    check(f"tw+1 <= {star}/(1-{label})", tw1, value(star) / (1 - c))
            if known("bw"):
                check("bw <= tw+1", value("bw"), tw1)
                if value("bw") >= 2:
                    check("tw+1 <= 3/2*bw", tw1, Fraction(3, 2) * value("bw"))
            if known("link"):
                check("link <= tw+1", value("link"), tw1)
                check("tw+1 <= 2*link", tw1, 2 * value("link"))
            if known("linked_bramble_order"):
                check("link <= linked_bramble_order", value("link"), value("linked_bramble_order"))
                check("linked_bramble_order <= tw+1", value("linked_bramble_order"), tw1)
            if known("wl"):
                check("tw+1 <= wl", tw1, value("wl"))
            if known("had"):
                check("had <= tw+1", value("had"), tw1)
            if known("had_f"):
                check("had_f <= tw+1", value("had_f"), tw1)
            if known("grid_bramble_order"):
                check("grid_bramble_order <= tw+1", value("grid_bramble_order"), tw1)
        if known("bn_proxy", "link"):
            check("link <= bn_proxy", value("link"), value("bn_proxy"))
            check("bn_proxy <= 2*link", value("bn_proxy"), 2 * value("link"))
        if known("bn_proxy", "wl"):
            check("bn_proxy <= wl", value("bn_proxy"), value("wl"))
        if known("tn_proxy", "bn_proxy"):
            check("tn_proxy <= bn_proxy", value("tn_proxy"), value("bn_proxy"))
            if value("tn_proxy") >= 2:
                check("bn_proxy <= 2*tn_proxy", value("bn_proxy"), 2 * value("tn_proxy"))
        if known("wl", "link"):
            check("wl <= 3*link", value("wl"), 3 * value("link"))
        if known("had", "had_f"):
            check("had <= had_f", value("had"), value("had_f"))
        for r in ("2", "3"):
            if known(f"had_{r}", "had_f"):
                check(f"had_{r} <= had_f", value(f"had_{r}"), value("had_f"))
            if known("had_box_k2", f"had_{r}"):
                check(f"had_box_k2 <= {r}*had_{r}", value("had_box_k2"), int(r) * value(f"had_{r}"))
        if known("glm_order", "had_box_k2"):
            check("glm_order <= had_box_k2", value("glm_order"), value("had_box_k2"))


def _compute(g: Graph, budget: Budget, graph_id: str, grid_k: Optional[int]) -> ParameterReport:
    builder = _ReportBuilder(g, budget, graph_id)
    builder.decompositions()
    builder.separators()
    builder.linkage()
    builder.minors()
    builder.tree_products()
    if grid_k is not None and grid_k >= 2:
        builder.grid_attachments(grid_k)
    builder.verdicts()
    return builder.report


def parameter_report(
    g: Graph, budget: Optional[Budget] = None, graph_id: str = "graph", grid_k: Optional[int] = None
) -> ParameterReport:
    """
    Compute every in-budget parameter of g and evaluate the inequality battery.

    Args:
        g: the graph
        budget: oracle limits; parameters beyond them are marked budget-exceeded
        graph_id: label carried into the report
        grid_k: when g is the k x k grid, also attach the grid bramble and grid-like minor

    Returns:
        ParameterReport; never raises for budget reasons
    """
    budget = resolve_budget(budget)
    cache = get_cache()
    key = None
    if cache is not None:
        key = cache.cache_key(emit_gr(g), f"{budget.model_dump_json()}|grid_k={grid_k}")
        cached = cache.get(key)
        if cached is not None:
            report = ParameterReport.model_validate(cached)
            return report.model_copy(update={"graph_id": graph_id})

    report = _compute(g, budget, graph_id, grid_k)
    failed = report.failed()
    if failed:
        logger.warning(f"{graph_id}: {len(failed)} verdict(s) violated: {[v.name for v in failed]}")
    logger.info(f"{graph_id}: n={g.n} m={g.m}, {len(report.verdicts)} verdicts, {len(failed)} violated")
    if cache is not None:
        cache.set(key, report.model_dump())
    return report
