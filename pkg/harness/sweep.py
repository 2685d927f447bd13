import logging
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import List, Optional, Sequence

from pydantic import BaseModel

from config import Budget, resolve_budget, settings
from families.family_spec import FamilySpec, generate
from harness.report import ParameterReport, parameter_report

logger = logging.getLogger(__name__)


class SweepEntry(BaseModel):
    spec: str
    report: Optional[ParameterReport] = None
    error: Optional[str] = None


class SweepResult(BaseModel):
    entries: List[SweepEntry]

    @property
    def all_hold(self) -> bool:
        return all(e.error is None and e.report.all_hold for e in self.entries)


def _grid_k(spec: FamilySpec) -> Optional[int]:
    if spec.kind == "grid" and spec.params[0] == spec.params[1]:
        return spec.params[0]
    return None


def report_for_spec(spec: FamilySpec, budget: Optional[Budget] = None) -> ParameterReport:
    """Generate one family member and report on it."""
    return parameter_report(generate(spec), budget, graph_id=spec.text(), grid_k=_grid_k(spec))


def run_sweep(specs: Sequence[FamilySpec], budget: Optional[Budget] = None, workers: Optional[int] = None) -> SweepResult:
    """
    Report on every spec concurrently; entries come back in input order.

    A spec whose report raises is recorded with its error instead of
    aborting the sweep.
    """
    budget = resolve_budget(budget)
    if not specs:
        return SweepResult(entries=[])
    max_workers = min(len(specs), workers or settings.SWEEP_WORKERS)
    logger.info(f"Sweeping {len(specs)} graphs with {max_workers} workers")

    entries: List[Optional[SweepEntry]] = [None] * len(specs)
    with ThreadPoolExecutor(max_workers=max_workers) as executor:
        future_to_index = {executor.submit(report_for_spec, spec, budget): i for i, spec in enumerate(specs)}
        for future in as_completed(future_to_index):
            i = future_to_index[future]
            text = specs[i].text()
            try:
                entries[i] = SweepEntry(spec=text, report=future.result())
            except Exception as e:
                logger.error(f"Error reporting on {text}: {str(e)}", exc_info=True)
                entries[i] = SweepEntry(spec=text, error=str(e))

    failing = [e.spec for e in entries if e.error is not None or not e.report.all_hold]
    logger.info(f"Sweep finished: {len(entries) - len(failing)} clean, {len(failing)} with failures")
    return SweepResult(entries=entries)
