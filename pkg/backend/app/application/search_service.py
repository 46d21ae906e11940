"""
Randomized bound and conjecture sweep over one matroidal family.

Each trial draws a normalized instance from a per-trial seed, runs the
full bound check and ledgers anything interesting: failed verdicts,
astab != dstab witnesses, degree-4 review flags and skipped instances.
For graphic draws the completeness criterion (Γ complete ⇔ graph
biconnected ⇔ m ∈ Ass(I^k) for some k <= min{d, ℓ}) is checked as well.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List

from app.api.schemas.instance_schemas import MatroidSpec, RANDOM_FAMILIES
from app.application.random_instances import RandomDraw, kept_graph, random_instance, seeds
from app.application.stability_service import FAIL, REVIEW, StabilityEngine, StabilityReport
from app.core.exceptions import InputError, InvariantViolationError, ResourceLimitError
from app.domain.relation_graph import graph_analysis, is_complete_on_all_variables

logger = logging.getLogger("polystab.service.search")


@dataclass(frozen=True)
class LedgerEntry:
    trial: int
    kind: str  # violation | conjecture_witness | skipped | degree4_review
    spec: Dict
    generators: List[str]
    detail: str


@dataclass
class SearchLedger:
    family: str
    trials: int
    seed: int
    examined: int = 0
    skipped: int = 0
    violations: int = 0
    conjecture_witnesses: int = 0
    completeness_checks: int = 0
    entries: List[LedgerEntry] = field(default_factory=list)

    def add(self, trial: int, kind: str, draw: RandomDraw, detail: str) -> None:
        self.entries.append(LedgerEntry(
            trial,
            kind,
            draw.spec.model_dump(mode="json", exclude_none=True),
            [str(g) for g in draw.ideal.gens],
            detail,
        ))

    def add_undrawn(self, trial: int, spec: MatroidSpec, detail: str) -> None:
        self.entries.append(LedgerEntry(
            trial, "skipped", spec.model_dump(mode="json", exclude_none=True), [], detail
        ))


class SearchService:
    def __init__(self, engine: StabilityEngine):
        self.engine = engine

    def run(self, family: str, trials: int, seed: int, union_check: bool = False) -> SearchLedger:
        if family not in RANDOM_FAMILIES:
            raise InputError(f"search supports {', '.join(RANDOM_FAMILIES)}; got '{family}'")
        if trials < 1:
            raise InputError(f"trials must be positive, got {trials}")

        ledger = SearchLedger(family, trials, seed)
        for trial, trial_seed in enumerate(seeds(seed, trials), start=1):
            spec = MatroidSpec(family=family, seed=trial_seed)
            try:
                draw = random_instance(spec)
            except ResourceLimitError as exc:
                ledger.skipped += 1
                ledger.add_undrawn(trial, spec, exc.message)
                continue

            try:
                report = self.engine.check_bounds(draw.ideal, union_check=union_check)
            except ResourceLimitError as exc:
                ledger.skipped += 1
                ledger.add(trial, "skipped", draw, exc.message)
                continue
            except InvariantViolationError as exc:
                ledger.examined += 1
                ledger.violations += 1
                ledger.add(trial, "violation", draw, exc.message)
                continue

            ledger.examined += 1
            self._record(ledger, trial, draw, report)
            if family == "graphic":
                self._completeness(ledger, trial, draw, report)

        logger.info(
            "Search %s: %d examined, %d skipped, %d violations, %d conjecture witnesses",
            family, ledger.examined, ledger.skipped, ledger.violations, ledger.conjecture_witnesses,
        )
        return ledger

    @staticmethod
    def _record(ledger: SearchLedger, trial: int, draw: RandomDraw, report: StabilityReport) -> None:
        for v in report.verdicts:
            if v.status == FAIL:
                ledger.violations += 1
                ledger.add(trial, "violation", draw, f"{v.name}: {v.detail}")
            elif v.status == REVIEW:
                ledger.add(trial, "degree4_review", draw, f"{v.name}: {v.detail}")
        if report.conjecture_counterexample:
            ledger.conjecture_witnesses += 1
            ledger.add(
                trial,
                "conjecture_witness",
                draw,
                f"astab={report.astab.k}, dstab={report.dstab.k}",
            )

    @staticmethod
    def _completeness(ledger: SearchLedger, trial: int, draw: RandomDraw, report: StabilityReport) -> None:
        ledger.completeness_checks += 1
        analysis = graph_analysis(kept_graph(draw))
        biconnected = analysis.is_biconnected
        complete = is_complete_on_all_variables(report.gamma)
        entered = report.astab.chain[report.plan.bound - 1].has_maximal
        if not (biconnected == complete == entered):
            ledger.violations += 1
            ledger.add(
                trial,
                "violation",
                draw,
                f"graphic_completeness: biconnected={biconnected}, "
                f"gamma_complete={complete}, max_ideal_enters={entered}",
            )
