"""
Reproduce service: runs the embedded reference cases end to end and
compares every expected number against the computed one.
"""

import logging
from dataclasses import dataclass, replace
from typing import List, Optional

from app.application.stability_service import (
    FAIL,
    PASS,
    AstabResult,
    DstabResult,
    StabilityEngine,
    StabilityPlan,
    StabilityReport,
)
from app.domain.ideals import MonomialIdeal, colon, contains, power
from app.domain.matroids import is_matroidal, is_polymatroidal
from app.domain.monomials import Monomial
from app.infrastructure.instances.reference_cases import ReferenceCase, reference_case

logger = logging.getLogger("polystab.service.reproduce")

# exact depth of the polymatroidal case needs room for I^2 and I^3
ELEVATED_MAX_GENERATORS = 500
ELEVATED_MAX_LATTICE = 50000


@dataclass(frozen=True)
class Expectation:
    name: str
    expected: str
    observed: str
    status: str


@dataclass(frozen=True)
class ReproduceOutcome:
    case: ReferenceCase
    ideal: MonomialIdeal
    plan: StabilityPlan
    astab: AstabResult
    dstab: DstabResult
    expectations: List[Expectation]
    stability: Optional[StabilityReport] = None

    @property
    def failed(self) -> bool:
        return any(e.status == FAIL for e in self.expectations) or bool(
            self.stability and self.stability.failed
        )


def _expect(name: str, expected, observed) -> Expectation:
    return Expectation(name, str(expected), str(observed), PASS if expected == observed else FAIL)


def _monomial(text: str, n: int) -> Monomial:
    exps = [0] * n
    for factor in text.split("*"):
        exps[int(factor[1:]) - 1] += 1
    return Monomial(tuple(exps))


class ReproduceService:
    def __init__(self, engine: StabilityEngine):
        self.engine = engine

    def run(self, key: str, union_check: bool = False) -> ReproduceOutcome:
        case = reference_case(key)
        I = case.ideal()
        logger.info("Reproducing case %s (%d generators)", case.key, I.size)
        if case.key == "km4":
            return self._polymatroidal_case(case, I)
        witness = {"ex6": "x1*x3*x5", "ex8": "x1*x2*x3*x5*x6*x7*x8"}[case.key]
        return self._matroidal_case(case, I, witness, union_check)

    def _matroidal_case(self, case: ReferenceCase, I: MonomialIdeal, witness: str,
                        union_check: bool) -> ReproduceOutcome:
        n = I.n
        u = _monomial(witness, n)
        square = power(I, 2)
        checks = [
            _expect("generator_count", len(case.generators), I.size),
            _expect("matroidal", True, is_matroidal(I)),
            _expect("witness_outside_square", False, contains(square, u)),
            _expect(f"colon_square_{witness}", str(MonomialIdeal.maximal(n)), str(colon(square, u))),
        ]

        report = self.engine.check_bounds(I, union_check=union_check)
        chain = report.astab.chain
        if case.key == "ex8":
            checks.append(_expect("ass_square_differs_from_cube", True, chain[1] != chain[2]))
            checks.append(_expect("ass_cube_equals_fourth", True, chain[2] == chain[3]))
            checks.append(_expect("astab", 3, report.astab.k))
            checks.append(_expect("dstab", 2, report.dstab.k))
            checks.append(_expect("conjecture_counterexample", True, report.conjecture_counterexample))
        else:
            checks.append(_expect("max_ideal_in_ass_square", True, chain[1].has_maximal))
        return ReproduceOutcome(case, I, report.plan, report.astab, report.dstab, checks, report)

    def _polymatroidal_case(self, case: ReferenceCase, I: MonomialIdeal) -> ReproduceOutcome:
        limits = self.engine.limits
        engine = StabilityEngine(replace(
            limits,
            exact_depth_max_generators=max(limits.exact_depth_max_generators, ELEVATED_MAX_GENERATORS),
            exact_depth_max_lattice=max(limits.exact_depth_max_lattice, ELEVATED_MAX_LATTICE),
        ))
        plan = engine.plan(I, mode="uncertified", kmax=3)
        astab = engine.astab(I, plan)
        dstab = engine.dstab(I, plan)
        chain = astab.chain
        depth_1 = engine.exact(I).depth
        depth_2 = engine.exact(power(I, 2)).depth

        checks = [
            _expect("generator_count", len(case.generators), I.size),
            _expect("polymatroidal", True, is_polymatroidal(I).holds),
            _expect("matroidal", False, is_matroidal(I)),
            _expect("ass_first_strictly_below_square",
                    True, chain[0].issubset(chain[1]) and chain[0] != chain[1]),
            _expect("ass_square_equals_cube", True, chain[1] == chain[2]),
            _expect("exact_depth_first_equals_square", True, depth_1 == depth_2),
            _expect("astab", 2, astab.k),
            _expect("dstab", 1, dstab.k),
        ]
        return ReproduceOutcome(case, I, plan, astab, dstab, checks)
