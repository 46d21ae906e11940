"""
Instance service. Resolves CLI input (file, stdin or embedded case) into
an ideal, and answers the per-instance queries: check, gamma, ass, depth
and spread.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from app.api.schemas.instance_schemas import MatroidSpec
from app.application.random_instances import build_from_spec, random_instance
from app.application.stability_service import StabilityEngine
from app.core.exceptions import InputError
from app.domain.betti import DepthResult
from app.domain.ideals import IdealInvariants, MonomialIdeal, basic_invariants, power
from app.domain.matroids import CoverProfile, ExchangeVerdict, cover_profile, is_polymatroidal
from app.domain.relation_graph import (
    ComponentFactorization,
    RelationGraph,
    build_gamma,
    component_factorization,
    is_complete,
)
from app.domain.stability import AssSet, analytic_spread, ass_chain
from app.infrastructure.instances.reference_cases import reference_case
from app.infrastructure.instances.parser import load_instance

logger = logging.getLogger("polystab.service.instance")


@dataclass(frozen=True)
class LoadedInstance:
    ideal: MonomialIdeal
    source: str
    names: Optional[Tuple[str, ...]] = None
    spec: Optional[MatroidSpec] = None


@dataclass(frozen=True)
class CheckResult:
    invariants: Optional[IdealInvariants]
    exchange: ExchangeVerdict
    matroidal: bool
    certifiable: bool
    profile: Optional[CoverProfile]


@dataclass(frozen=True)
class GammaResult:
    gamma: RelationGraph
    complete: bool
    factorization: Optional[ComponentFactorization]


@dataclass(frozen=True)
class SpreadResult:
    spread: int
    components: Optional[int]


class InstanceService:
    def __init__(self, engine: StabilityEngine):
        self.engine = engine

    @staticmethod
    def load(path: Optional[str] = None, case: Optional[str] = None,
             seed: Optional[int] = None) -> LoadedInstance:
        """Resolve a file, stdin or embedded case; `seed` overrides the seed of a random spec."""
        if case is not None:
            if path is not None:
                raise InputError("give either an instance file or --case, not both")
            pc = reference_case(case)
            return LoadedInstance(pc.ideal(), f"case:{pc.key}")
        if path is None:
            raise InputError("an instance file (or '-' for stdin) or --case is required")

        parsed = load_instance(path)
        if parsed.ideal is not None:
            return LoadedInstance(parsed.ideal, parsed.source, parsed.names)

        spec = parsed.spec
        if seed is not None:
            spec = spec.model_copy(update={"seed": seed})
        if spec.is_random:
            draw = random_instance(spec)
            logger.info("Random %s draw accepted after %d attempt(s)", spec.family, draw.attempts)
            return LoadedInstance(draw.ideal, parsed.source, spec=draw.spec)
        return LoadedInstance(build_from_spec(spec), parsed.source, spec=spec)

    @staticmethod
    def check(I: MonomialIdeal) -> CheckResult:
        exchange = is_polymatroidal(I)
        if I.is_zero:
            return CheckResult(None, exchange, False, False, None)
        inv = basic_invariants(I)
        matroidal = exchange.holds and inv.is_squarefree
        certifiable = matroidal and inv.gcd_is_one and inv.full_support
        profile = cover_profile(I) if I.is_equigenerated else None
        return CheckResult(inv, exchange, matroidal, certifiable, profile)

    @staticmethod
    def gamma(I: MonomialIdeal) -> GammaResult:
        g = build_gamma(I)
        fact = component_factorization(I)
        return GammaResult(g, is_complete(g), fact)

    def ass(self, I: MonomialIdeal, k: int = 1) -> AssSet:
        if k < 1:
            raise InputError(f"--power must be positive, got {k}")
        linear = I.is_equigenerated and is_polymatroidal(I).holds
        return ass_chain(
            I, k, linear, self.engine.limits.max_ass_variables, self.engine.limits.workers
        )[-1]

    def depth(self, I: MonomialIdeal, k: int = 1) -> DepthResult:
        if k < 1:
            raise InputError(f"--power must be positive, got {k}")
        return self.engine.exact(power(I, k))

    @staticmethod
    def spread(I: MonomialIdeal) -> SpreadResult:
        ell = analytic_spread(I)
        try:
            s = build_gamma(I).s
        except InputError:
            s = None
        return SpreadResult(ell, s)


def betti_totals(result: DepthResult) -> Dict[str, int]:
    return {str(i): v for i, v in result.table.totals().items()}


def generator_strings(I: MonomialIdeal, names: Optional[Tuple[str, ...]] = None) -> List[str]:
    return [g.to_string(names) for g in I.gens]
