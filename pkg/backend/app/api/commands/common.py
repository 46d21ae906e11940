"""
Shared plumbing for the CLI commands: the per-invocation context and the
conversions from engine results to Report sections.
"""

import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional

from app.api.schemas.report_schemas import (
    AssPowerModel,
    ComponentDstabModel,
    DepthModel,
    DepthPointModel,
    FactorModel,
    GammaModel,
    InputEcho,
    InvariantsModel,
    Report,
    VerdictModel,
)
from app.application.instance_service import (
    CheckResult,
    LoadedInstance,
    betti_totals,
    generator_strings,
)
from app.application.stability_service import (
    DepthPoint,
    DstabResult,
    StabilityEngine,
    Verdict,
)
from app.core.config import settings
from app.domain.betti import DepthResult
from app.domain.relation_graph import ComponentFactorization, RelationGraph, is_complete
from app.domain.stability import AssSet


@dataclass
class CommandContext:
    engine: StabilityEngine
    timing: bool = False
    seed: Optional[int] = None
    timings: Dict[str, float] = field(default_factory=dict)

    @contextmanager
    def phase(self, name: str) -> Iterator[None]:
        start = time.perf_counter()
        try:
            yield
        finally:
            if self.timing:
                self.timings[name] = round(time.perf_counter() - start, 6)

    def new_report(self, command: str, **sections) -> Report:
        report = Report(
            schema_version=settings.REPORT_SCHEMA_VERSION,
            engine_version=settings.VERSION,
            command=command,
            seed=self.seed,
            **sections,
        )
        if self.timing:
            report.timing = dict(sorted(self.timings.items()))
        return report


def input_echo(inst: LoadedInstance, power: Optional[int] = None) -> InputEcho:
    return InputEcho(
        source=inst.source,
        n=inst.ideal.n,
        generators=generator_strings(inst.ideal, inst.names),
        names=list(inst.names) if inst.names else None,
        spec=inst.spec.model_dump(mode="json", exclude_none=True) if inst.spec else None,
        power=power,
    )


def invariants_model(check: CheckResult, generator_count: int) -> InvariantsModel:
    inv = check.invariants
    witness = None
    if check.exchange.witness is not None:
        u, v, i = check.exchange.witness
        witness = [str(u), str(v), f"x{i + 1}"]
    return InvariantsModel(
        generator_count=generator_count,
        degree=inv.degree if inv else None,
        support=sorted(i + 1 for i in inv.support) if inv else [],
        gcd=str(inv.gcd) if inv else "0",
        squarefree=inv.is_squarefree if inv else True,
        equigenerated=inv.is_equigenerated if inv else False,
        polymatroidal=check.exchange.holds,
        matroidal=check.matroidal,
        certifiable=check.certifiable,
        exchange_witness=witness,
        cover_profile=list(check.profile.counts) if check.profile else None,
    )


def gamma_model(g: RelationGraph, fact: Optional[ComponentFactorization] = None) -> GammaModel:
    model = GammaModel(
        vertices=sorted(v + 1 for v in g.vertices),
        edges=g.edge_list(),
        components=[sorted(v + 1 for v in c) for c in g.components],
        s=g.s,
        complete=is_complete(g),
    )
    if fact is not None:
        model.factorization_verified = fact.verified
        model.factorization_witness = str(fact.witness) if fact.witness is not None else None
        model.factors = [
            FactorModel(
                variables=[v + 1 for v in f.variables],
                generators=[str(m.embed(f.variables, g.n)) for m in f.ideal.gens],
                degree=f.degree,
            )
            for f in fact.factors
        ]
    return model


def ass_models(chain: List[AssSet], with_witnesses: bool = False, first_k: int = 1) -> List[AssPowerModel]:
    out = []
    for offset, a in enumerate(chain):
        witnesses = None
        if with_witnesses:
            witnesses = {str(p): str(a.witnesses[p]) for p in a.primes if p in a.witnesses}
        out.append(AssPowerModel(k=first_k + offset, primes=a.labels(), witnesses=witnesses))
    return out


def verdict_models(verdicts: List[Verdict]) -> List[VerdictModel]:
    return [VerdictModel(name=v.name, status=v.status, detail=v.detail) for v in verdicts]


def depth_points(seq: Optional[List[DepthPoint]]) -> Optional[List[DepthPointModel]]:
    if seq is None:
        return None
    return [DepthPointModel(k=p.k, depth=p.depth, method=p.method, pd=p.pd) for p in seq]


def dstab_components(result: DstabResult) -> Optional[List[ComponentDstabModel]]:
    if not result.components:
        return None
    return [
        ComponentDstabModel(
            variables=[v + 1 for v in c.variables], degree=c.degree, analytic_spread=c.spread, dstab=c.dstab
        )
        for c in result.components
    ]


def depth_model(res: DepthResult) -> DepthModel:
    return DepthModel(
        depth=res.depth,
        pd=res.pd,
        field_prime=res.field_prime,
        lattice_size=res.lattice_size,
        betti_totals=betti_totals(res),
        second_prime=res.second_prime,
        discrepancy=res.discrepancy,
    )
