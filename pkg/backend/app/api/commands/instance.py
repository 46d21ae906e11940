"""Per-instance commands: check, gamma, ass, depth, spread."""

import logging

from app.api.commands.common import (
    CommandContext,
    ass_models,
    depth_model,
    gamma_model,
    input_echo,
    invariants_model,
)
from app.api.schemas.report_schemas import Report, VerdictModel
from app.application.instance_service import InstanceService

logger = logging.getLogger("polystab.cli.instance")


def _load(args, ctx: CommandContext):
    return InstanceService.load(args.instance, args.case, seed=ctx.seed)


def run_check(args, ctx: CommandContext) -> Report:
    inst = _load(args, ctx)
    with ctx.phase("check"):
        result = InstanceService.check(inst.ideal)
    return ctx.new_report(
        "check",
        input=input_echo(inst),
        invariants=invariants_model(result, inst.ideal.size),
    )


def run_gamma(args, ctx: CommandContext) -> Report:
    inst = _load(args, ctx)
    with ctx.phase("gamma"):
        result = InstanceService.gamma(inst.ideal)
    return ctx.new_report(
        "gamma",
        input=input_echo(inst),
        gamma=gamma_model(result.gamma, result.factorization),
    )


def run_ass(args, ctx: CommandContext) -> Report:
    inst = _load(args, ctx)
    k = args.power
    with ctx.phase("ass"):
        ass = InstanceService(ctx.engine).ass(inst.ideal, k)
    return ctx.new_report(
        "ass",
        input=input_echo(inst, power=k),
        ass_chain=ass_models([ass], with_witnesses=True, first_k=k),
    )


def run_depth(args, ctx: CommandContext) -> Report:
    inst = _load(args, ctx)
    k = args.power
    with ctx.phase("depth"):
        res = InstanceService(ctx.engine).depth(inst.ideal, k)
    verdicts = []
    if res.discrepancy:
        verdicts.append(VerdictModel(
            name="field_agreement",
            status="review",
            detail=f"Betti numbers over GF({res.field_prime}) and GF({res.second_prime}) differ",
        ))
    return ctx.new_report(
        "depth",
        input=input_echo(inst, power=k),
        depth=depth_model(res),
        verdicts=verdicts,
    )


def run_spread(args, ctx: CommandContext) -> Report:
    inst = _load(args, ctx)
    with ctx.phase("spread"):
        res = InstanceService.spread(inst.ideal)
    verdicts = []
    if res.components is not None:
        expected = inst.ideal.n - res.components + 1
        verdicts.append(VerdictModel(
            name="spread_vs_components",
            status="info",
            detail=f"l={res.spread}, n-s+1={expected}",
        ))
    return ctx.new_report(
        "spread",
        input=input_echo(inst),
        analytic_spread=res.spread,
        verdicts=verdicts,
    )
