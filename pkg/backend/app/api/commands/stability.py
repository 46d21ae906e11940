"""Stability commands: astab, dstab and the full bound check."""

import logging
from typing import List

from app.api.commands.common import (
    CommandContext,
    ass_models,
    depth_points,
    dstab_components,
    gamma_model,
    input_echo,
    invariants_model,
    verdict_models,
)
from app.api.schemas.report_schemas import Report, VerdictModel
from app.application.instance_service import InstanceService
from app.application.stability_service import INFO, StabilityPlan

logger = logging.getLogger("polystab.cli.stability")


def _mode(plan: StabilityPlan) -> str:
    return "certified" if plan.certified else "uncertified"


def _plan_notes(plan: StabilityPlan) -> List[VerdictModel]:
    if plan.certified:
        return []
    return [VerdictModel(
        name="uncertified",
        status=INFO,
        detail=f"power bound {plan.bound} is a search limit, not a proven bound"
        + (f" ({plan.reason})" if plan.reason else ""),
    )]


def run_astab(args, ctx: CommandContext) -> Report:
    inst = InstanceService.load(args.instance, args.case, seed=ctx.seed)
    engine = ctx.engine
    with ctx.phase("plan"):
        plan = engine.plan(inst.ideal, args.mode, args.kmax)
    with ctx.phase("ass_chain"):
        result = engine.astab(inst.ideal, plan)
    return ctx.new_report(
        "astab",
        input=input_echo(inst),
        mode=_mode(plan),
        analytic_spread=plan.spread,
        bound=plan.bound,
        ass_chain=ass_models(result.chain),
        astab=result.k,
        verdicts=_plan_notes(plan),
    )


def run_dstab(args, ctx: CommandContext) -> Report:
    inst = InstanceService.load(args.instance, args.case, seed=ctx.seed)
    engine = ctx.engine
    with ctx.phase("plan"):
        plan = engine.plan(inst.ideal, args.mode, args.kmax)
    with ctx.phase("depth"):
        result = engine.dstab(inst.ideal, plan)
    return ctx.new_report(
        "dstab",
        input=input_echo(inst),
        mode=_mode(plan),
        analytic_spread=plan.spread,
        bound=plan.bound,
        dstab=result.k,
        dstab_method=result.method,
        dstab_components=dstab_components(result),
        depth_sequence=depth_points(result.depth_sequence or None),
        verdicts=_plan_notes(plan),
    )


def run_bounds(args, ctx: CommandContext) -> Report:
    inst = InstanceService.load(args.instance, args.case, seed=ctx.seed)
    with ctx.phase("check"):
        check = InstanceService.check(inst.ideal)
    with ctx.phase("bounds"):
        report = ctx.engine.check_bounds(inst.ideal, kmax=args.kmax, union_check=args.union_check)
    return ctx.new_report(
        "bounds",
        input=input_echo(inst),
        mode=_mode(report.plan),
        invariants=invariants_model(check, inst.ideal.size),
        gamma=gamma_model(report.gamma, report.dstab.factorization),
        analytic_spread=report.plan.spread,
        bound=report.plan.bound,
        ass_chain=ass_models(report.astab.chain),
        astab=report.astab.k,
        dstab=report.dstab.k,
        dstab_method=report.dstab.method,
        dstab_components=dstab_components(report.dstab),
        depth_sequence=depth_points(report.depth_sequence),
        verdicts=verdict_models(report.verdicts),
        conjecture_counterexample=report.conjecture_counterexample,
    )
