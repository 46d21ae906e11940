"""reproduce: rerun one embedded case and compare against its recorded values."""

from app.api.commands.common import (
    CommandContext,
    ass_models,
    depth_points,
    dstab_components,
    input_echo,
    verdict_models,
)
from app.api.schemas.report_schemas import ExpectationModel, Report
from app.application.instance_service import LoadedInstance
from app.application.reproduce_service import ReproduceService
from app.core.exceptions import InputError


def run_reproduce(args, ctx: CommandContext) -> Report:
    if not args.case:
        raise InputError("reproduce needs --case")
    with ctx.phase("reproduce"):
        outcome = ReproduceService(ctx.engine).run(args.case, union_check=args.union_check)

    inst = LoadedInstance(outcome.ideal, f"case:{outcome.case.key}")
    stability = outcome.stability
    return ctx.new_report(
        "reproduce",
        input=input_echo(inst),
        mode="certified" if outcome.plan.certified else "uncertified",
        analytic_spread=outcome.plan.spread,
        bound=outcome.plan.bound,
        ass_chain=ass_models(outcome.astab.chain),
        astab=outcome.astab.k,
        dstab=outcome.dstab.k,
        dstab_method=outcome.dstab.method,
        dstab_components=dstab_components(outcome.dstab),
        depth_sequence=depth_points(
            stability.depth_sequence if stability else (outcome.dstab.depth_sequence or None)
        ),
        verdicts=verdict_models(stability.verdicts) if stability else [],
        conjecture_counterexample=outcome.astab.k != outcome.dstab.k,
        expectations=[
            ExpectationModel(name=e.name, expected=e.expected, observed=e.observed, status=e.status)
            for e in outcome.expectations
        ],
    )
