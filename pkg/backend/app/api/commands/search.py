"""search: randomized sweep over one matroidal family."""

from app.api.commands.common import CommandContext
from app.api.schemas.report_schemas import LedgerEntryModel, LedgerModel, Report
from app.application.search_service import SearchService
from app.core.config import settings


def run_search(args, ctx: CommandContext) -> Report:
    seed = args.seed if args.seed is not None else settings.DEFAULT_SEED
    ctx.seed = seed
    with ctx.phase("search"):
        ledger = SearchService(ctx.engine).run(
            args.family, args.trials, seed, union_check=args.union_check
        )
    return ctx.new_report(
        "search",
        ledger=LedgerModel(
            family=ledger.family,
            trials=ledger.trials,
            seed=ledger.seed,
            examined=ledger.examined,
            skipped=ledger.skipped,
            violations=ledger.violations,
            conjecture_witnesses=ledger.conjecture_witnesses,
            completeness_checks=ledger.completeness_checks,
            entries=[
                LedgerEntryModel(
                    trial=e.trial, kind=e.kind, spec=e.spec, generators=e.generators, detail=e.detail
                )
                for e in ledger.entries
            ],
        ),
    )
