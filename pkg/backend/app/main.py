"""
Command-line entry point.

    python -m app.main <command> [options]

Wires argparse subcommands to the command modules, sets up logging and maps
every outcome to an exit code: 0 ok, 1 verdict failure, 2 input error,
3 resource limit, 4 invariant violation, 70 internal, 78 configuration.
Reports go to stdout; logs and nothing else go to stderr.
"""

import argparse
import logging
import sys
from typing import List, Optional

from app.core.error_handlers import handle_exception
from app.core.logging_config import setup_logging

logger = logging.getLogger("polystab.cli")

FAMILIES = ("graphic", "transversal", "veronese")
CASES = ("ex6", "ex8", "km4")


def _instance_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("instance", nargs="?", help="instance file, or '-' for stdin")
    p.add_argument("--case", choices=CASES, help="use an embedded example instead of a file")


def _stability_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--kmax", type=int, help="highest power examined in uncertified runs")
    p.add_argument("--mode", choices=("auto", "certified", "uncertified"), default="auto")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--workers", type=int, help="processes for lattice and prime sweeps")
    common.add_argument("--seed", type=int, help="seed for random instances and searches")
    common.add_argument("--field-prime", type=int, help="coefficient field GF(p) for Betti numbers")
    common.add_argument("--second-prime", type=int, help="recompute Betti numbers over a second field")
    common.add_argument("--max-ass-variables", type=int)
    common.add_argument("--max-generators", type=int, help="exact-depth generator cap")
    common.add_argument("--max-lattice", type=int, help="exact-depth lcm lattice cap")
    common.add_argument("--timing", action="store_true", help="record wall-clock time per phase")
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true")
    verbosity.add_argument("-q", "--quiet", action="store_true")

    parser = argparse.ArgumentParser(
        prog="polystab",
        description="Associated primes, depth and stability indices of (poly)matroidal monomial ideals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="exchange property and basic invariants")
    _instance_args(p)
    p = sub.add_parser("gamma", parents=[common], help="linear relation graph and its factorization")
    _instance_args(p)
    p = sub.add_parser("ass", parents=[common], help="associated primes of I^k")
    _instance_args(p)
    p.add_argument("--power", type=int, default=1)
    p = sub.add_parser("depth", parents=[common], help="exact depth of R/I^k")
    _instance_args(p)
    p.add_argument("--power", type=int, default=1)
    p = sub.add_parser("spread", parents=[common], help="analytic spread")
    _instance_args(p)

    p = sub.add_parser("astab", parents=[common], help="index of Ass stability")
    _instance_args(p)
    _stability_args(p)
    p = sub.add_parser("dstab", parents=[common], help="index of depth stability")
    _instance_args(p)
    _stability_args(p)
    p = sub.add_parser("bounds", parents=[common], help="check every stability bound for a matroidal ideal")
    _instance_args(p)
    p.add_argument("--kmax", type=int, help="extend the Ass chain past min(d, l)")
    p.add_argument("--union-check", action="store_true", help="also compare Ass(I^d) with its restrictions")

    p = sub.add_parser("reproduce", parents=[common], help="rerun an embedded example")
    p.add_argument("--case", choices=CASES, required=True)
    p.add_argument("--union-check", action="store_true")

    p = sub.add_parser("search", parents=[common], help="randomized sweep over a matroidal family")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--union-check", action="store_true")
    return parser


def _log_level(args) -> Optional[str]:
    if args.verbose:
        return "DEBUG"
    if args.quiet:
        return "WARNING"
    return None


def _dispatch():
    from app.api.commands import instance, reproduce, search, stability

    return {
        "check": instance.run_check,
        "gamma": instance.run_gamma,
        "ass": instance.run_ass,
        "depth": instance.run_depth,
        "spread": instance.run_spread,
        "astab": stability.run_astab,
        "dstab": stability.run_dstab,
        "bounds": stability.run_bounds,
        "reproduce": reproduce.run_reproduce,
        "search": search.run_search,
    }


def run(argv: Optional[List[str]] = None, stdout=None) -> int:
    """Run one command; returns the exit code instead of exiting."""
    out = stdout or sys.stdout.buffer
    args = build_parser().parse_args(argv)
    setup_logging("production", _log_level(args))

    try:
        # settings validate at import, so configuration errors surface here
        from app.api.commands.common import CommandContext
        from app.api.render import emit_report
        from app.application.stability_service import EngineLimits, StabilityEngine
        from app.core.config import settings

        setup_logging(settings.ENVIRONMENT, _log_level(args) or settings.LOG_LEVEL or None)
        limits = EngineLimits.from_settings(
            settings,
            max_ass_variables=args.max_ass_variables,
            exact_depth_max_generators=args.max_generators,
            exact_depth_max_lattice=args.max_lattice,
            field_prime=args.field_prime,
            second_field_prime=args.second_prime,
            workers=args.workers,
        )
        ctx = CommandContext(StabilityEngine(limits), timing=args.timing, seed=args.seed)
        logger.debug("Running %s", args.command)
        report = _dispatch()[args.command](args, ctx)
        out.write(emit_report(report, args.format))
        out.flush()
    except BaseException as exc:  # noqa: BLE001
        if isinstance(exc, (KeyboardInterrupt, SystemExit)):
            raise
        doc, code = handle_exception(exc)
        from app.api.render import document_json

        out.write(document_json(doc).encode("utf-8"))
        out.flush()
        return code

    if report.failed:
        logger.warning("%s: at least one check failed", args.command)
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
