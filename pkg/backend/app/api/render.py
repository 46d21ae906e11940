"""
Report rendering.

JSON is the canonical form: keys sorted, two-space indent, absent sections
omitted, trailing newline. Text is a human summary of the same document
and is not meant to be parsed.
"""

import json
from typing import Any, Dict, List

from app.api.schemas.report_schemas import Report
from app.core.exceptions import InputError

FORMATS = ("json", "text")


def report_json(report: Report) -> str:
    return json.dumps(report.model_dump(mode="json", exclude_none=True), sort_keys=True, indent=2) + "\n"


def document_json(doc: Dict[str, Any]) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _primes(primes: List[List[int]]) -> str:
    if not primes:
        return "{}"
    return "{" + ", ".join("(" + ",".join(f"x{i}" for i in p) + ")" for p in primes) + "}"


def _table(rows: List[List[str]], header: List[str]) -> List[str]:
    widths = [max(len(str(r[c])) for r in rows + [header]) for c in range(len(header))]
    out = ["  ".join(str(h).ljust(w) for h, w in zip(header, widths)).rstrip()]
    out.append("  ".join("-" * w for w in widths))
    for r in rows:
        out.append("  ".join(str(v).ljust(w) for v, w in zip(r, widths)).rstrip())
    return out


def report_text(report: Report) -> str:
    lines = [f"{report.command} (engine {report.engine_version}, schema {report.schema_version})"]

    if report.input is not None:
        inp = report.input
        lines.append(f"input: {inp.source}, n={inp.n}, {len(inp.generators)} generators")
        if len(inp.generators) <= 12:
            lines.append("  " + ", ".join(inp.generators))
        if inp.power is not None:
            lines.append(f"power: {inp.power}")
    if report.seed is not None:
        lines.append(f"seed: {report.seed}")
    if report.mode is not None:
        lines.append(f"mode: {report.mode}")

    if report.invariants is not None:
        inv = report.invariants
        lines.append("invariants:")
        lines.append(f"  degree={inv.degree} support={inv.support} gcd={inv.gcd}")
        lines.append(
            f"  squarefree={inv.squarefree} equigenerated={inv.equigenerated} "
            f"polymatroidal={inv.polymatroidal} matroidal={inv.matroidal} certifiable={inv.certifiable}"
        )
        if inv.exchange_witness:
            lines.append("  exchange fails at u={}, v={}, {}".format(*inv.exchange_witness))
        if inv.cover_profile is not None:
            lines.append(f"  |A_i| = {inv.cover_profile}")

    if report.gamma is not None:
        g = report.gamma
        lines.append(f"gamma: {len(g.vertices)} vertices, {len(g.edges)} edges, s={g.s}, complete={g.complete}")
        for comp in g.components:
            lines.append("  component " + ",".join(f"x{v}" for v in comp))
        if g.factorization_verified is not None:
            lines.append(f"  factorization verified: {g.factorization_verified}")
            if g.factorization_witness:
                lines.append(f"  witness: {g.factorization_witness}")

    if report.analytic_spread is not None:
        lines.append(f"analytic spread: {report.analytic_spread}")
    if report.bound is not None:
        lines.append(f"power bound: {report.bound}")

    if report.ass_chain:
        lines.append("associated primes:")
        rows = [[str(a.k), str(len(a.primes)), _primes(a.primes)] for a in report.ass_chain]
        lines.extend("  " + r for r in _table(rows, ["k", "#", "primes"]))
        witnessed = [a for a in report.ass_chain if a.witnesses]
        for a in witnessed:
            for p, w in sorted(a.witnesses.items()):
                lines.append(f"  witness for {p}: {w}")

    if report.astab is not None:
        lines.append(f"astab: {report.astab}")
    if report.dstab is not None:
        method = f" ({report.dstab_method})" if report.dstab_method else ""
        lines.append(f"dstab: {report.dstab}{method}")
    if report.dstab_components:
        rows = [
            [",".join(f"x{v}" for v in c.variables), str(c.degree), str(c.analytic_spread), str(c.dstab)]
            for c in report.dstab_components
        ]
        lines.extend("  " + r for r in _table(rows, ["factor", "d", "l", "dstab"]))

    if report.depth is not None:
        d = report.depth
        lines.append(f"depth: {d.depth}  pd: {d.pd}  (GF({d.field_prime}), lcm lattice {d.lattice_size})")
        lines.append("  betti totals: " + " ".join(f"b{i}={v}" for i, v in sorted(d.betti_totals.items(), key=lambda t: int(t[0]))))
        if d.discrepancy:
            lines.append(f"  differs over GF({d.second_prime})")

    if report.depth_sequence:
        lines.append("depth sequence:")
        rows = [[str(p.k), str(p.depth), p.method] for p in report.depth_sequence]
        lines.extend("  " + r for r in _table(rows, ["k", "depth", "method"]))

    if report.verdicts:
        lines.append("verdicts:")
        rows = [[v.name, v.status, v.detail or ""] for v in report.verdicts]
        lines.extend("  " + r for r in _table(rows, ["check", "status", "detail"]))

    if report.conjecture_counterexample is not None:
        lines.append(f"astab != dstab: {report.conjecture_counterexample}")

    if report.expectations:
        lines.append("expectations:")
        rows = [[e.name, e.expected, e.observed, e.status] for e in report.expectations]
        lines.extend("  " + r for r in _table(rows, ["check", "expected", "observed", "status"]))

    if report.ledger is not None:
        led = report.ledger
        lines.append(
            f"search {led.family}: {led.trials} trials from seed {led.seed}; "
            f"examined={led.examined} skipped={led.skipped} violations={led.violations} "
            f"astab!=dstab={led.conjecture_witnesses} completeness_checks={led.completeness_checks}"
        )
        for e in led.entries:
            lines.append(f"  #{e.trial} {e.kind}: {e.detail}")

    if report.timing:
        lines.append("timing: " + ", ".join(f"{k}={v:.3f}s" for k, v in report.timing.items()))
    return "\n".join(lines) + "\n"


def emit_report(report: Report, fmt: str = "json") -> bytes:
    if fmt == "json":
        return report_json(report).encode("utf-8")
    if fmt == "text":
        return report_text(report).encode("utf-8")
    raise InputError(f"unknown format '{fmt}', expected one of {', '.join(FORMATS)}")
