"""
Rendering tests: canonical JSON and the text summary.
"""

import json

import pytest

from app.api.render import emit_report, report_json, report_text
from app.api.schemas.report_schemas import (
    AssPowerModel,
    ExpectationModel,
    InputEcho,
    LedgerModel,
    Report,
    VerdictModel,
)
from app.core.exceptions import InputError


def make_report(**sections):
    return Report(schema_version=1, engine_version="1.0.0", command="astab", **sections)


class TestReportJson:
    """Absent sections are omitted and keys are sorted."""

    def test_minimal_document(self):
        doc = json.loads(report_json(make_report()))
        assert doc == {"command": "astab", "engine_version": "1.0.0", "schema_version": 1, "verdicts": []}

    def test_sorted_keys_and_newline(self):
        text = report_json(make_report(astab=2, bound=2))
        assert text.endswith("}\n")
        keys = list(json.loads(text))
        assert keys == sorted(keys)

    def test_nested_none_omitted(self):
        chain = [AssPowerModel(k=1, primes=[[1, 2]])]
        doc = json.loads(report_json(make_report(ass_chain=chain)))
        assert doc["ass_chain"] == [{"k": 1, "primes": [[1, 2]]}]


class TestReportFailed:
    """failed reflects verdicts, ledger violations and expectations."""

    def test_clean(self):
        assert not make_report(verdicts=[VerdictModel(name="x", status="pass")]).failed

    def test_info_and_review_do_not_fail(self):
        verdicts = [VerdictModel(name="a", status="info"), VerdictModel(name="b", status="review")]
        assert not make_report(verdicts=verdicts).failed

    def test_fail_verdict(self):
        assert make_report(verdicts=[VerdictModel(name="x", status="fail")]).failed

    def test_ledger_violation(self):
        ledger = LedgerModel(family="graphic", trials=1, seed=1, examined=1, skipped=0,
                             violations=1, conjecture_witnesses=0)
        assert make_report(ledger=ledger).failed

    def test_failed_expectation(self):
        exp = ExpectationModel(name="astab", expected="3", observed="2", status="fail")
        assert make_report(expectations=[exp]).failed


class TestReportText:
    """The human summary carries the main numbers."""

    def test_sections(self):
        report = make_report(
            input=InputEcho(source="k3.txt", n=3, generators=["x1*x2", "x1*x3", "x2*x3"]),
            mode="certified",
            bound=2,
            ass_chain=[AssPowerModel(k=1, primes=[[1, 2], [1, 3], [2, 3]]),
                       AssPowerModel(k=2, primes=[[1, 2], [1, 3], [2, 3], [1, 2, 3]])],
            astab=2,
            verdicts=[VerdictModel(name="astab_bound", status="pass", detail="2 <= 2")],
        )
        text = report_text(report)
        assert text.startswith("astab (engine 1.0.0, schema 1)")
        assert "input: k3.txt, n=3, 3 generators" in text
        assert "(x1,x2,x3)" in text
        assert "astab: 2" in text
        assert "astab_bound" in text

    def test_emit_unknown_format(self):
        with pytest.raises(InputError):
            emit_report(make_report(), "yaml")

    def test_emit_bytes(self):
        assert emit_report(make_report(), "text").startswith(b"astab")
