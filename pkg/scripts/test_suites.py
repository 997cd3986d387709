#!/usr/bin/env python3
"""
Tests for the check suites and report rendering
"""

import json
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))
sys.path.insert(0, str(Path(__file__).parent))

import config
from cli.report import ReportFormat, emit_report, exit_code, format_check_line
from cli.sources import load_entry
from fusion import build_fusion_data, gen_fibonacci
from models import CheckReport, CorpusEntry, SourceKind, SuiteResult, Verdict
from scheme import ClassMatrix, intersection_numbers, mutate_tensor, validate
from suites import FusionSuite, SchemeSuite, build_suite, run_checks
from run_corpus import CorpusRunner


def verdicts(result: SuiteResult) -> dict:
    return {report.name: report.verdict for report in result.reports}


def test_cyclic_scheme_passes_everything():
    result = run_checks(load_entry("gen:cyclic:4"))
    assert [r.name for r in result.reports] == list(config.SCHEME_CHECK_ORDER)
    assert all(r.verdict == Verdict.PASS for r in result.reports), verdicts(result)
    assert result.exit_code == 0


def test_fibonacci_suite():
    result = run_checks(load_entry("gen:fibonacci"))
    found = verdicts(result)
    assert list(found) == list(config.FUSION_CHECK_ORDER)
    assert found["star-preserved"] == Verdict.NOT_APPLICABLE
    assert found["closed"] == Verdict.NOT_APPLICABLE
    assert found["multiplicative"] == Verdict.PASS
    assert found["wiener-round-trip"] == Verdict.PASS
    assert result.exit_code == 0


def test_closed_fusion_ring_checks_star_chain():
    found = verdicts(run_checks(load_entry("gen:zn:3")))
    assert found["closed"] == Verdict.PASS
    assert found["star-preserved"] == Verdict.PASS


def test_mutated_tensor_fails_and_later_checks_still_run():
    entry = load_entry("gen:hamming:2,2")
    tensor = intersection_numbers(validate(entry.payload))
    result = run_checks(entry, tensor_override=mutate_tensor(tensor, (1, 1, 0)))
    found = verdicts(result)
    assert len(result.reports) == len(config.SCHEME_CHECK_ORDER)
    assert found["validate"] == Verdict.PASS
    assert found["intersection-numbers"] == Verdict.FAIL
    assert found["proassociativity"] == Verdict.FAIL
    assert result.exit_code >= 1


def test_invalid_scheme_skips_downstream_checks():
    entry = CorpusEntry(source="bad", kind=SourceKind.SCHEME, payload=ClassMatrix(((0, 1), (1, 2))))
    result = run_checks(entry)
    found = verdicts(result)
    assert found["validate"] == Verdict.FAIL
    assert result.reports[0].witness["pair"] == [1, 1]
    assert all(v == Verdict.NOT_APPLICABLE for name, v in found.items() if name != "validate")
    assert result.exit_code == 1


def test_invalid_fusion_data_skips_downstream_checks():
    ring = gen_fibonacci()
    entries = {(x, y, z): int(v) for x, y, z, v in ring.tensor.nonzero()}
    entries[(0, 1, 0)] = 1
    data = build_fusion_data(ring.names, ring.unit, ring.dual, entries)
    result = FusionSuite("bad", data).run()
    found = verdicts(result)
    assert found["validate"] == Verdict.FAIL
    assert found["multiplicative"] == Verdict.NOT_APPLICABLE


def test_unknown_check_is_an_error():
    result = run_checks(load_entry("gen:cyclic:3"), selection=["validate", "no-such-check"])
    assert [(r.name, r.verdict) for r in result.reports] == [("no-such-check", Verdict.ERROR)]
    assert result.exit_code == 2


def test_selection_keeps_canonical_order_and_streams():
    entry = load_entry("gen:cyclic:5")
    full = verdicts(run_checks(entry, seed=7))
    subset = run_checks(entry, selection=["dual-comparison", "validate"], seed=7)
    assert [r.name for r in subset.reports] == ["validate", "dual-comparison"]
    assert all(full[r.name] == r.verdict for r in subset.reports)


def test_handler_exceptions_become_errors():
    suite = build_suite(load_entry("gen:cyclic:3"))

    def broken():
        raise RuntimeError("boom")

    suite.register_handler("compact", broken)
    result = suite.run(["validate", "compact"])
    assert verdicts(result) == {"validate": Verdict.PASS, "compact": Verdict.ERROR}
    assert "boom" in result.reports[1].detail
    assert suite.get_status()["errors"] == 1


def test_scheme_suite_runs_directly():
    suite = SchemeSuite("s3", load_entry("gen:s3").payload)
    result = suite.run(["validate", "bose-mesner", "compact", "multiplicative"])
    assert all(r.verdict == Verdict.PASS for r in result.reports)


def test_fail_reports_need_a_witness():
    with pytest.raises(ValueError):
        CheckReport(name="x", verdict=Verdict.FAIL)
    with pytest.raises(ValueError):
        CheckReport(name="x", verdict=Verdict.PASS, witness={"lhs": 1})


def test_check_line_format():
    assert format_check_line(CheckReport.passed("validate")) == "CHECK validate PASS 0ms"
    failed = CheckReport.failed("valency", {"s": 1, "lhs": 2, "rhs": 3})
    assert format_check_line(failed) == 'CHECK valency FAIL witness={"s":1,"lhs":2,"rhs":3} 0ms'
    skipped = CheckReport.not_applicable("closed", "not closed")
    assert format_check_line(skipped) == "CHECK closed NOT-APPLICABLE 0ms"


def test_exit_code_precedence():
    def result(*verdict_list):
        reports = [
            CheckReport.failed(f"c{i}", {"lhs": 0}) if v == Verdict.FAIL else CheckReport(name=f"c{i}", verdict=v)
            for i, v in enumerate(verdict_list)
        ]
        return SuiteResult(source="x", seed=0, reports=reports)

    assert exit_code([result(Verdict.PASS, Verdict.NOT_APPLICABLE)]) == 0
    assert exit_code([result(Verdict.PASS), result(Verdict.FAIL)]) == 1
    assert exit_code([result(Verdict.FAIL), result(Verdict.ERROR)]) == 2
    assert exit_code([]) == 0


def test_text_report_headers_for_several_entries():
    results = [run_checks(load_entry(s), selection=["validate"]) for s in ("gen:cyclic:2", "gen:ising")]
    lines = emit_report(results).splitlines()
    assert lines[0] == f"SOURCE gen:cyclic:2 scheme seed={config.DEFAULT_SEED}"
    assert lines[1] == "CHECK validate PASS 0ms"
    assert lines[2].startswith("SOURCE gen:ising fusion")
    single = emit_report(results[:1])
    assert single == "CHECK validate PASS 0ms\n"


def test_structured_report():
    result = run_checks(load_entry("gen:zn:2"), selection=["validate", "braiding", "closed"])
    document = json.loads(emit_report([result], ReportFormat.STRUCTURED))
    assert document["exit_code"] == 0
    reports = document["results"][0]["reports"]
    assert [r["name"] for r in reports] == ["validate", "braiding", "closed"]
    assert {r["verdict"] for r in reports} == {"PASS"}
    assert document["results"][0]["kind"] == "fusion"


def test_reports_are_deterministic():
    entries = [load_entry("gen:johnson:5,2"), load_entry("gen:ising")]
    first = emit_report([run_checks(e, seed=11) for e in entries], ReportFormat.STRUCTURED)
    second = emit_report([run_checks(e, seed=11) for e in entries], ReportFormat.STRUCTURED)
    assert first == second


def test_corpus_runner_passes():
    runner = CorpusRunner(config.DEFAULT_SEED)
    entries = [load_entry("gen:cyclic:3"), load_entry("gen:fibonacci")]
    assert runner.run_mutations(entries)
    assert runner.check_determinism(entries)
    results = runner.run_suites(entries[:1])
    assert results[0].exit_code == 0
    assert set(runner.timings) == {"gen:cyclic:3"}


def test_corpus_exit_code_excuses_the_unweighted_cyclic_relation():
    runner = CorpusRunner(config.DEFAULT_SEED)
    result = run_checks(load_entry("gen:hamming:2,2"), selection=["compact", "compact-weighted"])
    assert verdicts(result) == {"compact": Verdict.FAIL, "compact-weighted": Verdict.PASS}
    assert result.reports[0].witness == {"s": 0, "t": 1, "r": 1, "lhs": 1, "rhs": 2}
    assert result.exit_code == 1
    assert runner.corpus_exit_code([result]) == 0
    # an excused check that starts passing is reported too
    flipped = SuiteResult(source="gen:hamming:2,2", seed=0, reports=[CheckReport.passed("compact")])
    assert runner.corpus_exit_code([flipped]) == 1
    assert runner.corpus_exit_code([run_checks(load_entry("gen:cyclic:3"), selection=["compact"])]) == 0


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
