"""
Report rendering: one line per check, or a single JSON document
"""
import json
from enum import Enum
from typing import Iterable, List, Optional

from models import CheckReport, SuiteResult


class ReportFormat(str, Enum):
    TEXT = "text"
    STRUCTURED = "structured"


def _witness_text(witness: dict) -> str:
    return json.dumps(witness, separators=(",", ":"))


def format_check_line(report: CheckReport) -> str:
    """CHECK <name> <verdict> [witness=<json>] <ms>ms"""
    parts = ["CHECK", report.name, report.verdict.value]
    if report.witness:
        parts.append(f"witness={_witness_text(report.witness)}")
    parts.append(f"{report.timing_ms}ms")
    return " ".join(parts)


def exit_code(results: Iterable[SuiteResult]) -> int:
    """2 if any ERROR, else 1 if any FAIL, else 0"""
    return max((result.exit_code for result in results), default=0)


def emit_report(results: List[SuiteResult], fmt: ReportFormat = ReportFormat.TEXT, header: Optional[bool] = None) -> str:
    """Render results; text mode prefixes a SOURCE line when there are several entries"""
    if fmt == ReportFormat.STRUCTURED:
        document = {
            "results": [result.model_dump(mode="json") for result in results],
            "exit_code": exit_code(results),
        }
        return json.dumps(document, indent=2) + "\n"

    header = len(results) > 1 if header is None else header
    lines = []
    for result in results:
        if header:
            kind = result.kind.value if result.kind else "unknown"
            lines.append(f"SOURCE {result.source} {kind} seed={result.seed}")
        lines.extend(format_check_line(report) for report in result.reports)
    return "\n".join(lines) + "\n"
