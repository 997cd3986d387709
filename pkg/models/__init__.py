"""
Data models for the graphic Fourier transform verifier
"""
from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, model_validator


class Verdict(str, Enum):
    """Outcome of a single check"""
    PASS = "PASS"
    FAIL = "FAIL"
    NOT_APPLICABLE = "NOT-APPLICABLE"
    ERROR = "ERROR"


class SourceKind(str, Enum):
    """Kind of object a corpus entry carries"""
    SCHEME = "scheme"
    FUSION = "fusion"


class CheckReport(BaseModel):
    """Result of one named check, with a witness whenever it fails"""
    name: str
    verdict: Verdict
    witness: Optional[Dict[str, Any]] = None
    detail: Optional[str] = None
    timing_ms: int = 0

    @model_validator(mode="after")
    def _witness_matches_verdict(self) -> "CheckReport":
        if self.verdict == Verdict.FAIL and not self.witness:
            raise ValueError(f"FAIL report '{self.name}' must carry a witness")
        if self.verdict == Verdict.PASS and self.witness:
            raise ValueError(f"PASS report '{self.name}' must not carry a witness")
        return self

    @classmethod
    def passed(cls, name: str, detail: Optional[str] = None) -> "CheckReport":
        return cls(name=name, verdict=Verdict.PASS, detail=detail)

    @classmethod
    def failed(cls, name: str, witness: Dict[str, Any], detail: Optional[str] = None) -> "CheckReport":
        return cls(name=name, verdict=Verdict.FAIL, witness=witness, detail=detail)

    @classmethod
    def not_applicable(cls, name: str, detail: str) -> "CheckReport":
        return cls(name=name, verdict=Verdict.NOT_APPLICABLE, detail=detail)

    @classmethod
    def errored(cls, name: str, detail: str) -> "CheckReport":
        return cls(name=name, verdict=Verdict.ERROR, detail=detail)

    @property
    def ok(self) -> bool:
        return self.verdict in (Verdict.PASS, Verdict.NOT_APPLICABLE)


class CorpusEntry(BaseModel):
    """A parsed input: a file path or generator spec plus the object it yields"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    source: str
    kind: SourceKind
    payload: Any


class SuiteResult(BaseModel):
    """All reports produced for one corpus entry"""
    source: str
    kind: Optional[SourceKind] = None
    seed: int
    reports: List[CheckReport] = []

    @property
    def exit_code(self) -> int:
        verdicts = {report.verdict for report in self.reports}
        if Verdict.ERROR in verdicts:
            return 2
        if Verdict.FAIL in verdicts:
            return 1
        return 0
