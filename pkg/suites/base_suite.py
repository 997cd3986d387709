"""
Base check suite: a name -> handler registry run in a fixed order
"""
import logging
import time
from abc import ABC, abstractmethod
from typing import Callable, Dict, Iterable, List, Optional, Sequence

import numpy as np

import config
from models import CheckReport, SourceKind, SuiteResult, Verdict

logger = logging.getLogger(__name__)

CheckHandler = Callable[[], CheckReport]


class SkipCheck(Exception):
    """Raised by a handler whose precondition (a validated input) is missing"""


class BaseSuite(ABC):
    """Base class for the scheme and fusion suites"""

    kind: SourceKind
    check_order: Sequence[str] = ()

    def __init__(self, source: str, seed: Optional[int] = None):
        self.source = source
        self.seed = config.DEFAULT_SEED if seed is None else seed
        self.check_handlers: Dict[str, CheckHandler] = {}
        self.checks_run = 0
        self.errors = 0
        self.register_checks()

    def register_handler(self, name: str, handler: CheckHandler):
        """Register a check handler"""
        self.check_handlers[name] = handler

    @abstractmethod
    def register_checks(self):
        """Suite-specific handler registration"""
        pass

    def rng(self, name: str) -> np.random.Generator:
        """A generator per check, so selecting a subset of checks does not shift the streams"""
        return np.random.default_rng([self.seed, self.check_order.index(name)])

    def run(self, selection: Optional[Iterable[str]] = None) -> SuiteResult:
        """Run the selected checks (all by default) in canonical order"""
        names = list(self.check_order)
        if selection is not None:
            wanted = set(selection)
            unknown = sorted(wanted - set(names))
            if unknown:
                logger.error(f"unknown checks for a {self.kind.value} suite: {', '.join(unknown)}")
                return SuiteResult(
                    source=self.source,
                    kind=self.kind,
                    seed=self.seed,
                    reports=[CheckReport.errored(name, "unknown check") for name in unknown],
                )
            names = [name for name in names if name in wanted]

        logger.info(f"running {len(names)} checks on {self.source}")
        reports: List[CheckReport] = [self._run_check(name) for name in names]
        return SuiteResult(source=self.source, kind=self.kind, seed=self.seed, reports=reports)

    def _run_check(self, name: str) -> CheckReport:
        handler = self.check_handlers[name]
        started = time.perf_counter()
        try:
            report = handler()
        except SkipCheck as e:
            report = CheckReport.not_applicable(name, str(e))
        except Exception as e:
            self.errors += 1
            logger.error(f"check {name} raised {type(e).__name__}: {e}")
            report = CheckReport.errored(name, f"{type(e).__name__}: {e}")
        self.checks_run += 1

        if report.name != name:
            report = report.model_copy(update={"name": name})
        if config.RECORD_TIMINGS:
            report = report.model_copy(update={"timing_ms": int((time.perf_counter() - started) * 1000)})

        if report.verdict == Verdict.FAIL:
            logger.warning(f"{name} FAIL on {self.source}: {report.witness}")
        else:
            logger.debug(f"{name} {report.verdict.value}")
        return report

    def get_status(self) -> Dict[str, object]:
        """Counters for the runner summary"""
        return {
            "source": self.source,
            "kind": self.kind.value,
            "seed": self.seed,
            "checks": list(self.check_order),
            "checks_run": self.checks_run,
            "errors": self.errors,
        }
