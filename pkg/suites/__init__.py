"""
Check suites: ordered, witness-bearing verification runs over one corpus entry
"""
import logging
from typing import Iterable, Optional

from models import CorpusEntry, SourceKind, SuiteResult
from scheme.tensor import IntersectionTensor

from .base_suite import BaseSuite, SkipCheck
from .fusion_suite import FusionSuite
from .kernel_suite import KernelSuite
from .scheme_suite import SchemeSuite

logger = logging.getLogger(__name__)


def build_suite(
    entry: CorpusEntry, seed: Optional[int] = None, tensor_override: Optional[IntersectionTensor] = None
) -> BaseSuite:
    if entry.kind == SourceKind.SCHEME:
        return SchemeSuite(entry.source, entry.payload, seed=seed, tensor_override=tensor_override)
    return FusionSuite(entry.source, entry.payload, seed=seed, tensor_override=tensor_override)


def run_checks(
    entry: CorpusEntry,
    selection: Optional[Iterable[str]] = None,
    seed: Optional[int] = None,
    tensor_override: Optional[IntersectionTensor] = None,
) -> SuiteResult:
    """Run the canonical checks (or a selection) for one entry; errors become ERROR reports"""
    suite = build_suite(entry, seed=seed, tensor_override=tensor_override)
    result = suite.run(selection)
    logger.info(f"{entry.source}: {suite.get_status()['checks_run']} checks, exit code {result.exit_code}")
    return result


__all__ = [
    'BaseSuite',
    'FusionSuite',
    'KernelSuite',
    'SchemeSuite',
    'SkipCheck',
    'build_suite',
    'run_checks',
]
