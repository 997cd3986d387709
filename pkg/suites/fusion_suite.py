"""
Check suite for fusion rings
"""
import logging
from functools import cached_property
from typing import Optional, Tuple, Union

import config
from fusion import (
    FusionData,
    FusionError,
    FusionRing,
    check_braiding,
    check_cyclic,
    check_dual_pairing,
    check_fusion_algebra,
    check_proassociativity,
    check_unit_self_dual,
    is_closed,
    validate_fusion,
)
from models import CheckReport, SourceKind
from scheme.tensor import IntersectionTensor
from suites.base_suite import SkipCheck
from suites.kernel_suite import KernelSuite
from transform import FusionKernel

logger = logging.getLogger(__name__)


class FusionSuite(KernelSuite):
    """Fusion axioms and the Cayley transform; a tensor override replaces the declared multiplicities"""

    kind = SourceKind.FUSION
    check_order = config.FUSION_CHECK_ORDER

    def __init__(
        self,
        source: str,
        data: Union[FusionData, FusionRing],
        seed: Optional[int] = None,
        tensor_override: Optional[IntersectionTensor] = None,
    ):
        self.data = FusionData(
            names=data.names,
            unit=data.unit,
            dual=data.dual,
            tensor=tensor_override if tensor_override is not None else data.tensor,
        )
        super().__init__(source, seed, tensor_override)

    def register_checks(self):
        self.register_handler("validate", self._check_validate)
        self.register_handler("fusion-tensor", lambda: check_dual_pairing(self.ring))
        self.register_handler("fusion-algebra", lambda: check_fusion_algebra(self.ring))
        self.register_handler("proassociativity", lambda: check_proassociativity(self.ring))
        self.register_handler("cyclic", lambda: check_cyclic(self.ring))
        self.register_handler("unit-dual", lambda: check_unit_self_dual(self.ring))
        self.register_handler("braiding", lambda: check_braiding(self.ring))
        self.register_handler("closed", self._check_closed)
        self.register_kernel_checks()

    @cached_property
    def _validation(self) -> Tuple[Optional[FusionRing], Optional[FusionError]]:
        try:
            return validate_fusion(self.data), None
        except FusionError as e:
            logger.error(f"{self.source} is not valid fusion data: {e}")
            return None, e

    @property
    def ring(self) -> FusionRing:
        ring, error = self._validation
        if ring is None:
            raise SkipCheck(f"fusion data did not validate: {error}")
        return ring

    def build_kernel(self) -> FusionKernel:
        return FusionKernel(self.ring)

    def _check_validate(self) -> CheckReport:
        ring, error = self._validation
        if error is not None:
            return CheckReport.failed("validate", error.witness or {"reason": str(error)}, detail=str(error))
        return CheckReport.passed("validate", detail=f"{ring.m} objects")

    def _check_closed(self) -> CheckReport:
        if is_closed(self.ring) is None:
            return CheckReport.not_applicable("closed", "some (y,z) is not spanned by a single object")
        return CheckReport.passed("closed")
