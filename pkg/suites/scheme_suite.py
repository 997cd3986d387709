"""
Check suite for association schemes
"""
import logging
from functools import cached_property
from typing import Optional, Tuple

import config
from models import CheckReport, SourceKind, Verdict
from scheme import (
    AssociationScheme,
    ClassMatrix,
    IntersectionTensor,
    SchemeError,
    bose_mesner_closure,
    check_compact,
    check_compact_weighted,
    check_precompact,
    check_proassociativity,
    check_prounit_laws,
    check_valency_identity,
    intersection_numbers,
    validate,
)
from scheme.tensor import first_mismatch
from suites.base_suite import SkipCheck
from suites.kernel_suite import KernelSuite, first_failure
from transform import DimObject, MatObject, SchemeKernel, khat, regularity_characterization, wiener_membership

logger = logging.getLogger(__name__)


class SchemeSuite(KernelSuite):
    """Scheme axioms, the intersection tensor and the transform over the scheme kernel"""

    kind = SourceKind.SCHEME
    check_order = config.SCHEME_CHECK_ORDER

    def __init__(
        self,
        source: str,
        class_matrix: ClassMatrix,
        seed: Optional[int] = None,
        tensor_override: Optional[IntersectionTensor] = None,
    ):
        self.class_matrix = class_matrix
        super().__init__(source, seed, tensor_override)

    def register_checks(self):
        self.register_handler("validate", self._check_validate)
        self.register_handler("intersection-numbers", self._check_intersection_numbers)
        self.register_handler("prounit-laws", lambda: check_prounit_laws(self.tensor, self.scheme.diagonal_class))
        self.register_handler("valency", lambda: check_valency_identity(self.tensor, self.scheme.valencies()))
        self.register_handler("bose-mesner", lambda: bose_mesner_closure(self.scheme, self.tensor))
        self.register_handler("proassociativity", lambda: check_proassociativity(self.tensor))
        self.register_handler(
            "precompact", lambda: check_precompact(self.tensor, self.scheme.involution, self.scheme.diagonal_class)
        )
        self.register_handler("compact", lambda: check_compact(self.tensor, self.scheme.involution))
        self.register_handler(
            "compact-weighted",
            lambda: check_compact_weighted(self.tensor, self.scheme.involution, self.scheme.valencies()),
        )
        self.register_handler(
            "regularity-characterization",
            lambda: regularity_characterization(self.kernel, seed=self.seed),
        )
        self.register_kernel_checks()
        # scheme kernels also owe a rejection witness for class-inconstant grids
        self.register_handler("wiener-round-trip", self._check_wiener)

    @cached_property
    def _validation(self) -> Tuple[Optional[AssociationScheme], Optional[SchemeError]]:
        try:
            return validate(self.class_matrix), None
        except SchemeError as e:
            logger.error(f"{self.source} is not an association scheme: {e}")
            return None, e

    @property
    def scheme(self) -> AssociationScheme:
        scheme, error = self._validation
        if scheme is None:
            raise SkipCheck(f"scheme did not validate: {error}")
        return scheme

    @cached_property
    def computed_tensor(self) -> IntersectionTensor:
        return intersection_numbers(self.scheme)

    @property
    def tensor(self) -> IntersectionTensor:
        return self.tensor_override if self.tensor_override is not None else self.computed_tensor

    def build_kernel(self) -> SchemeKernel:
        return SchemeKernel(self.scheme, tensor=self.tensor)

    def _check_validate(self) -> CheckReport:
        scheme, error = self._validation
        if error is not None:
            return CheckReport.failed("validate", error.witness or {"reason": str(error)}, detail=str(error))
        return CheckReport.passed("validate", detail=f"{scheme.n} points, {scheme.m} classes")

    def _check_intersection_numbers(self) -> CheckReport:
        name = "intersection-numbers"
        computed = self.computed_tensor
        index = first_mismatch(self.tensor.values, computed.values)
        if index is not None:
            s, t, r = index
            return CheckReport.failed(
                name, {"s": s, "t": t, "r": r, "lhs": int(self.tensor(s, t, r)), "rhs": int(computed(s, t, r))}
            )
        return CheckReport.passed(name, detail=f"{computed.m}^3 numbers")

    def _check_wiener(self) -> CheckReport:
        report = self._check_wiener_round_trip()
        if report.verdict != Verdict.PASS:
            return report
        name = "wiener-round-trip"
        kernel = self.kernel
        ones = DimObject((1,) * kernel.source_size)
        image = khat(kernel, ones)

        def rejections():
            for s in range(kernel.source_size):
                cells = kernel.support(s)
                if len(cells) < 2:
                    continue
                bumped = image.dims.copy()
                bumped[cells[-1]] += 1
                result = wiener_membership(kernel, MatObject(bumped))
                witness_cells = [tuple(c) for c in (result.witness or {}).get("cells", [])]
                if result.in_image or witness_cells != [cells[0], cells[-1]]:
                    yield CheckReport.failed(
                        name,
                        {"class": s, "cell": list(cells[-1]), "lhs": "in image" if result.in_image else result.witness,
                         "rhs": "rejected"},
                    )
                else:
                    yield CheckReport.passed(name)

        rejected = first_failure(name, rejections(), "rejections")
        if rejected.verdict != Verdict.PASS:
            return rejected
        return report
