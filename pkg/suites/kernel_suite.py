"""
Transform-level checks shared by the scheme and fusion suites
"""
import logging
from abc import abstractmethod
from typing import List, Optional

import numpy as np

import config
from models import CheckReport, Verdict
from scheme.tensor import IntersectionTensor
from suites.base_suite import BaseSuite
from transform import (
    DimObject,
    DiscreteKernel,
    SchemeKernel,
    check_conservative_random,
    check_multiplicative,
    check_regular_closure,
    check_round_trip,
    check_star_preserved,
    check_star_preserved_morphism,
    check_triangles,
    check_unit_preserved,
    check_unit_split_mono,
    check_wiener_round_trip,
    dim_object_pairs,
    dual_comparison,
    enumerate_dim_objects,
    random_dim_object,
    random_mat_object,
    random_morphism,
)

logger = logging.getLogger(__name__)


def first_failure(name: str, reports, count_label: str) -> CheckReport:
    """First non-passing report of a sampled check, or PASS with the sample count"""
    count = 0
    for report in reports:
        count += 1
        if report.verdict != Verdict.PASS:
            return report.model_copy(update={"name": name})
    return CheckReport.passed(name, detail=f"{count} {count_label}")


class KernelSuite(BaseSuite):
    """Suite whose later checks run against a discrete kernel built from the validated input"""

    def __init__(self, source: str, seed: Optional[int] = None, tensor_override: Optional[IntersectionTensor] = None):
        self.tensor_override = tensor_override
        self._kernel: Optional[DiscreteKernel] = None
        super().__init__(source, seed)

    @abstractmethod
    def build_kernel(self) -> DiscreteKernel:
        """Kernel for the validated input; raises SkipCheck when validation failed"""
        pass

    @property
    def kernel(self) -> DiscreteKernel:
        if self._kernel is None:
            self._kernel = self.build_kernel()
        return self._kernel

    def register_kernel_checks(self):
        self.register_handler("multiplicative", self._check_multiplicative)
        self.register_handler("unit-preserved", lambda: check_unit_preserved(self.kernel))
        self.register_handler("conservative", lambda: check_conservative_random(self.kernel, self.rng("conservative")))
        self.register_handler("adjunction-triangles", self._check_adjunction)
        self.register_handler("star-preserved", self._check_star_preserved)
        self.register_handler("regular-closure", self._check_regular_closure)
        self.register_handler("wiener-round-trip", self._check_wiener_round_trip)
        self.register_handler("dual-comparison", self._check_dual_comparison)

    # -- sampling ---------------------------------------------------------

    def sample_objects(self, rng: np.random.Generator) -> List[DimObject]:
        settings = config.PROPERTY_TESTING
        size = self.kernel.source_size
        if size <= settings["exhaustive_max_index"]:
            return enumerate_dim_objects(size, settings["exhaustive_values"])
        return [random_dim_object(rng, size, settings["random_max_dim"]) for _ in range(settings["random_trials"])]

    def morphism_objects(self, rng: np.random.Generator) -> List[DimObject]:
        settings = config.PROPERTY_TESTING
        size = self.kernel.source_size
        return [random_dim_object(rng, size, settings["morphism_max_dim"]) for _ in range(settings["morphism_trials"])]

    # -- handlers ---------------------------------------------------------

    def _check_multiplicative(self) -> CheckReport:
        name = "multiplicative"
        kernel = self.kernel
        pairs = dim_object_pairs(kernel.source_size, self.rng(name))
        return first_failure(name, (check_multiplicative(kernel, f, g) for f, g in pairs), "pairs")

    def _check_adjunction(self) -> CheckReport:
        name = "adjunction-triangles"
        kernel = self.kernel
        rng = self.rng(name)

        def reports():
            for f in self.morphism_objects(rng):
                yield check_triangles(kernel, f, random_mat_object(rng, kernel.grid_shape, 1))
                yield check_unit_split_mono(kernel, f)
                yield check_round_trip(kernel, f)

        return first_failure(name, reports(), "identities")

    def _check_star_preserved(self) -> CheckReport:
        name = "star-preserved"
        kernel = self.kernel
        rng = self.rng(name)
        objects = self.sample_objects(rng)
        first = check_star_preserved(kernel, objects[0])
        if first.verdict == Verdict.NOT_APPLICABLE:
            return first

        def reports():
            for f in objects:
                yield check_star_preserved(kernel, f)
            if isinstance(kernel, SchemeKernel):
                entries = config.PROPERTY_TESTING["morphism_entries"]
                for f in self.morphism_objects(rng):
                    g = random_dim_object(rng, kernel.source_size, config.PROPERTY_TESTING["morphism_max_dim"])
                    yield check_star_preserved_morphism(kernel, random_morphism(rng, f, g, entries))

        return first_failure(name, reports(), "objects and morphisms")

    def _check_regular_closure(self) -> CheckReport:
        name = "regular-closure"
        return check_regular_closure(
            self.kernel, self.rng(name), trials=config.PROPERTY_TESTING["morphism_trials"], name=name
        )

    def _check_wiener_round_trip(self) -> CheckReport:
        name = "wiener-round-trip"
        kernel = self.kernel
        objects = self.sample_objects(self.rng(name))
        return first_failure(name, (check_wiener_round_trip(kernel, f) for f in objects), "objects")

    def _check_dual_comparison(self) -> CheckReport:
        name = "dual-comparison"
        kernel = self.kernel
        rng = self.rng(name)
        objects = self.morphism_objects(rng)
        pairs = zip(objects, objects[1:] + objects[:1])
        return first_failure(name, (dual_comparison(kernel, f, g) for f, g in pairs), "pairs")
