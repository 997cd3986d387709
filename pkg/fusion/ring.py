"""
Discrete RCFT fusion data
Finite object set with unit, dual involution and fusion multiplicities N(x,y,z),
where N(x,y,z) is the multiplicity of z in x (x) y
"""
import logging
from dataclasses import dataclass
from typing import Any, Dict, Optional, Sequence, Tuple

import numpy as np

from models import CheckReport
from scheme.tensor import (
    IntersectionTensor,
    check_commutative,
    check_compact,
    check_precompact as check_tensor_precompact,
    check_proassociativity as check_tensor_proassociativity,
    first_mismatch,
)

logger = logging.getLogger(__name__)

HomMap = Tuple[Tuple[int, ...], ...]


class FusionError(ValueError):
    """Fusion data violating a unit law or the dual involution, with a witness"""

    def __init__(self, message: str, witness: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.witness = witness or {}


@dataclass(frozen=True)
class FusionData:
    """Unvalidated fusion data as read from a file or generator"""
    names: Tuple[str, ...]
    unit: int
    dual: Tuple[int, ...]
    tensor: IntersectionTensor


@dataclass(frozen=True)
class FusionRing:
    """Validated fusion data: unit laws hold and the dual is an involution"""
    names: Tuple[str, ...]
    unit: int
    dual: Tuple[int, ...]
    tensor: IntersectionTensor

    @property
    def m(self) -> int:
        return len(self.names)

    def N(self, x: int, y: int, z: int) -> int:
        return self.tensor(x, y, z)

    def index(self, name: str) -> int:
        return self.names.index(name)


@dataclass(frozen=True, eq=False)
class FusionMatrices:
    """(N_x)_{y,z} = N(x,y,z) for every object x"""
    matrices: Tuple[np.ndarray, ...]

    def __getitem__(self, x: int) -> np.ndarray:
        return self.matrices[x]

    def __len__(self) -> int:
        return len(self.matrices)


def validate_fusion(data: FusionData) -> FusionRing:
    """Check the dual involution and the unit laws; return the ring"""
    m = len(data.names)
    if data.tensor.m != m:
        raise FusionError(f"tensor is {data.tensor.m}-dimensional but there are {m} objects")
    if not 0 <= data.unit < m:
        raise FusionError(f"unit index {data.unit} out of range")
    if len(data.dual) != m or any(not 0 <= d < m for d in data.dual):
        raise FusionError("dual must map every object to an object")
    for x in range(m):
        if data.dual[data.dual[x]] != x:
            raise FusionError(
                f"dual is not involutive at {data.names[x]}",
                {"x": x, "dual": data.dual[x], "dual_of_dual": data.dual[data.dual[x]]},
            )
    identity = np.eye(m, dtype=int).astype(object)
    values = data.tensor.values
    index = first_mismatch(values[data.unit], identity)
    if index is not None:
        y, z = index
        raise FusionError(
            f"left unit law fails at ({data.names[y]},{data.names[z]}): "
            f"N(unit,{data.names[y]},{data.names[z]}) = {values[data.unit, y, z]}",
            {"law": "lambda", "y": y, "z": z, "lhs": int(values[data.unit, y, z]), "rhs": int(identity[y, z])},
        )
    index = first_mismatch(values[:, data.unit, :], identity)
    if index is not None:
        x, z = index
        raise FusionError(
            f"right unit law fails at ({data.names[x]},{data.names[z]}): "
            f"N({data.names[x]},unit,{data.names[z]}) = {values[x, data.unit, z]}",
            {"law": "rho", "x": x, "z": z, "lhs": int(values[x, data.unit, z]), "rhs": int(identity[x, z])},
        )
    logger.info(f"validated fusion ring with {m} objects")
    return FusionRing(names=data.names, unit=data.unit, dual=data.dual, tensor=data.tensor)


def check_proassociativity(ring: FusionRing) -> CheckReport:
    """sum_u N(x,y,u)N(u,z,v) = sum_u N(x,u,v)N(y,z,u) for all x,y,z,v"""
    return check_tensor_proassociativity(ring.tensor, labels=("x", "y", "z", "v"))


def fusion_matrices(ring: FusionRing) -> FusionMatrices:
    return FusionMatrices(tuple(ring.tensor.matrix(x) for x in range(ring.m)))


def check_fusion_algebra(ring: FusionRing, name: str = "fusion-algebra") -> CheckReport:
    """Matrix form of proassociativity: N_y . N_x = sum_u N(x,y,u) N_u"""
    mats = fusion_matrices(ring)
    stacked = np.stack(mats.matrices)
    if first_mismatch(mats[ring.unit], np.eye(ring.m, dtype=int).astype(object)) is not None:
        return CheckReport.failed(name, {"x": ring.unit, "lhs": "N_unit", "rhs": "identity"},
                                  detail="fusion matrix of the unit is not the identity")
    for x in range(ring.m):
        for y in range(ring.m):
            lhs = np.dot(mats[y], mats[x])
            rhs = np.tensordot(ring.tensor.values[x, y], stacked, axes=([0], [0]))
            index = first_mismatch(lhs, rhs)
            if index is not None:
                z, v = index
                return CheckReport.failed(
                    name, {"x": x, "y": y, "z": z, "v": v, "lhs": int(lhs[index]), "rhs": int(rhs[index])}
                )
    return CheckReport.passed(name)


def check_cyclic(ring: FusionRing) -> CheckReport:
    """N(x,y,z*) = N(y,z,x*) for all triples"""
    return check_compact(ring.tensor, ring.dual, labels=("x", "y", "z"), name="cyclic")


def check_braiding(ring: FusionRing) -> CheckReport:
    """N(x,y,z) = N(y,x,z) for all triples"""
    return check_commutative(ring.tensor, labels=("x", "y", "z"), name="braiding")


def check_precompact(ring: FusionRing) -> CheckReport:
    return check_tensor_precompact(ring.tensor, ring.dual, ring.unit, labels=("x", "y", "z"))


def check_unit_self_dual(ring: FusionRing, name: str = "unit-dual") -> CheckReport:
    if ring.dual[ring.unit] == ring.unit:
        return CheckReport.passed(name)
    return CheckReport.failed(name, {"x": ring.unit, "lhs": ring.dual[ring.unit], "rhs": ring.unit})


def check_dual_pairing(ring: FusionRing, name: str = "fusion-tensor") -> CheckReport:
    """x (x) y contains the unit exactly once when y = x*, and not at all otherwise"""
    pairing = ring.tensor.values[:, :, ring.unit]
    expected = np.zeros((ring.m, ring.m), dtype=object)
    for x in range(ring.m):
        expected[x, ring.dual[x]] = 1
    index = first_mismatch(pairing, expected)
    if index is None:
        return CheckReport.passed(name)
    x, y = index
    return CheckReport.failed(name, {"x": x, "y": y, "z": ring.unit, "lhs": int(pairing[index]), "rhs": int(expected[index])})


def is_closed(ring: FusionRing) -> Optional[HomMap]:
    """hom[y][z] = the unique x with N(x,y,z) = 1, or None when some (y,z) has no such x"""
    hom = []
    for y in range(ring.m):
        row = []
        for z in range(ring.m):
            column = ring.tensor.values[:, y, z]
            support = [x for x in range(ring.m) if column[x]]
            if len(support) != 1 or column[support[0]] != 1:
                logger.debug(f"not closed at ({ring.names[y]},{ring.names[z]}): support {support}")
                return None
            row.append(support[0])
        hom.append(tuple(row))
    return tuple(hom)


def format_fusion(ring: FusionRing) -> str:
    """Render a ring in the fusion v1 text format"""
    lines = ["fusion v1", "objects " + " ".join(ring.names), f"unit {ring.names[ring.unit]}"]
    lines += [f"dual {ring.names[x]} {ring.names[ring.dual[x]]}" for x in range(ring.m)]
    lines += [
        f"N {ring.names[x]} {ring.names[y]} {ring.names[z]} {value}"
        for x, y, z, value in ring.tensor.nonzero()
    ]
    return "\n".join(lines) + "\n"


def build_fusion_data(
    names: Sequence[str], unit: int, dual: Sequence[int], entries: Dict[Tuple[int, int, int], int]
) -> FusionData:
    """Fusion data from sparse nonzero entries"""
    m = len(names)
    values = np.zeros((m, m, m), dtype=object)
    for index, value in entries.items():
        values[index] = value
    return FusionData(names=tuple(names), unit=unit, dual=tuple(dual), tensor=IntersectionTensor(values))
