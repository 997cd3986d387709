"""
Multiplicity tensors N(s,t,r) and the identities they are expected to satisfy
Shared by association schemes (intersection numbers) and fusion rings (fusion rules)
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Optional, Sequence, Tuple

import numpy as np

from models import CheckReport

logger = logging.getLogger(__name__)

Labels = Tuple[str, ...]


@dataclass(frozen=True, eq=False)
class IntersectionTensor:
    """Non-negative integer tensor N(s,t,r), indices 0..m-1"""
    values: np.ndarray

    def __post_init__(self):
        arr = np.array(self.values, dtype=object)
        if arr.ndim != 3 or len(set(arr.shape)) != 1:
            raise ValueError(f"tensor must be m x m x m, got shape {arr.shape}")
        for index, value in np.ndenumerate(arr):
            if int(value) != value or value < 0:
                raise ValueError(f"tensor entry {index} = {value} is not a non-negative integer")
            arr[index] = int(value)
        arr.flags.writeable = False
        object.__setattr__(self, "values", arr)

    @classmethod
    def zeros(cls, m: int) -> "IntersectionTensor":
        return cls(np.zeros((m, m, m), dtype=object))

    @property
    def m(self) -> int:
        return self.values.shape[0]

    def __call__(self, s: int, t: int, r: int) -> int:
        return self.values[s, t, r]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntersectionTensor):
            return NotImplemented
        return self.m == other.m and bool(np.all(self.values == other.values))

    def __hash__(self) -> int:
        return hash(tuple(self.values.flat))

    def matrix(self, s: int) -> np.ndarray:
        """The m x m slice (t, r) -> N(s, t, r)"""
        return np.array(self.values[s], dtype=object)

    def nonzero(self):
        """Yield (s, t, r, N) for nonzero entries in index order"""
        for (s, t, r), value in np.ndenumerate(self.values):
            if value:
                yield s, t, r, value


def mutate_tensor(tensor: IntersectionTensor, index: Tuple[int, int, int], delta: int = 1) -> IntersectionTensor:
    """Copy of tensor with one entry shifted by delta"""
    arr = np.array(tensor.values, dtype=object)
    arr[index] = arr[index] + delta
    return IntersectionTensor(arr)


def permute_labels(
    tensor: IntersectionTensor, involution: Sequence[int], perm: Sequence[int]
) -> Tuple[IntersectionTensor, Tuple[int, ...]]:
    """Relabel index i as perm[i] in both the tensor and the involution"""
    m = tensor.m
    arr = np.zeros((m, m, m), dtype=object)
    p = np.array(perm)
    arr[np.ix_(p, p, p)] = tensor.values
    relabelled = [0] * m
    for s in range(m):
        relabelled[perm[s]] = perm[involution[s]]
    return IntersectionTensor(arr), tuple(relabelled)


def first_mismatch(lhs: np.ndarray, rhs: np.ndarray) -> Optional[Tuple[int, ...]]:
    """Lexicographically smallest index where two equally shaped arrays differ"""
    diff = np.argwhere(np.asarray(lhs != rhs, dtype=bool))
    if len(diff) == 0:
        return None
    return tuple(int(i) for i in diff[0])


def _witness(labels: Labels, index: Tuple[int, ...], lhs: Any, rhs: Any) -> Dict[str, Any]:
    witness: Dict[str, Any] = {label: value for label, value in zip(labels, index)}
    witness["lhs"] = _jsonable(lhs)
    witness["rhs"] = _jsonable(rhs)
    return witness


def _jsonable(value: Any) -> Any:
    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else int(value)
    return int(value)


def proassociativity_sides(tensor: IntersectionTensor) -> Tuple[np.ndarray, np.ndarray]:
    """Both sides of sum_x N(s,t,x)N(x,r,u) = sum_x N(s,x,u)N(t,r,x), indexed [s,t,r,u]"""
    n = tensor.values
    lhs = np.tensordot(n, n, axes=([2], [0]))
    rhs = np.transpose(np.tensordot(n, n, axes=([1], [2])), (0, 2, 3, 1))
    return lhs, rhs


def check_proassociativity(
    tensor: IntersectionTensor, labels: Labels = ("s", "t", "r", "u"), name: str = "proassociativity"
) -> CheckReport:
    lhs, rhs = proassociativity_sides(tensor)
    index = first_mismatch(lhs, rhs)
    if index is None:
        return CheckReport.passed(name)
    logger.debug(f"{name} fails at {index}: {lhs[index]} != {rhs[index]}")
    return CheckReport.failed(name, _witness(labels, index, lhs[index], rhs[index]))


def check_precompact(
    tensor: IntersectionTensor,
    involution: Sequence[int],
    unit: int = 0,
    labels: Labels = ("s", "t", "r"),
    name: str = "precompact",
) -> CheckReport:
    """N(s,t,r) = N(t*,s*,r*) for all triples, and the unit is fixed by the involution"""
    inv = np.array(involution)
    if involution[unit] != unit:
        return CheckReport.failed(name, {"unit": unit, "lhs": unit, "rhs": int(involution[unit])},
                                  detail="unit is not self-dual")
    rhs = np.transpose(tensor.values[np.ix_(inv, inv, inv)], (1, 0, 2))
    index = first_mismatch(tensor.values, rhs)
    if index is None:
        return CheckReport.passed(name)
    return CheckReport.failed(name, _witness(labels, index, tensor.values[index], rhs[index]))


def check_compact(
    tensor: IntersectionTensor,
    involution: Sequence[int],
    labels: Labels = ("s", "t", "r"),
    name: str = "compact",
) -> CheckReport:
    """Cyclic relation N(s,t,r*) = N(t,r,s*) for all triples"""
    inv = np.array(involution)
    starred = tensor.values[:, :, inv]
    rhs = np.transpose(starred, (2, 0, 1))
    index = first_mismatch(starred, rhs)
    if index is None:
        return CheckReport.passed(name)
    return CheckReport.failed(name, _witness(labels, index, starred[index], rhs[index]))


def check_compact_weighted(
    tensor: IntersectionTensor,
    involution: Sequence[int],
    valencies: Sequence[Fraction],
    labels: Labels = ("s", "t", "r"),
    name: str = "compact-weighted",
) -> CheckReport:
    """
    k_r N(s,t,r*) = k_s N(t,r,s*) for all triples

    Both sides count the triangles x -s-> z -t-> y -r-> x per point, so this holds
    in every scheme; the unweighted cyclic relation only where the valencies agree.
    """
    k = np.array([Fraction(v) for v in valencies], dtype=object)
    inv = np.array(involution)
    starred = tensor.values[:, :, inv]
    lhs = starred * k[np.newaxis, np.newaxis, :]
    rhs = np.transpose(starred, (2, 0, 1)) * k[:, np.newaxis, np.newaxis]
    index = first_mismatch(lhs, rhs)
    if index is None:
        return CheckReport.passed(name)
    return CheckReport.failed(name, _witness(labels, index, lhs[index], rhs[index]))


def check_commutative(
    tensor: IntersectionTensor, labels: Labels = ("s", "t", "r"), name: str = "braiding"
) -> CheckReport:
    """N(s,t,r) = N(t,s,r) for all triples"""
    rhs = np.transpose(tensor.values, (1, 0, 2))
    index = first_mismatch(tensor.values, rhs)
    if index is None:
        return CheckReport.passed(name)
    return CheckReport.failed(name, _witness(labels, index, tensor.values[index], rhs[index]))


def check_prounit_laws(
    tensor: IntersectionTensor, unit: int, labels: Labels = ("s", "t", "r"), name: str = "prounit-laws"
) -> CheckReport:
    """N(unit,t,r) = delta(t,r) and N(s,unit,r) = delta(s,r)"""
    identity = np.eye(tensor.m, dtype=int).astype(object)
    left = tensor.values[unit, :, :]
    index = first_mismatch(left, identity)
    if index is not None:
        return CheckReport.failed(
            name, _witness(labels, (unit,) + index, left[index], identity[index]), detail="left unit law"
        )
    right = tensor.values[:, unit, :]
    index = first_mismatch(right, identity)
    if index is not None:
        s, r = index
        return CheckReport.failed(
            name, _witness(labels, (s, unit, r), right[index], identity[index]), detail="right unit law"
        )
    return CheckReport.passed(name)


def check_valency_identity(
    tensor: IntersectionTensor, valencies: Sequence[Fraction], name: str = "valency"
) -> CheckReport:
    """sum_r N(s,t,r) k_r = k_s k_t"""
    k = np.array([Fraction(v) for v in valencies], dtype=object)
    lhs = np.dot(tensor.values, k)
    rhs = np.outer(k, k)
    index = first_mismatch(lhs, rhs)
    if index is None:
        return CheckReport.passed(name)
    return CheckReport.failed(name, _witness(("s", "t"), index, lhs[index], rhs[index]))
