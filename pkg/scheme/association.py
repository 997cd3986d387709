"""
Association schemes on a finite point set
Validation, canonical labelling, intersection numbers and the Bose-Mesner identity
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from models import CheckReport
from scheme.tensor import IntersectionTensor

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


class SchemeError(ValueError):
    """A class matrix that is not an association scheme, with a witness"""

    def __init__(self, message: str, witness: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.witness = witness or {}


@dataclass(frozen=True)
class ClassMatrix:
    """Partition of X x X given as cell(x, y) = class index"""
    cells: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        cells = tuple(tuple(int(c) for c in row) for row in self.cells)
        object.__setattr__(self, "cells", cells)
        n = len(cells)
        if n == 0:
            raise SchemeError("class matrix has no rows")
        for x, row in enumerate(cells):
            if len(row) != n:
                raise SchemeError(f"row {x} has {len(row)} entries, expected {n}", {"row": x})
            for y, c in enumerate(row):
                if c < 0:
                    raise SchemeError(f"negative class index at ({x},{y})", {"pair": [x, y]})
        used = {c for row in cells for c in row}
        missing = sorted(set(range(max(used) + 1)) - used)
        if missing:
            raise SchemeError(f"class {missing[0]} is empty", {"class": missing[0]})

    @classmethod
    def from_function(cls, n: int, class_of) -> "ClassMatrix":
        return cls(tuple(tuple(class_of(x, y) for y in range(n)) for x in range(n)))

    @property
    def n(self) -> int:
        return len(self.cells)

    @property
    def m(self) -> int:
        return max(c for row in self.cells for c in row) + 1

    def class_of(self, x: int, y: int) -> int:
        return self.cells[x][y]

    @cached_property
    def array(self) -> np.ndarray:
        arr = np.array(self.cells, dtype=np.int64)
        arr.flags.writeable = False
        return arr


def canonicalize(cm: ClassMatrix) -> ClassMatrix:
    """Relabel classes by first occurrence in a row-major scan"""
    order: Dict[int, int] = {}
    for row in cm.cells:
        for c in row:
            order.setdefault(c, len(order))
    return ClassMatrix(tuple(tuple(order[c] for c in row) for row in cm.cells))


def relabel(cm: ClassMatrix, perm: Sequence[int]) -> ClassMatrix:
    """Rename class c to perm[c]"""
    return ClassMatrix(tuple(tuple(perm[c] for c in row) for row in cm.cells))


@dataclass(frozen=True)
class AssociationScheme:
    """A validated, canonically labelled association scheme (diagonal class 0)"""
    class_matrix: ClassMatrix
    involution: Tuple[int, ...]
    diagonal_class: int = 0

    @property
    def n(self) -> int:
        return self.class_matrix.n

    @property
    def m(self) -> int:
        return self.class_matrix.m

    def class_of(self, x: int, y: int) -> int:
        return self.class_matrix.class_of(x, y)

    @cached_property
    def class_pairs(self) -> Tuple[Tuple[Pair, ...], ...]:
        """Pairs of each class in row-major order"""
        pairs: List[List[Pair]] = [[] for _ in range(self.m)]
        for x in range(self.n):
            for y in range(self.n):
                pairs[self.class_of(x, y)].append((x, y))
        return tuple(tuple(p) for p in pairs)

    @cached_property
    def adjacency(self) -> np.ndarray:
        """0/1 class matrices M_s stacked as an m x n x n int array"""
        arr = np.stack([(self.class_matrix.array == s).astype(np.int64) for s in range(self.m)])
        arr.flags.writeable = False
        return arr

    def class_sizes(self) -> Tuple[int, ...]:
        return tuple(len(p) for p in self.class_pairs)

    def valencies(self) -> Tuple[Fraction, ...]:
        """k_s = |s| / n"""
        return tuple(Fraction(size, self.n) for size in self.class_sizes())


def _check_diagonal(cm: ClassMatrix) -> None:
    diagonal = cm.class_of(0, 0)
    for x in range(cm.n):
        if cm.class_of(x, x) != diagonal:
            raise SchemeError(
                f"diagonal is split: ({x},{x}) is in class {cm.class_of(x, x)}, (0,0) in class {diagonal}",
                {"pair": [x, x], "class": cm.class_of(x, x), "diagonal_class": diagonal},
            )
    for x in range(cm.n):
        for y in range(cm.n):
            if x != y and cm.class_of(x, y) == diagonal:
                raise SchemeError(
                    f"diagonal class also contains off-diagonal pair ({x},{y})",
                    {"pair": [x, y], "diagonal_class": diagonal},
                )


def _compute_involution(cm: ClassMatrix) -> Tuple[int, ...]:
    involution: List[Optional[int]] = [None] * cm.m
    for x in range(cm.n):
        for y in range(cm.n):
            s, reverse = cm.class_of(x, y), cm.class_of(y, x)
            if involution[s] is None:
                involution[s] = reverse
            elif involution[s] != reverse:
                raise SchemeError(
                    f"class {s} is not transpose-closed: reversed pairs fall in classes "
                    f"{involution[s]} and {reverse}",
                    {"class": s, "pair": [x, y], "reverse_class": reverse, "expected_class": involution[s]},
                )
    return tuple(involution)


def validate(cm: ClassMatrix) -> AssociationScheme:
    """Check the scheme axioms and return the canonically labelled scheme"""
    cm = canonicalize(cm)
    _check_diagonal(cm)
    involution = _compute_involution(cm)
    sch = AssociationScheme(class_matrix=cm, involution=involution)
    intersection_numbers(sch)
    logger.info(f"validated scheme on {sch.n} points with {sch.m} classes")
    return sch


def intersection_numbers(sch: AssociationScheme) -> IntersectionTensor:
    """N(s,t,r) counted at one pair of r and verified at every other pair of r"""
    m = sch.m
    adjacency = sch.adjacency
    values = np.zeros((m, m, m), dtype=object)
    for s in range(m):
        for t in range(m):
            counts = adjacency[s] @ adjacency[t]
            for r, pairs in enumerate(sch.class_pairs):
                rows, cols = zip(*pairs)
                found = counts[list(rows), list(cols)]
                representative = int(found[0])
                bad = np.nonzero(found != representative)[0]
                if len(bad):
                    other = pairs[int(bad[0])]
                    raise SchemeError(
                        f"intersection number N({s},{t},{r}) is ill-defined: "
                        f"{representative} at {pairs[0]} but {int(found[bad[0]])} at {other}",
                        {
                            "s": s, "t": t, "r": r,
                            "pair": list(pairs[0]), "count": representative,
                            "other_pair": list(other), "other_count": int(found[bad[0]]),
                        },
                    )
                values[s, t, r] = representative
    return IntersectionTensor(values)


def prounit(sch: AssociationScheme):
    """The prounit J: dimension 1 on the diagonal class, 0 elsewhere"""
    from transform.objects import DimObject

    return DimObject.delta(sch.m, sch.diagonal_class)


def bose_mesner_closure(
    sch: AssociationScheme, tensor: Optional[IntersectionTensor] = None, name: str = "bose-mesner"
) -> CheckReport:
    """M_s M_t = sum_r N(s,t,r) M_r as exact integer matrices"""
    tensor = tensor if tensor is not None else intersection_numbers(sch)
    adjacency = sch.adjacency
    weights = np.array(tensor.values, dtype=np.int64)
    for s in range(sch.m):
        for t in range(sch.m):
            lhs = adjacency[s] @ adjacency[t]
            rhs = np.tensordot(weights[s, t], adjacency, axes=([0], [0]))
            diff = np.argwhere(lhs != rhs)
            if len(diff):
                x, y = (int(i) for i in diff[0])
                return CheckReport.failed(
                    name, {"s": s, "t": t, "x": x, "y": y, "lhs": int(lhs[x, y]), "rhs": int(rhs[x, y])}
                )
    return CheckReport.passed(name)


def format_scheme(cm: ClassMatrix) -> str:
    """Render a class matrix in the scheme v1 text format"""
    width = len(str(cm.m - 1))
    lines = ["scheme v1", f"points {cm.n}", "matrix"]
    lines += [" ".join(str(c).rjust(width) for c in row) for row in cm.cells]
    return "\n".join(lines) + "\n"
