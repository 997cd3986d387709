"""
Objects and morphisms of the source and target functor categories
Source: dimension vectors over class/object indices. Target: dimension grids over cells.
"""
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence, Tuple

import numpy as np

from exactlin import Mat, ShapeError, mat_mul

Cell = Tuple[int, int]


def _dims(values: Sequence[int]) -> Tuple[int, ...]:
    dims = tuple(int(v) for v in values)
    if any(d < 0 for d in dims):
        raise ValueError(f"dimensions must be non-negative, got {dims}")
    return dims


@dataclass(frozen=True)
class DimObject:
    """f: index -> dimension"""
    dims: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "dims", _dims(self.dims))

    @classmethod
    def zeros(cls, size: int) -> "DimObject":
        return cls((0,) * size)

    @classmethod
    def delta(cls, size: int, index: int) -> "DimObject":
        return cls(tuple(int(i == index) for i in range(size)))

    @property
    def size(self) -> int:
        return len(self.dims)

    def __getitem__(self, index: int) -> int:
        return self.dims[index]

    def __iter__(self) -> Iterator[int]:
        return iter(self.dims)

    @cached_property
    def array(self) -> np.ndarray:
        arr = np.array(self.dims, dtype=object)
        arr.flags.writeable = False
        return arr

    def __str__(self) -> str:
        return "(" + ",".join(str(d) for d in self.dims) + ")"


@dataclass(frozen=True, eq=False)
class MorphismFamily:
    """alpha: f -> g, one matrix of shape g(i) x f(i) per index"""
    source: DimObject
    target: DimObject
    mats: Tuple[Mat, ...]

    def __post_init__(self):
        if self.source.size != self.target.size or len(self.mats) != self.source.size:
            raise ShapeError(
                f"morphism family over {len(self.mats)} indices between objects of sizes "
                f"{self.source.size} and {self.target.size}"
            )
        for i, mat in enumerate(self.mats):
            if mat.shape != (self.target[i], self.source[i]):
                raise ShapeError(
                    f"index {i}: matrix is {mat.rows}x{mat.cols}, expected {self.target[i]}x{self.source[i]}"
                )

    @classmethod
    def identity(cls, f: DimObject) -> "MorphismFamily":
        return cls(f, f, tuple(Mat.identity(d) for d in f))

    def __getitem__(self, index: int) -> Mat:
        return self.mats[index]

    def after(self, other: "MorphismFamily") -> "MorphismFamily":
        """self . other"""
        if other.target != self.source:
            raise ShapeError(f"cannot compose: {other.target} is not {self.source}")
        return MorphismFamily(other.source, self.target, tuple(mat_mul(a, b) for a, b in zip(self.mats, other.mats)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MorphismFamily):
            return NotImplemented
        return self.source == other.source and self.target == other.target and self.mats == other.mats

    def __hash__(self) -> int:
        return hash((self.source, self.target, self.mats))


@dataclass(frozen=True, eq=False)
class MatObject:
    """F: cell -> dimension, over a rectangular grid of cells"""
    dims: np.ndarray

    def __post_init__(self):
        arr = np.array(self.dims, dtype=object)
        if arr.ndim != 2:
            raise ValueError(f"dimension grid must be 2-dimensional, got shape {arr.shape}")
        for index, value in np.ndenumerate(arr):
            if int(value) != value or value < 0:
                raise ValueError(f"dimension at {index} must be a non-negative integer, got {value}")
            arr[index] = int(value)
        arr.flags.writeable = False
        object.__setattr__(self, "dims", arr)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "MatObject":
        return cls(np.array([list(row) for row in rows], dtype=object).reshape(len(rows), -1 if rows else 0))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "MatObject":
        return cls(np.zeros((rows, cols), dtype=object))

    @classmethod
    def identity(cls, n: int) -> "MatObject":
        """Unit of matrix composition: 1 on the diagonal, 0 elsewhere"""
        return cls(np.eye(n, dtype=int).astype(object))

    @property
    def shape(self) -> Tuple[int, int]:
        return self.dims.shape

    def __getitem__(self, cell: Cell) -> int:
        return self.dims[cell]

    def cells(self) -> Iterator[Cell]:
        """Cells in row-major order"""
        rows, cols = self.shape
        for u in range(rows):
            for v in range(cols):
                yield (u, v)

    def transpose(self) -> "MatObject":
        return MatObject(np.array(self.dims.T, dtype=object))

    def tolist(self):
        return [[int(v) for v in row] for row in self.dims]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MatObject):
            return NotImplemented
        return self.shape == other.shape and bool(np.all(self.dims == other.dims))

    def __hash__(self) -> int:
        return hash((self.shape, tuple(self.dims.flat)))

    def __repr__(self) -> str:
        return f"MatObject({self.tolist()})"


@dataclass(frozen=True, eq=False)
class MatMorphismFamily:
    """beta: F -> G, one matrix of shape G(c) x F(c) per cell"""
    source: MatObject
    target: MatObject
    mats: Tuple[Tuple[Mat, ...], ...]

    def __post_init__(self):
        if self.source.shape != self.target.shape:
            raise ShapeError(f"grid mismatch: {self.source.shape} against {self.target.shape}")
        rows, cols = self.source.shape
        if len(self.mats) != rows or any(len(row) != cols for row in self.mats):
            raise ShapeError(f"matrix grid does not cover the {rows}x{cols} cells")
        for (u, v) in self.source.cells():
            mat = self.mats[u][v]
            expected = (self.target[u, v], self.source[u, v])
            if mat.shape != expected:
                raise ShapeError(f"cell ({u},{v}): matrix is {mat.rows}x{mat.cols}, expected {expected[0]}x{expected[1]}")

    @classmethod
    def identity(cls, F: MatObject) -> "MatMorphismFamily":
        rows, cols = F.shape
        return cls(F, F, tuple(tuple(Mat.identity(F[u, v]) for v in range(cols)) for u in range(rows)))

    def __getitem__(self, cell: Cell) -> Mat:
        u, v = cell
        return self.mats[u][v]

    def after(self, other: "MatMorphismFamily") -> "MatMorphismFamily":
        """self . other, cell by cell"""
        if other.target != self.source:
            raise ShapeError("cannot compose: target and source grids differ")
        rows, cols = self.source.shape
        mats = tuple(
            tuple(mat_mul(self.mats[u][v], other.mats[u][v]) for v in range(cols)) for u in range(rows)
        )
        return MatMorphismFamily(other.source, self.target, mats)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MatMorphismFamily):
            return NotImplemented
        return self.source == other.source and self.target == other.target and self.mats == other.mats

    def __hash__(self) -> int:
        return hash((self.source, self.target, self.mats))
