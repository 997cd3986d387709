"""
Dense exact-rational matrices
Row-major numpy object arrays of Fraction; no floating point anywhere
"""
import logging
from fractions import Fraction
from numbers import Rational
from typing import Iterable, List, Sequence, Tuple, Union

import numpy as np

logger = logging.getLogger(__name__)

Scalar = Fraction
ScalarLike = Union[int, Fraction, str]


class ShapeError(ValueError):
    """Raised when matrix shapes are incompatible"""


class SingularMatrixError(ValueError):
    """Raised when inverting a matrix that is not invertible"""


def to_scalar(value: ScalarLike) -> Fraction:
    """Coerce an int, Fraction or rational literal to an exact Fraction"""
    if isinstance(value, bool):
        return Fraction(int(value))
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"refusing non-exact scalar {value!r} of type {type(value).__name__}")


def parse_rational(token: str) -> Fraction:
    """Parse 'p', 'p/q' or a decimal literal such as '0.25' exactly"""
    try:
        return Fraction(token.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"not a rational literal: {token!r}") from e


def _object_array(rows: int, cols: int) -> np.ndarray:
    arr = np.empty((rows, cols), dtype=object)
    arr[...] = Fraction(0)
    return arr


class Mat:
    """Immutable rows x cols matrix over the rationals"""

    __slots__ = ("_entries",)

    def __init__(self, entries: np.ndarray):
        if entries.ndim != 2:
            raise ShapeError(f"matrix entries must be 2-dimensional, got shape {entries.shape}")
        arr = _object_array(*entries.shape)
        for index, value in np.ndenumerate(entries):
            arr[index] = to_scalar(value)
        arr.flags.writeable = False
        self._entries = arr

    @classmethod
    def _wrap(cls, arr: np.ndarray) -> "Mat":
        # arr already holds Fractions and is not shared
        mat = cls.__new__(cls)
        arr.flags.writeable = False
        mat._entries = arr
        return mat

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[ScalarLike]], cols: int = None) -> "Mat":
        if not rows:
            return cls.zeros(0, cols or 0)
        width = len(rows[0])
        if cols is not None and cols != width:
            raise ShapeError(f"expected {cols} columns, row 0 has {width}")
        arr = _object_array(len(rows), width)
        for i, row in enumerate(rows):
            if len(row) != width:
                raise ShapeError(f"ragged rows: row {i} has {len(row)} entries, expected {width}")
            for j, value in enumerate(row):
                arr[i, j] = to_scalar(value)
        return cls._wrap(arr)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Mat":
        if rows < 0 or cols < 0:
            raise ShapeError(f"negative shape {rows}x{cols}")
        return cls._wrap(_object_array(rows, cols))

    @classmethod
    def identity(cls, n: int) -> "Mat":
        arr = _object_array(n, n)
        for i in range(n):
            arr[i, i] = Fraction(1)
        return cls._wrap(arr)

    @classmethod
    def scalar(cls, value: ScalarLike) -> "Mat":
        return cls.from_rows([[value]])

    @property
    def rows(self) -> int:
        return self._entries.shape[0]

    @property
    def cols(self) -> int:
        return self._entries.shape[1]

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def entries(self) -> np.ndarray:
        """Read-only view of the underlying object array"""
        return self._entries

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        return self._entries[index]

    def tolist(self) -> List[List[Fraction]]:
        return [list(row) for row in self._entries]

    def __matmul__(self, other: "Mat") -> "Mat":
        return mat_mul(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Mat):
            return NotImplemented
        return self.shape == other.shape and bool(np.all(self._entries == other._entries))

    def __hash__(self) -> int:
        return hash((self.shape, tuple(self._entries.flat)))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(v) for v in row) for row in self._entries)
        return f"Mat({self.rows}x{self.cols}: [{body}])"


def mat_mul(a: Mat, b: Mat) -> Mat:
    """Exact matrix product a . b"""
    if a.cols != b.rows:
        raise ShapeError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    if a.cols == 0 or a.rows == 0 or b.cols == 0:
        return Mat.zeros(a.rows, b.cols)
    return Mat._wrap(np.array(a.entries @ b.entries, dtype=object))


def mat_add(a: Mat, b: Mat) -> Mat:
    if a.shape != b.shape:
        raise ShapeError(f"cannot add {a.rows}x{a.cols} and {b.rows}x{b.cols}")
    if a.rows == 0 or a.cols == 0:
        return Mat.zeros(*a.shape)
    return Mat._wrap(np.array(a.entries + b.entries, dtype=object))


def scale(a: Mat, k: ScalarLike) -> Mat:
    k = to_scalar(k)
    if a.rows == 0 or a.cols == 0:
        return Mat.zeros(*a.shape)
    return Mat._wrap(np.array(a.entries * k, dtype=object))


def kron(a: Mat, b: Mat) -> Mat:
    """Kronecker product, a-index major"""
    rows, cols = a.rows * b.rows, a.cols * b.cols
    if rows == 0 or cols == 0:
        return Mat.zeros(rows, cols)
    return Mat._wrap(np.array(np.kron(a.entries, b.entries), dtype=object).reshape(rows, cols))


def direct_sum(*blocks: Mat) -> Mat:
    """Block-diagonal matrix diag(blocks...)"""
    rows = sum(block.rows for block in blocks)
    cols = sum(block.cols for block in blocks)
    arr = _object_array(rows, cols)
    r = c = 0
    for block in blocks:
        arr[r:r + block.rows, c:c + block.cols] = block.entries
        r += block.rows
        c += block.cols
    return Mat._wrap(arr)


def vstack(blocks: Iterable[Mat], cols: int) -> Mat:
    """Stack blocks vertically; cols fixes the width when there are no rows"""
    blocks = list(blocks)
    for block in blocks:
        if block.cols != cols:
            raise ShapeError(f"vstack width mismatch: {block.rows}x{block.cols} against {cols} columns")
    rows = sum(block.rows for block in blocks)
    arr = _object_array(rows, cols)
    r = 0
    for block in blocks:
        arr[r:r + block.rows, :] = block.entries
        r += block.rows
    return Mat._wrap(arr)


def hstack(blocks: Iterable[Mat], rows: int) -> Mat:
    """Stack blocks horizontally; rows fixes the height when there are no columns"""
    return dual(vstack((dual(block) for block in blocks), rows))


def dual(a: Mat) -> Mat:
    """Linear dual of a map in chosen bases: the transpose"""
    return Mat._wrap(np.array(a.entries.T, dtype=object).reshape(a.cols, a.rows))


def _row_reduce(a: Mat) -> Tuple[List[List[Fraction]], List[int]]:
    """Reduced row echelon form and pivot columns"""
    m = a.tolist()
    pivots: List[int] = []
    row = 0
    for col in range(a.cols):
        pivot = next((r for r in range(row, a.rows) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        lead = m[row][col]
        m[row] = [v / lead for v in m[row]]
        for r in range(a.rows):
            if r != row and m[r][col] != 0:
                factor = m[r][col]
                m[r] = [v - factor * w for v, w in zip(m[r], m[row])]
        pivots.append(col)
        row += 1
        if row == a.rows:
            break
    return m, pivots


def rank(a: Mat) -> int:
    return len(_row_reduce(a)[1])


def is_iso(a: Mat) -> bool:
    """True iff a is square with full rank over Q"""
    return a.is_square and rank(a) == a.rows


def inverse(a: Mat) -> Mat:
    """Exact inverse by Gauss-Jordan elimination on [a | I]"""
    if not a.is_square:
        raise ShapeError(f"cannot invert non-square {a.rows}x{a.cols} matrix")
    n = a.rows
    augmented = hstack([a, Mat.identity(n)], n)
    reduced, pivots = _row_reduce(augmented)
    if pivots[:n] != list(range(n)):
        raise SingularMatrixError(f"{n}x{n} matrix is not invertible")
    return Mat.from_rows([row[n:] for row in reduced], cols=n)
