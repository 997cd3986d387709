"""
Discrete kernels and the transform they generate

A kernel is a table of non-negative multiplicities K(a, c) between source indices a
and target cells c. The transform and its right adjoint are

    K^(f)(c) = (+)_a f(a) (x) k^K(a,c)      basis: a ascending, f(a)-basis major, copy minor
    Kv(F)(a) = (+)_c F(c)^K(a,c)            basis: c row-major, copy major, F(c)-basis minor

For the scheme kernel K(s,(x,y)) = [(x,y) in s]; for the Cayley kernel K(x,(y,z)) = N(x,y,z).
"""
import logging
from abc import ABC, abstractmethod
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from exactlin import Mat, direct_sum, dual, kron
from fusion.ring import FusionRing
from scheme.association import AssociationScheme, intersection_numbers
from scheme.tensor import IntersectionTensor
from transform.objects import Cell, DimObject, MatMorphismFamily, MatObject, MorphismFamily

logger = logging.getLogger(__name__)


class KernelError(ValueError):
    """Index or grid mismatch between a kernel and its arguments, or a failed precondition"""


class DiscreteKernel(ABC):
    """Multiplicity table K(a, c) plus the convolution data of the source"""

    def __init__(self, table: np.ndarray, tensor: IntersectionTensor, involution: Sequence[int], unit: int):
        table = np.array(table, dtype=object)
        if table.ndim != 3:
            raise KernelError(f"kernel table must be (source, rows, cols), got shape {table.shape}")
        if tensor.m != table.shape[0]:
            raise KernelError(f"tensor has {tensor.m} indices, kernel has {table.shape[0]}")
        table.flags.writeable = False
        self.table = table
        self.tensor = tensor
        self.involution = tuple(involution)
        self.unit = unit

    @property
    def source_size(self) -> int:
        return self.table.shape[0]

    @property
    def grid_shape(self) -> Tuple[int, int]:
        return self.table.shape[1], self.table.shape[2]

    def cells(self) -> List[Cell]:
        rows, cols = self.grid_shape
        return [(u, v) for u in range(rows) for v in range(cols)]

    def K(self, a: int, cell: Cell) -> int:
        return self.table[a, cell[0], cell[1]]

    def support(self, a: int) -> List[Cell]:
        return [c for c in self.cells() if self.K(a, c)]

    @abstractmethod
    def compose(self, F: MatObject, G: MatObject) -> MatObject:
        """Monoidal product of the target category"""

    def check_source(self, f: DimObject) -> None:
        if f.size != self.source_size:
            raise KernelError(f"object has {f.size} indices, kernel source has {self.source_size}")

    def check_grid(self, F: MatObject) -> None:
        if F.shape != self.grid_shape:
            raise KernelError(f"grid {F.shape} does not match kernel grid {self.grid_shape}")


class SchemeKernel(DiscreteKernel):
    """K(s, x, y) = 1 iff (x, y) in s"""

    def __init__(
        self,
        scheme: AssociationScheme,
        tensor: Optional[IntersectionTensor] = None,
        membership: Optional[np.ndarray] = None,
    ):
        self.scheme = scheme
        if membership is None:
            membership = np.array(scheme.adjacency, dtype=object)
        super().__init__(
            membership,
            tensor if tensor is not None else intersection_numbers(scheme),
            scheme.involution,
            scheme.diagonal_class,
        )

    def is_partition(self) -> Optional[Cell]:
        """First cell not covered by exactly one class, or None"""
        counts = self.table.sum(axis=0)
        for c in self.cells():
            if counts[c] != 1:
                return c
        return None

    def compose(self, F: MatObject, G: MatObject) -> MatObject:
        """(F o G)(x,y) = sum_z F(x,z) G(z,y)"""
        self.check_grid(F)
        self.check_grid(G)
        return MatObject(np.dot(F.dims, G.dims))


class FusionKernel(DiscreteKernel):
    """Cayley kernel K(x, (y, z)) = N(x, y, z)"""

    def __init__(self, ring: FusionRing, tensor: Optional[IntersectionTensor] = None):
        self.ring = ring
        super().__init__(ring.tensor.values, tensor if tensor is not None else ring.tensor, ring.dual, ring.unit)

    def compose(self, F: MatObject, G: MatObject) -> MatObject:
        """Profunctor composition (F o G)(y,z) = sum_u G(y,u) F(u,z).

        From the proassociativity bijection, N_y . N_x = sum_u N(x,y,u) N_u, so
        K^(f (x) g) = K^(g) . K^(f) as matrices; this order makes K^ multiplicative.
        """
        self.check_grid(F)
        self.check_grid(G)
        return MatObject(np.dot(G.dims, F.dims))


Kernel = Union[SchemeKernel, FusionKernel]


def _khat_offset(kernel: DiscreteKernel, f: DimObject, a: int, cell: Cell) -> int:
    return sum(f[b] * kernel.K(b, cell) for b in range(a))


def _kcheck_offset(kernel: DiscreteKernel, F: MatObject, a: int, cell: Cell) -> int:
    total = 0
    for c in kernel.cells():
        if c == cell:
            return total
        total += kernel.K(a, c) * F[c]
    raise KernelError(f"cell {cell} outside the kernel grid")


def khat(kernel: DiscreteKernel, obj: Union[DimObject, MorphismFamily]) -> Union[MatObject, MatMorphismFamily]:
    """The transform on objects, or on morphisms when given a MorphismFamily"""
    if isinstance(obj, MorphismFamily):
        return khat_morphism(kernel, obj)
    kernel.check_source(obj)
    return MatObject(np.tensordot(obj.array, kernel.table, axes=([0], [0])))


def cayley_khat(kernel: FusionKernel, obj: Union[DimObject, MorphismFamily]):
    """K^(f)(y,z) = sum_x f(x) N(x,y,z), the representation functor of a fusion ring"""
    if not isinstance(kernel, FusionKernel):
        raise KernelError("cayley_khat needs a fusion kernel")
    return khat(kernel, obj)


def khat_morphism(kernel: DiscreteKernel, alpha: MorphismFamily) -> MatMorphismFamily:
    """Cell c gets (+)_a kron(alpha_a, I_K(a,c))"""
    kernel.check_source(alpha.source)
    source, target = khat(kernel, alpha.source), khat(kernel, alpha.target)
    rows, cols = kernel.grid_shape
    mats = tuple(
        tuple(
            direct_sum(*(kron(alpha[a], Mat.identity(kernel.K(a, (u, v)))) for a in range(kernel.source_size)))
            for v in range(cols)
        )
        for u in range(rows)
    )
    return MatMorphismFamily(source, target, mats)


def kcheck(kernel: DiscreteKernel, F: MatObject) -> DimObject:
    """Right adjoint on objects: Kv(F)(a) = sum_c K(a,c) F(c)"""
    kernel.check_grid(F)
    return DimObject(tuple(int(v) for v in np.tensordot(kernel.table, F.dims, axes=([1, 2], [0, 1]))))


def cayley_kcheck(kernel: FusionKernel, F: MatObject) -> DimObject:
    if not isinstance(kernel, FusionKernel):
        raise KernelError("cayley_kcheck needs a fusion kernel")
    return kcheck(kernel, F)


def kcheck_morphism(kernel: DiscreteKernel, beta: MatMorphismFamily) -> MorphismFamily:
    """Index a gets (+)_c kron(I_K(a,c), beta_c), cells row-major"""
    kernel.check_grid(beta.source)
    source, target = kcheck(kernel, beta.source), kcheck(kernel, beta.target)
    mats = tuple(
        direct_sum(*(kron(Mat.identity(kernel.K(a, c)), beta[c]) for c in kernel.cells()))
        for a in range(kernel.source_size)
    )
    return MorphismFamily(source, target, mats)


def unit_eta(kernel: DiscreteKernel, f: DimObject) -> MorphismFamily:
    """eta_f: f -> Kv K^(f), the diagonal into every copy of f(a) inside K^(f)"""
    kernel.check_source(f)
    F = khat(kernel, f)
    round_trip = kcheck(kernel, F)
    mats = []
    for a in range(kernel.source_size):
        entries = np.zeros((round_trip[a], f[a]), dtype=object)
        for c in kernel.support(a):
            k = kernel.K(a, c)
            base = _kcheck_offset(kernel, F, a, c)
            inner = _khat_offset(kernel, f, a, c)
            for copy in range(k):
                for i in range(f[a]):
                    entries[base + copy * F[c] + inner + i * k + copy, i] = 1
        mats.append(Mat(entries))
    return MorphismFamily(f, round_trip, tuple(mats))


def counit_eps(kernel: DiscreteKernel, F: MatObject) -> MatMorphismFamily:
    """eps_F: K^ Kv(F) -> F, evaluating each copy at its own cell"""
    kernel.check_grid(F)
    G = kcheck(kernel, F)
    source = khat(kernel, G)
    rows, cols = F.shape
    grid: List[List[Mat]] = [[None] * cols for _ in range(rows)]
    for c in kernel.cells():
        entries = np.zeros((F[c], source[c]), dtype=object)
        for a in range(kernel.source_size):
            k = kernel.K(a, c)
            outer = _khat_offset(kernel, G, a, c)
            base = _kcheck_offset(kernel, F, a, c)
            for copy in range(k):
                for j in range(F[c]):
                    i = base + copy * F[c] + j
                    entries[j, outer + i * k + copy] = 1
        grid[c[0]][c[1]] = Mat(entries)
    return MatMorphismFamily(source, F, tuple(tuple(row) for row in grid))


def unit_left_inverse(kernel: DiscreteKernel, f: DimObject, a: int) -> Optional[Mat]:
    """A coordinate projection p with p . eta_a = I, or None if a has empty support"""
    support = kernel.support(a)
    if not support:
        return None
    F = khat(kernel, f)
    round_trip = kcheck(kernel, F)
    c = support[0]
    k = kernel.K(a, c)
    base = _kcheck_offset(kernel, F, a, c)
    inner = _khat_offset(kernel, f, a, c)
    entries = np.zeros((f[a], round_trip[a]), dtype=object)
    for i in range(f[a]):
        entries[i, base + inner + i * k] = 1
    return Mat(entries)


def convolve(tensor: IntersectionTensor, f: DimObject, g: DimObject) -> DimObject:
    """(f (x) g)(r) = sum_{s,t} N(s,t,r) f(s) g(t)"""
    if f.size != tensor.m or g.size != tensor.m:
        raise KernelError(f"objects of sizes {f.size}, {g.size} against a tensor on {tensor.m} indices")
    dims = np.tensordot(np.outer(f.array, g.array), tensor.values, axes=([0, 1], [0, 1]))
    return DimObject(tuple(int(v) for v in dims))


def convolve_morphism(tensor: IntersectionTensor, alpha: MorphismFamily, beta: MorphismFamily) -> MorphismFamily:
    """Index r gets (+)_{(s,t) lexicographic} kron(kron(alpha_s, beta_t), I_N(s,t,r))"""
    source = convolve(tensor, alpha.source, beta.source)
    target = convolve(tensor, alpha.target, beta.target)
    m = tensor.m
    mats = tuple(
        direct_sum(*(
            kron(kron(alpha[s], beta[t]), Mat.identity(tensor(s, t, r)))
            for s in range(m) for t in range(m)
        ))
        for r in range(m)
    )
    return MorphismFamily(source, target, mats)


def mat_compose(kernel: DiscreteKernel, F: MatObject, G: MatObject) -> MatObject:
    """Target-side monoidal product in the kernel's convention"""
    return kernel.compose(F, G)


def star_source(kernel: DiscreteKernel, f: DimObject) -> DimObject:
    """f*(a) = f(a*)* (dimensions only)"""
    kernel.check_source(f)
    return DimObject(tuple(f[kernel.involution[a]] for a in range(f.size)))


def star_source_morphism(kernel: DiscreteKernel, alpha: MorphismFamily) -> MorphismFamily:
    """alpha: f -> g gives alpha*: g* -> f*, (alpha*)_a = dual(alpha_{a*})"""
    mats = tuple(dual(alpha[kernel.involution[a]]) for a in range(alpha.source.size))
    return MorphismFamily(star_source(kernel, alpha.target), star_source(kernel, alpha.source), mats)


def star_target(F: MatObject) -> MatObject:
    """F*(x,y) = F(y,x)*"""
    return F.transpose()


def star_target_morphism(beta: MatMorphismFamily) -> MatMorphismFamily:
    rows, cols = beta.source.shape
    mats = tuple(tuple(dual(beta[(v, u)]) for v in range(rows)) for u in range(cols))
    return MatMorphismFamily(star_target(beta.target), star_target(beta.source), mats)
