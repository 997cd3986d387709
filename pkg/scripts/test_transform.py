#!/usr/bin/env python3
"""
Tests for the transform: kernels, adjunction, multiplicativity, involutions,
regular morphisms, Wiener membership and the dual comparison
"""

import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

import config
from exactlin import Mat, is_iso
from fusion import FusionRing, build_fusion_data, gen_fibonacci, gen_group_fusion, gen_ising, validate_fusion
from models import Verdict
from scheme import gen_cyclic, gen_group, gen_hamming, intersection_numbers, mutate_tensor, validate
from transform import (
    DimObject,
    FusionKernel,
    KernelError,
    MatObject,
    MorphismFamily,
    RegularityTester,
    ScalarRegularity,
    SchemeKernel,
    cayley_kcheck,
    cayley_khat,
    check_compose_associative,
    check_conservative,
    check_conservative_random,
    check_multiplicative,
    check_regular_closure,
    check_round_trip,
    check_star_preserved,
    check_star_preserved_morphism,
    check_triangles,
    check_unit_split_mono,
    check_wiener_round_trip,
    convolve,
    convolve_morphism,
    counit_eps,
    dual_comparison,
    dual_comparison_maps,
    enumerate_dim_objects,
    is_class_constant,
    is_regular,
    kcheck,
    kcheck_morphism,
    khat,
    khat_morphism,
    mat_compose,
    random_dim_object,
    random_morphism,
    reflects_iso,
    regularity_characterization,
    scalar_family,
    star_source,
    star_target,
    unit_eta,
    wiener_membership,
)


def scheme_kernel(cm) -> SchemeKernel:
    return SchemeKernel(validate(cm))


def c3() -> SchemeKernel:
    return scheme_kernel(gen_cyclic(3))


def ones(size: int) -> DimObject:
    return DimObject((1,) * size)


def s3_fusion() -> FusionRing:
    table = config.S3_CAYLEY_TABLE
    entries = {(x, y, table[x][y]): 1 for x in range(6) for y in range(6)}
    dual = tuple(next(y for y in range(6) if table[x][y] == 0) for x in range(6))
    return validate_fusion(build_fusion_data([str(x) for x in range(6)], 0, dual, entries))


def c3_family(values):
    """Scalar endomorphism of the all-ones C3 grid; unspecified cells get 1"""
    grid = MatObject.from_rows([[1] * 3] * 3)
    return scalar_family(grid, {c: values.get(c, 1) for c in grid.cells()})


# -- transform on objects -------------------------------------------------

def test_khat_on_cyclic_three():
    kernel = c3()
    assert khat(kernel, DimObject((1, 2, 0))).tolist() == [[1, 2, 0], [0, 1, 2], [2, 0, 1]]
    assert khat(kernel, DimObject((1, 0, 0))) == MatObject.identity(3)
    assert khat(kernel, DimObject.zeros(3)) == MatObject.zeros(3, 3)


def test_khat_rejects_wrong_index_set():
    with pytest.raises(KernelError):
        khat(c3(), DimObject((1, 2)))


def test_kcheck_on_cyclic_three():
    kernel = c3()
    assert kcheck(kernel, MatObject.from_rows([[1] * 3] * 3)) == DimObject((3, 3, 3))
    assert kcheck(kernel, khat(kernel, DimObject((1, 2, 0)))) == DimObject((3, 6, 0))
    assert kcheck(kernel, MatObject.zeros(3, 3)) == DimObject.zeros(3)


def test_cayley_transform_on_fibonacci():
    kernel = FusionKernel(gen_fibonacci())
    tau = khat(kernel, DimObject((0, 1)))
    assert tau.tolist() == [[0, 1], [1, 1]]
    assert cayley_khat(kernel, DimObject((1, 1))).tolist() == [[1, 1], [1, 2]]
    assert cayley_khat(kernel, DimObject((1, 0))) == MatObject.identity(2)
    assert cayley_kcheck(kernel, tau) == DimObject((1, 3))
    with pytest.raises(KernelError):
        cayley_khat(c3(), DimObject((1, 0, 0)))


def test_one_object_kcheck():
    kernel = FusionKernel(gen_group_fusion(1))
    assert cayley_kcheck(kernel, MatObject.from_rows([[4]])) == DimObject((4,))


# -- convolution and composition ------------------------------------------

def test_convolution():
    kernel = c3()
    assert convolve(kernel.tensor, DimObject.delta(3, 1), DimObject.delta(3, 1)) == DimObject.delta(3, 2)
    g = DimObject((0, 2, 1))
    assert convolve(kernel.tensor, DimObject.delta(3, 0), g) == g
    fib = gen_fibonacci().tensor
    assert convolve(fib, DimObject((0, 1)), DimObject((0, 1))) == DimObject((1, 1))


def test_convolution_of_identities_is_identity():
    tensor = gen_ising().tensor
    f, g = DimObject((1, 2, 0)), DimObject((0, 1, 1))
    product = convolve_morphism(tensor, MorphismFamily.identity(f), MorphismFamily.identity(g))
    assert product == MorphismFamily.identity(convolve(tensor, f, g))


def test_convolution_block_layout():
    tensor = intersection_numbers(validate(gen_cyclic(2)))
    alpha = MorphismFamily(DimObject((1, 1)), DimObject((1, 1)), (Mat.scalar(2), Mat.scalar(3)))
    shear = Mat.from_rows([[1, 1], [0, 1]])
    beta = MorphismFamily(DimObject((1, 2)), DimObject((1, 2)), (Mat.scalar(5), shear))
    product = convolve_morphism(tensor, alpha, beta)
    # r = 0 collects (0,0), (1,1); r = 1 collects (0,1), (1,0)
    assert product[0] == Mat.from_rows([[10, 0, 0], [0, 3, 3], [0, 0, 3]])
    assert product[1] == Mat.from_rows([[2, 2, 0], [0, 2, 0], [0, 0, 15]])
    # multiplicity two repeats the block
    h22 = intersection_numbers(validate(gen_hamming(2, 2)))
    one = DimObject((0, 1, 0))
    doubled = convolve_morphism(
        h22,
        MorphismFamily(one, one, (Mat.zeros(0, 0), Mat.scalar(2), Mat.zeros(0, 0))),
        MorphismFamily(one, one, (Mat.zeros(0, 0), Mat.scalar(3), Mat.zeros(0, 0))),
    )
    assert doubled[0] == Mat.from_rows([[6, 0], [0, 6]])
    assert doubled[2] == Mat.from_rows([[6, 0], [0, 6]])


def test_convolution_is_functorial_on_s3():
    tensor = intersection_numbers(validate(gen_group(config.S3_CAYLEY_TABLE)))
    rng = np.random.default_rng(config.DEFAULT_SEED)
    entries = config.PROPERTY_TESTING["morphism_entries"]
    for _ in range(10):
        f, g, h, f2, g2, h2 = (random_dim_object(rng, 6, 2) for _ in range(6))
        alpha, alpha2 = random_morphism(rng, f, g, entries), random_morphism(rng, g, h, entries)
        beta, beta2 = random_morphism(rng, f2, g2, entries), random_morphism(rng, g2, h2, entries)
        lhs = convolve_morphism(tensor, alpha2, beta2).after(convolve_morphism(tensor, alpha, beta))
        assert lhs == convolve_morphism(tensor, alpha2.after(alpha), beta2.after(beta))


def test_matrix_composition():
    kernel = c3()
    s1 = khat(kernel, DimObject.delta(3, 1))
    assert mat_compose(kernel, s1, s1) == khat(kernel, DimObject.delta(3, 2))
    assert mat_compose(kernel, MatObject.identity(3), s1) == s1
    fib = FusionKernel(gen_fibonacci())
    tau = khat(fib, DimObject((0, 1)))
    assert mat_compose(fib, tau, tau).tolist() == [[1, 1], [1, 2]]


# -- multiplicativity -----------------------------------------------------

def test_multiplicative_examples():
    assert check_multiplicative(c3(), DimObject((1, 2, 0)), DimObject((0, 1, 1))).verdict == Verdict.PASS
    fib = FusionKernel(gen_fibonacci())
    assert check_multiplicative(fib, DimObject((0, 1)), DimObject((0, 1))).verdict == Verdict.PASS


def test_multiplicative_over_small_vectors():
    kernels = [c3(), scheme_kernel(gen_hamming(2, 2)), FusionKernel(gen_fibonacci()), FusionKernel(gen_ising())]
    for kernel in kernels:
        objects = enumerate_dim_objects(kernel.source_size, (0, 1, 2))
        for f in objects:
            for g in objects:
                assert check_multiplicative(kernel, f, g).verdict == Verdict.PASS


def test_non_commutative_kernels_are_multiplicative():
    rng = np.random.default_rng(config.DEFAULT_SEED)
    for kernel in (scheme_kernel(gen_group(config.S3_CAYLEY_TABLE)), FusionKernel(s3_fusion())):
        for _ in range(20):
            f, g = random_dim_object(rng, 6, 3), random_dim_object(rng, 6, 3)
            assert check_multiplicative(kernel, f, g).verdict == Verdict.PASS


def test_fusion_composition_order_is_frozen():
    # K^(d_x (x) d_y) = K^(d_y) . K^(d_x) as integer matrices; the other order fails in S3
    kernel = FusionKernel(s3_fusion())
    x, y = DimObject.delta(6, 1), DimObject.delta(6, 3)
    F, G = khat(kernel, x), khat(kernel, y)
    product = khat(kernel, convolve(kernel.tensor, x, y))
    assert np.array_equal(np.dot(G.dims, F.dims), product.dims)
    assert not np.array_equal(np.dot(F.dims, G.dims), product.dims)


def test_broken_partition_fails_with_cell():
    sch = validate(gen_cyclic(3))
    membership = np.array(sch.adjacency, dtype=object)
    membership[0, 0, 1] = 1
    kernel = SchemeKernel(sch, membership=membership)
    report = check_multiplicative(kernel, DimObject.delta(3, 1), DimObject.delta(3, 1))
    assert report.verdict == Verdict.FAIL
    assert report.witness["cell"] == [0, 1]
    conservative = check_conservative(kernel)
    assert conservative.verdict == Verdict.FAIL
    assert conservative.witness["cell"] == [0, 1]


def test_compose_is_associative_on_images():
    rng = np.random.default_rng(config.DEFAULT_SEED)
    for kernel in (scheme_kernel(gen_group(config.S3_CAYLEY_TABLE)), FusionKernel(gen_fibonacci())):
        for _ in range(10):
            f, g, h = (random_dim_object(rng, kernel.source_size, 2) for _ in range(3))
            assert check_compose_associative(kernel, f, g, h).verdict == Verdict.PASS


# -- conservativity -------------------------------------------------------

def test_reflects_isomorphisms():
    kernel = c3()
    f = ones(3)
    singular = MorphismFamily(f, f, (Mat.identity(1), Mat.from_rows([[0]]), Mat.identity(1)))
    assert not is_iso(khat(kernel, singular)[(0, 1)])
    assert reflects_iso(kernel, singular).verdict == Verdict.PASS
    identity = MorphismFamily.identity(f)
    assert all(is_iso(khat(kernel, identity)[c]) for c in kernel.cells())
    assert reflects_iso(kernel, identity).verdict == Verdict.PASS


def test_corpus_kernels_are_conservative():
    rng = np.random.default_rng(config.DEFAULT_SEED)
    for kernel in (c3(), scheme_kernel(gen_hamming(2, 2)), FusionKernel(gen_ising())):
        assert check_conservative_random(kernel, rng, trials=25).verdict == Verdict.PASS


# -- adjunction -----------------------------------------------------------

def test_unit_is_a_stacked_diagonal():
    eta = unit_eta(c3(), ones(3))
    for a in range(3):
        assert eta[a] == Mat.from_rows([[1], [1], [1]])


def test_triangle_identities():
    rng = np.random.default_rng(config.DEFAULT_SEED)
    kernels = [c3(), scheme_kernel(gen_group(config.S3_CAYLEY_TABLE)), FusionKernel(gen_fibonacci())]
    for kernel in kernels:
        for _ in range(5):
            f = random_dim_object(rng, kernel.source_size, 2)
            F = MatObject(rng.integers(0, 3, size=kernel.grid_shape).astype(object))
            assert check_triangles(kernel, f, F).verdict == Verdict.PASS
            assert check_unit_split_mono(kernel, f).verdict == Verdict.PASS
            assert check_round_trip(kernel, f).verdict == Verdict.PASS


def test_right_triangle_with_literal_block_diagonal():
    kernel = FusionKernel(gen_ising())
    F = MatObject.from_rows([[1, 0, 2], [0, 1, 1], [2, 1, 0]])
    adjoint = kcheck(kernel, F)
    composite = kcheck_morphism(kernel, counit_eps(kernel, F)).after(unit_eta(kernel, adjoint))
    assert composite == MorphismFamily.identity(adjoint)


# -- involution -----------------------------------------------------------

def test_star_on_cyclic_three():
    kernel = c3()
    f = DimObject((1, 2, 0))
    assert star_source(kernel, f) == DimObject((1, 0, 2))
    assert khat(kernel, star_source(kernel, f)) == star_target(khat(kernel, f))
    assert check_star_preserved(kernel, f).verdict == Verdict.PASS
    j = DimObject.delta(3, 0)
    assert star_source(kernel, j) == j


def test_star_is_trivial_on_symmetric_schemes():
    kernel = scheme_kernel(gen_hamming(2, 2))
    f = DimObject((2, 0, 1))
    assert star_source(kernel, f) == f
    assert check_star_preserved(kernel, f).verdict == Verdict.PASS


def test_star_on_morphisms():
    kernel = scheme_kernel(gen_cyclic(4))
    rng = np.random.default_rng(config.DEFAULT_SEED)
    for _ in range(5):
        f, g = random_dim_object(rng, 4, 2), random_dim_object(rng, 4, 2)
        alpha = random_morphism(rng, f, g, (-1, 0, 1, 2))
        assert check_star_preserved_morphism(kernel, alpha).verdict == Verdict.PASS


def test_closed_fusion_star_chain():
    assert check_star_preserved(FusionKernel(gen_group_fusion(2)), DimObject((1, 2))).verdict == Verdict.PASS
    assert check_star_preserved(FusionKernel(gen_group_fusion(5)), DimObject((0, 1, 2, 0, 3))).verdict == Verdict.PASS


def test_star_chain_not_applicable_for_fibonacci():
    report = check_star_preserved(FusionKernel(gen_fibonacci()), DimObject((1, 1)))
    assert report.verdict == Verdict.NOT_APPLICABLE


# -- regular morphisms ----------------------------------------------------

def test_image_morphisms_are_regular():
    rng = np.random.default_rng(config.DEFAULT_SEED)
    for kernel in (c3(), FusionKernel(gen_fibonacci())):
        for _ in range(5):
            f = random_dim_object(rng, kernel.source_size, 2)
            g = random_dim_object(rng, kernel.source_size, 2)
            beta = random_morphism(rng, f, g, (-1, 0, 1, 2))
            assert is_regular(kernel, f, g, khat_morphism(kernel, beta)).verdict == Verdict.PASS


def test_class_inconstant_morphism_is_not_regular():
    kernel = c3()
    alpha = c3_family({(0, 1): 2, (1, 2): 3})
    report = is_regular(kernel, ones(3), ones(3), alpha)
    assert report.verdict == Verdict.FAIL
    assert tuple(report.witness["cell"]) in kernel.support(1)
    assert not is_class_constant(kernel, alpha)


def test_class_constant_morphism_is_regular():
    kernel = c3()
    alpha = c3_family({c: 2 for c in kernel.support(1)})
    assert is_class_constant(kernel, alpha)
    assert is_regular(kernel, ones(3), ones(3), alpha).verdict == Verdict.PASS


def test_regular_requires_matching_grids():
    kernel = c3()
    with pytest.raises(KernelError):
        is_regular(kernel, ones(3), DimObject((2, 1, 1)), c3_family({}))


def test_regularity_characterization():
    for cm in (gen_cyclic(3), gen_hamming(2, 2)):
        report = regularity_characterization(scheme_kernel(cm), seed=config.DEFAULT_SEED)
        assert report.verdict == Verdict.PASS
    fusion = regularity_characterization(FusionKernel(gen_fibonacci()))
    assert fusion.verdict == Verdict.NOT_APPLICABLE


def test_regularity_characterization_exhaustive_on_c3():
    report = regularity_characterization(c3(), limit=3 ** 9)
    assert report.verdict == Verdict.PASS
    assert report.detail == "19683 families"


def test_scalar_regularity_matches_the_composites():
    rng = np.random.default_rng(config.DEFAULT_SEED)
    for kernel in (c3(), scheme_kernel(gen_hamming(2, 2))):
        tester = RegularityTester(kernel, ones(kernel.source_size), ones(kernel.source_size))
        linear = ScalarRegularity(tester)
        cells = kernel.cells()
        for trial in range(12):
            if trial % 2:
                per_class = rng.integers(0, 3, size=kernel.source_size)
                values = {c: int(per_class[a]) for a in range(kernel.source_size) for c in kernel.support(a)}
            else:
                values = {c: int(v) for c, v in zip(cells, rng.integers(0, 3, size=len(cells)))}
            direct = tester.check(scalar_family(tester.source, values)).verdict == Verdict.PASS
            assert linear.is_regular([values[c] for c in cells]) == direct


def test_regular_morphisms_compose():
    rng = np.random.default_rng(config.DEFAULT_SEED)
    assert check_regular_closure(c3(), rng, trials=5).verdict == Verdict.PASS


# -- Wiener membership ----------------------------------------------------

def test_scheme_membership():
    kernel = c3()
    result = wiener_membership(kernel, MatObject.from_rows([[1, 2, 0], [0, 1, 2], [2, 0, 1]]))
    assert result.member == DimObject((1, 2, 0))
    assert wiener_membership(kernel, MatObject.zeros(3, 3)).member == DimObject.zeros(3)


def test_scheme_membership_rejects_with_cell_pair():
    grid = MatObject.from_rows([[1, 2, 1], [1, 1, 3], [1, 1, 1]])
    result = wiener_membership(c3(), grid)
    assert not result.in_image
    assert result.witness["cells"] == [[0, 1], [1, 2]]
    assert (result.witness["lhs"], result.witness["rhs"]) == (2, 3)


def test_fusion_membership():
    kernel = FusionKernel(gen_fibonacci())
    assert wiener_membership(kernel, MatObject.from_rows([[1, 1], [1, 2]])).members == (DimObject((1, 1)),)
    assert wiener_membership(kernel, MatObject.from_rows([[0, 1], [1, 1]])).member == DimObject((0, 1))
    rejected = wiener_membership(kernel, MatObject.from_rows([[0, 1], [0, 0]]))
    assert not rejected.in_image
    assert rejected.witness


def test_wiener_round_trip():
    for kernel in (c3(), scheme_kernel(gen_hamming(2, 2)), FusionKernel(gen_ising()), FusionKernel(gen_group_fusion(4))):
        for f in enumerate_dim_objects(kernel.source_size, (0, 1, 2))[:40]:
            assert check_wiener_round_trip(kernel, f).verdict == Verdict.PASS


# -- duality --------------------------------------------------------------

def test_dual_comparison_examples():
    kernel = c3()
    assert dual_comparison(kernel, DimObject((1, 0, 0)), DimObject((0, 1, 0))).verdict == Verdict.PASS
    j = DimObject.delta(3, 0)
    assert dual_comparison(kernel, j, j).verdict == Verdict.PASS


def test_dual_comparison_maps_are_isomorphisms():
    rng = np.random.default_rng(config.DEFAULT_SEED)
    kernels = [scheme_kernel(gen_hamming(2, 2)), scheme_kernel(gen_group(config.S3_CAYLEY_TABLE)), FusionKernel(s3_fusion())]
    for kernel in kernels:
        for _ in range(5):
            f = random_dim_object(rng, kernel.source_size, 2)
            g = random_dim_object(rng, kernel.source_size, 2)
            assert dual_comparison(kernel, f, g).verdict == Verdict.PASS
            assert all(is_iso(m) for m in dual_comparison_maps(kernel, f, g))


def test_dual_comparison_needs_precompactness():
    sch = validate(gen_cyclic(3))
    broken = SchemeKernel(sch, tensor=mutate_tensor(intersection_numbers(sch), (1, 1, 0)))
    with pytest.raises(KernelError):
        dual_comparison(broken, DimObject((1, 0, 0)), DimObject((0, 1, 0)))


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
