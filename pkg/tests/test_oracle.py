import math

import numpy as np
import pytest

from fastdst import (
    ScaleMode,
    TransformKind,
    build_kernel_matrix,
    build_matrix,
    dst2_scaled,
    factor_product,
    materialize_factors,
    matvec,
)
from fastdst.errors import SizeError

SQRT2 = math.sqrt(2.0)
S8, C8 = math.sin(math.pi / 8), math.cos(math.pi / 8)


def test_type2_order2_scaled_is_add_subtract():
    assert np.allclose(
        build_matrix(TransformKind.DST2, 2), [[1.0, 1.0], [1.0, -1.0]], atol=1e-15
    )


def test_type4_order2_scaled_is_scaled_rotation():
    want = SQRT2 * np.array([[S8, C8], [C8, -S8]])
    assert np.allclose(build_matrix(TransformKind.DST4, 2), want, atol=1e-15)


def test_type1_order4_scaled():
    want = np.array([[1.0, SQRT2, 1.0], [SQRT2, 0.0, -SQRT2], [1.0, -SQRT2, 1.0]])
    assert np.allclose(build_matrix(TransformKind.DST1, 4), want, atol=1e-14)


@pytest.mark.parametrize("n", [2, 4, 8, 32, 128])
@pytest.mark.parametrize("scale", [ScaleMode.SCALED, ScaleMode.UNITARY])
def test_type3_is_exact_transpose_of_type2(n, scale):
    two = build_matrix(TransformKind.DST2, n, scale)
    three = build_matrix(TransformKind.DST3, n, scale)
    assert np.array_equal(three, two.T)


@pytest.mark.parametrize("kind", list(TransformKind))
@pytest.mark.parametrize("n", [2, 4, 8, 16, 64, 256])
def test_unitary_matrices_are_orthogonal(kind, n):
    mat = build_matrix(kind, n, ScaleMode.UNITARY)
    err = np.max(np.abs(mat @ mat.T - np.eye(mat.shape[0])))
    assert err < 1e-12


def test_matvec_examples():
    assert matvec(np.eye(3), [1.0, 2.0, 3.0]).tolist() == [1.0, 2.0, 3.0]
    assert matvec(np.array([[1.0, 1.0], [1.0, -1.0]]), [1.0, 0.0]).tolist() == [1.0, 1.0]
    e0 = np.array([1.0, 0.0, 0.0, 0.0])
    assert np.allclose(
        matvec(build_matrix(TransformKind.DST2, 4), e0), dst2_scaled(e0)[0], atol=0
    )
    with pytest.raises(SizeError):
        matvec(np.eye(3), [1.0, 2.0])


def test_kernel_matrix_displays():
    mixer4 = build_kernel_matrix("mixer", 4)
    want = np.array([
        [0.0, SQRT2, 0.0, 0.0],
        [1.0, 0.0, -1.0, 0.0],
        [-1.0, 0.0, -1.0, 0.0],
        [0.0, 0.0, 0.0, SQRT2],
    ])
    assert np.array_equal(mixer4, want)

    s1, c1 = math.sin(math.pi / 16), math.cos(math.pi / 16)
    s3, c3 = math.sin(3 * math.pi / 16), math.cos(3 * math.pi / 16)
    rot4 = build_kernel_matrix("rotation_reflection", 4)
    want = np.array([
        [s1, 0.0, 0.0, c1],
        [0.0, -s3, -c3, 0.0],
        [0.0, -c3, s3, 0.0],
        [-c1, 0.0, 0.0, s1],
    ])
    assert np.array_equal(rot4, want)

    hat3 = build_kernel_matrix("odd_butterfly", 3)
    want = np.array([[1.0, 0.0, 1.0], [0.0, SQRT2, 0.0], [1.0, 0.0, -1.0]])
    assert np.array_equal(hat3, want)


def test_unknown_kernel_id():
    with pytest.raises(SizeError):
        build_kernel_matrix("twiddle", 4)


def test_type2_order8_has_five_factors():
    factors = materialize_factors(TransformKind.DST2, 8)
    assert len(factors) == 5
    product = factor_product(factors)
    assert np.max(np.abs(product - build_matrix(TransformKind.DST2, 8))) < 1e-13


def test_type1_order8_product():
    product = factor_product(materialize_factors(TransformKind.DST1, 8))
    assert np.max(np.abs(product - build_matrix(TransformKind.DST1, 8))) < 1e-13


def test_type4_order2_is_single_base_factor():
    factors = materialize_factors(TransformKind.DST4, 2)
    assert len(factors) == 1
    assert factors[0].label == "dst4_base"
    assert np.max(np.abs(factors[0].to_dense() - build_matrix(TransformKind.DST4, 2))) < 1e-15


@pytest.mark.parametrize("kind", list(TransformKind))
@pytest.mark.parametrize("n", [2, 4, 8, 16, 32, 64, 128, 256])
def test_factor_products_match_dense_matrices(kind, n):
    factors = materialize_factors(kind, n)
    product = factor_product(factors)
    assert np.max(np.abs(product - build_matrix(kind, n))) < 1e-12
    for f in factors:
        assert f.max_nonzeros_per_row() <= 2
        assert f.max_nonzeros_per_col() <= 2


def test_build_matrix_rejects_bad_orders():
    for n in (0, 1, 3, 6):
        with pytest.raises(SizeError):
            build_matrix(TransformKind.DST2, n)
        with pytest.raises(SizeError):
            materialize_factors(TransformKind.DST4, n)
