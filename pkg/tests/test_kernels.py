import math

import numpy as np
import pytest

from fastdst import build_kernel_matrix, rotation_constants
from fastdst.errors import NumericError, PlanError, SizeError
from fastdst.kernels import (
    OpCount,
    apply_butterfly,
    apply_butterfly_transpose,
    apply_even_odd_perm,
    apply_even_odd_perm_inverse,
    apply_mixer,
    apply_odd_butterfly,
    apply_reversal,
    apply_rotation_reflection,
    apply_sign_alternation,
)

SQRT2 = math.sqrt(2.0)
POWERS = [2 ** t for t in range(1, 13)]


def test_reversal_examples():
    assert apply_reversal([1.0, 2.0, 3.0])[0].tolist() == [3.0, 2.0, 1.0]
    assert apply_reversal([7.0])[0].tolist() == [7.0]
    x = np.array([1.0, 2.0, 3.0, 4.0])
    twice, _ = apply_reversal(apply_reversal(x)[0])
    assert np.array_equal(twice, x)


def test_sign_alternation_examples():
    assert apply_sign_alternation([1.0, 1.0, 1.0, 1.0])[0].tolist() == [1.0, -1.0, 1.0, -1.0]
    assert apply_sign_alternation([0.0, 5.0])[0].tolist() == [0.0, -5.0]
    x = np.array([2.0, 3.0, 4.0])
    twice, _ = apply_sign_alternation(apply_sign_alternation(x)[0])
    assert np.array_equal(twice, x)


def test_even_odd_perm_examples():
    assert apply_even_odd_perm([1.0, 2.0, 3.0, 4.0])[0].tolist() == [1.0, 3.0, 2.0, 4.0]
    assert apply_even_odd_perm([1.0, 2.0, 3.0, 4.0, 5.0])[0].tolist() == [1.0, 3.0, 5.0, 2.0, 4.0]
    # lengths 1 and 2 act as the identity
    assert apply_even_odd_perm([9.0])[0].tolist() == [9.0]
    assert apply_even_odd_perm([9.0, 8.0])[0].tolist() == [9.0, 8.0]


@pytest.mark.parametrize("length", list(range(1, 258)))
def test_even_odd_perm_round_trip(length):
    rng = np.random.default_rng(length)
    x = rng.standard_normal(length)
    forward, _ = apply_even_odd_perm(x)
    back, _ = apply_even_odd_perm_inverse(forward)
    assert np.array_equal(back, x)


def test_butterfly_examples():
    y, ops = apply_butterfly([1.0, 2.0, 3.0, 4.0])
    assert y.tolist() == [5.0, 5.0, -3.0, -1.0]
    assert ops == OpCount(4, 0)
    assert apply_butterfly([1.0, 0.0])[0].tolist() == [1.0, 1.0]


def test_butterfly_transpose_of_forward_is_doubling():
    x = np.array([1.0, 2.0, 3.0, 4.0])
    y, _ = apply_butterfly_transpose(apply_butterfly(x)[0])
    assert np.allclose(y, 2.0 * x, atol=0)


def test_odd_butterfly_examples():
    y, ops = apply_odd_butterfly([1.0, 2.0, 3.0])
    assert np.allclose(y, [4.0, 2.0 * SQRT2, -2.0], atol=1e-15)
    assert ops == OpCount(2, 1)
    y, ops = apply_odd_butterfly([5.0])
    assert np.allclose(y, [5.0 * SQRT2], atol=0)
    assert ops == OpCount(0, 1)
    assert apply_odd_butterfly(np.ones(7))[1] == OpCount(6, 1)


def test_mixer_size4_action():
    a, b, c, d = 1.7, -0.3, 2.2, 0.9
    y, ops = apply_mixer([a, b, c, d])
    assert np.allclose(y, [SQRT2 * b, a - c, -a - c, SQRT2 * d], atol=1e-15)
    assert ops == OpCount(2, 2)
    y, _ = apply_mixer([0.0, 1.0, 0.0, 0.0])
    assert np.allclose(y, [SQRT2, 0.0, 0.0, 0.0], atol=0)


def test_mixer_size8_basis_column():
    e3 = np.zeros(8)
    e3[3] = 1.0
    y, _ = apply_mixer(e3)
    want = np.zeros(8)
    want[0] = SQRT2
    assert np.allclose(y, want, atol=0)


def test_rotation_reflection_size4_columns():
    rc = rotation_constants(4)
    e0 = np.array([1.0, 0.0, 0.0, 0.0])
    y, ops = apply_rotation_reflection(e0, rc)
    assert np.allclose(
        y, [math.sin(math.pi / 16), 0.0, 0.0, -math.cos(math.pi / 16)], atol=1e-15
    )
    assert ops == OpCount(4, 8)
    e1 = np.array([0.0, 1.0, 0.0, 0.0])
    y, _ = apply_rotation_reflection(e1, rc)
    assert np.allclose(
        y, [0.0, -math.sin(3 * math.pi / 16), -math.cos(3 * math.pi / 16), 0.0],
        atol=1e-15,
    )


def test_rotation_reflection_preserves_norm():
    rng = np.random.default_rng(8)
    rc = rotation_constants(8)
    for _ in range(20):
        x = rng.standard_normal(8)
        y, _ = apply_rotation_reflection(x, rc)
        assert abs(np.linalg.norm(y) - np.linalg.norm(x)) < 1e-13


@pytest.mark.parametrize("n", POWERS)
def test_operation_counts_at_every_size(n):
    x = np.linspace(-1.0, 1.0, n)
    assert apply_butterfly(x)[1] == OpCount(n, 0)
    assert apply_butterfly_transpose(x)[1] == OpCount(n, 0)
    assert apply_odd_butterfly(x[: n - 1] if n > 1 else x)[1] == OpCount(n - 2, 1)
    if n >= 4:
        assert apply_mixer(x)[1] == OpCount(n - 2, 2)
    assert apply_rotation_reflection(x, rotation_constants(n))[1] == OpCount(n, 2 * n)
    assert apply_reversal(x)[1] == OpCount(0, 0)
    assert apply_sign_alternation(x)[1] == OpCount(0, 0)
    assert apply_even_odd_perm(x)[1] == OpCount(0, 0)
    assert apply_even_odd_perm_inverse(x)[1] == OpCount(0, 0)


@pytest.mark.parametrize("n", [2, 4, 8, 16, 32, 64, 128, 256])
def test_kernel_matrices_are_scaled_orthogonal(n):
    eye = np.eye(n)
    for kernel_id in ("butterfly", "butterfly_transpose", "mixer"):
        if kernel_id == "mixer" and n < 4:
            continue
        mat = build_kernel_matrix(kernel_id, n)
        assert np.max(np.abs(mat @ mat.T - 2.0 * eye)) < 1e-13
    hat = build_kernel_matrix("odd_butterfly", n - 1)
    assert np.max(np.abs(hat @ hat.T - 2.0 * np.eye(n - 1))) < 1e-13
    rot = build_kernel_matrix("rotation_reflection", n)
    assert np.max(np.abs(rot @ rot.T - eye)) < 1e-13


@pytest.mark.parametrize("n", [2, 4, 16, 64, 256])
def test_kernel_apply_matches_materialized_matrix(n):
    rng = np.random.default_rng(n)
    cases = {
        "reversal": apply_reversal,
        "sign_alternation": apply_sign_alternation,
        "even_odd": apply_even_odd_perm,
        "even_odd_inverse": apply_even_odd_perm_inverse,
        "butterfly": apply_butterfly,
        "butterfly_transpose": apply_butterfly_transpose,
    }
    if n >= 4:
        cases["mixer"] = apply_mixer
    for kernel_id, fn in cases.items():
        mat = build_kernel_matrix(kernel_id, n)
        for _ in range(100):
            x = rng.standard_normal(n)
            assert np.max(np.abs(fn(x)[0] - mat @ x)) < 1e-13
    rc = rotation_constants(n)
    mat = build_kernel_matrix("rotation_reflection", n)
    for _ in range(100):
        x = rng.standard_normal(n)
        assert np.max(np.abs(apply_rotation_reflection(x, rc)[0] - mat @ x)) < 1e-13


@pytest.mark.parametrize("n", POWERS)
def test_rotation_constants_invariants(n):
    rc = rotation_constants(n)
    assert rc.half_len == n // 2
    assert np.max(np.abs(rc.sines ** 2 + rc.cosines ** 2 - 1.0)) < 1e-15
    assert np.all(rc.sines > 0)
    assert np.all(rc.sines < rc.cosines)


def test_error_cases():
    with pytest.raises(SizeError):
        apply_reversal([])
    with pytest.raises(SizeError):
        apply_butterfly([1.0, 2.0, 3.0])
    with pytest.raises(SizeError):
        apply_odd_butterfly([1.0, 2.0])
    with pytest.raises(SizeError):
        apply_odd_butterfly(np.ones(5))  # 5 + 1 is not a power of two
    with pytest.raises(SizeError):
        apply_mixer([1.0, 2.0])
    with pytest.raises(PlanError):
        apply_rotation_reflection(np.ones(4), rotation_constants(8))
    with pytest.raises(NumericError):
        apply_butterfly([1.0, math.nan])
    x = np.ones(4)
    with pytest.raises(PlanError):
        apply_butterfly(x, out=x)
