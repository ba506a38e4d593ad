"""Definition-based ground truth for the recursive transforms.

Everything here is deliberately naive: dense matrices evaluated entry by
entry, O(n^2) products, and dense materialization of every sparse factor
the recursion multiplies together.  None of it is used on a performance
path; it exists so that the fast code can be checked against something
that is obviously a direct transcription of the transform definitions,

    type I  : sqrt(2/n) * sin((j+1)(k+1)pi/n),        (n-1) x (n-1)
    type II : sqrt(2/n) * e(j+1) * sin((j+1)(2k+1)pi/(2n)),
    type III: sqrt(2/n) * e(k+1) * sin((2j+1)(k+1)pi/(2n)),
    type IV : sqrt(2/n) * sin((2j+1)(2k+1)pi/(4n)),

with e(i) = 1/sqrt(2) for i in {0, n} and 1 otherwise.  Type III is
built so that it is the bitwise transpose of type II.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import SizeError
from .kernels import SQRT2
from .transforms import ScaleMode, TransformKind, _is_pow2


def build_matrix(kind, n: int, scale: ScaleMode = ScaleMode.SCALED) -> np.ndarray:
    """Dense transform matrix of the given kind and order ``n = 2^t``.

    Type I yields an (n-1) x (n-1) matrix, the others n x n.  With
    ``ScaleMode.SCALED`` the matrix is multiplied by sqrt(n).
    """
    kind = TransformKind.parse(kind)
    if n < 2 or not _is_pow2(n):
        raise SizeError(f"transform order must be a power of two >= 2, got {n}")
    root = math.sqrt(2.0 / n)
    if kind is TransformKind.DST1:
        j = np.arange(n - 1)
        prod = np.outer(j + 1, j + 1)
        mat = root * np.sin(prod * (math.pi / n))
    elif kind is TransformKind.DST4:
        j = np.arange(n)
        prod = np.outer(2 * j + 1, 2 * j + 1)
        mat = root * np.sin(prod * (math.pi / (4 * n)))
    else:
        j = np.arange(n)
        eps = np.ones(n)
        eps[n - 1] = 1.0 / SQRT2
        if kind is TransformKind.DST2:
            prod = np.outer(j + 1, 2 * j + 1)
            coeff = (root * eps)[:, None]
        else:
            prod = np.outer(2 * j + 1, j + 1)
            coeff = (root * eps)[None, :]
        mat = coeff * np.sin(prod * (math.pi / (2 * n)))
    if scale is ScaleMode.SCALED:
        mat = math.sqrt(n) * mat
    return mat


def matvec(mat: np.ndarray, x) -> np.ndarray:
    """Dense matrix-vector product, the O(n^2) reference evaluation."""
    mat = np.asarray(mat, dtype=np.float64)
    x = np.asarray(x, dtype=np.float64)
    if mat.ndim != 2 or x.ndim != 1 or mat.shape[1] != x.shape[0]:
        raise SizeError(
            f"dimension mismatch: matrix {mat.shape} times vector {x.shape}"
        )
    return mat @ x


_KERNELS = {
    "reversal": kernels.apply_reversal,
    "sign_alternation": kernels.apply_sign_alternation,
    "even_odd": kernels.apply_even_odd_perm,
    "even_odd_inverse": kernels.apply_even_odd_perm_inverse,
    "butterfly": kernels.apply_butterfly,
    "butterfly_transpose": kernels.apply_butterfly_transpose,
    "odd_butterfly": kernels.apply_odd_butterfly,
    "mixer": kernels.apply_mixer,
}


def build_kernel_matrix(kernel_id: str, size: int) -> np.ndarray:
    """Dense materialization of one kernel, for kernel-level tests.

    ``size`` is the signal length the kernel acts on (odd for
    ``odd_butterfly``).  Column j is the kernel applied to the j-th
    basis vector.
    """
    if kernel_id == "rotation_reflection":
        rc = kernels.rotation_constants(size)
        apply = lambda col: kernels.apply_rotation_reflection(col, rc)[0]
    elif kernel_id in _KERNELS:
        fn = _KERNELS[kernel_id]
        apply = lambda col: fn(col)[0]
    else:
        raise SizeError(f"unknown kernel id: {kernel_id!r}")
    mat = np.zeros((size, size))
    col = np.zeros(size)
    for j in range(size):
        col[j] = 1.0
        mat[:, j] = apply(col)
        col[j] = 0.0
    return mat


@dataclass(frozen=True)
class SparseFactor:
    """One factor of a sparse factorization, stored as (row, col, value)."""

    dim: int
    entries: tuple[tuple[int, int, float], ...]
    label: str

    def to_dense(self) -> np.ndarray:
        mat = np.zeros((self.dim, self.dim))
        for r, c, v in self.entries:
            mat[r, c] = v
        return mat

    def max_nonzeros_per_row(self) -> int:
        counts = np.zeros(self.dim, dtype=int)
        for r, _, _ in self.entries:
            counts[r] += 1
        return int(counts.max())

    def max_nonzeros_per_col(self) -> int:
        counts = np.zeros(self.dim, dtype=int)
        for _, c, _ in self.entries:
            counts[c] += 1
        return int(counts.max())


def _base_block(kind_code: int) -> tuple[str, np.ndarray]:
    if kind_code == 1:
        return "dst1_base", np.array([[SQRT2]])
    if kind_code == 4:
        rc = kernels.rotation_constants(2)
        s, c = rc.sines[0], rc.cosines[0]
        return "dst4_base", SQRT2 * np.array([[s, c], [c, -s]])
    return f"dst{kind_code}_base", np.array([[1.0, 1.0], [1.0, -1.0]])


def _kernel_factor(kernel_id: str, size: int) -> tuple[str, np.ndarray]:
    return f"{kernel_id}_{size}", build_kernel_matrix(kernel_id, size)


def _identity(size: int) -> tuple[str, np.ndarray]:
    return f"id_{size}", np.eye(size)


def _blkdiag(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    out = np.zeros((a.shape[0] + b.shape[0], a.shape[1] + b.shape[1]))
    out[: a.shape[0], : a.shape[1]] = a
    out[a.shape[0] :, a.shape[1] :] = b
    return out


def _merge_chains(a, b):
    """Block-diagonal merge of two equally long sibling factor chains."""
    assert len(a) == len(b)
    return [
        (f"blkdiag({la}, {lb})", _blkdiag(ma, mb))
        for (la, ma), (lb, mb) in zip(a, b)
    ]


def _chain(kind_code: int, m: int) -> list[tuple[str, np.ndarray]]:
    """Labeled dense factors whose left-to-right product is the transform.

    Every recursion level contributes four aligned slots: an optional
    output permutation, an optional combine stage, the block diagonal of
    the two expanded sub-chains, and the input-side stage.  Keeping empty
    slots as explicit identities makes sibling chains equally long, so
    merging is a plain element-wise block-diagonal.
    """
    if m <= 2:
        return [_base_block(kind_code)]
    h = (m + 1) // 2
    if kind_code == 2:
        slots = [_kernel_factor("even_odd_inverse", m), _identity(m)]
        mid = _merge_chains(_chain(4, h), _chain(2, h))
        tail = _kernel_factor("butterfly", m)
    elif kind_code == 3:
        slots = [_identity(m), _kernel_factor("butterfly_transpose", m)]
        mid = _merge_chains(_chain(4, h), _chain(3, h))
        tail = _kernel_factor("even_odd", m)
    elif kind_code == 4:
        slots = [
            _kernel_factor("even_odd_inverse", m),
            _kernel_factor("mixer", m),
        ]
        mid = _merge_chains(_chain(2, h), _chain(2, h))
        tail = _kernel_factor("rotation_reflection", m)
    else:
        slots = [_kernel_factor("even_odd_inverse", m), _identity(m)]
        mid = _merge_chains(_chain(3, h), _chain(1, h - 1))
        tail = _kernel_factor("odd_butterfly", m)
    return slots + mid + [tail]


def _is_permutation(mat: np.ndarray) -> bool:
    if not np.all((mat == 0.0) | (mat == 1.0)):
        return False
    return bool(
        np.all(mat.sum(axis=0) == 1.0) and np.all(mat.sum(axis=1) == 1.0)
    )


def materialize_factors(kind, n: int) -> list[SparseFactor]:
    """Sparse factor chain whose left-to-right product is the scaled transform.

    The chain is produced by symbolically unrolling the same recursion
    the executor runs, fully expanded down to the 2x2 / 1x1 base blocks.
    Exact identity factors are dropped and adjacent pure permutations are
    combined, which reproduces the factor granularity of the worked
    factorizations for order 8.
    """
    kind = TransformKind.parse(kind)
    if n < 2 or not _is_pow2(n):
        raise SizeError(f"transform order must be a power of two >= 2, got {n}")
    length = kind.signal_length(n)
    raw = _chain(kind.value, length)
    eye = np.eye(length)
    kept = [(lab, mat) for lab, mat in raw if not np.array_equal(mat, eye)]
    merged: list[tuple[str, np.ndarray]] = []
    for lab, mat in kept:
        if merged and _is_permutation(mat) and _is_permutation(merged[-1][1]):
            prev_lab, prev = merged.pop()
            merged.append((f"{prev_lab}*{lab}", prev @ mat))
        else:
            merged.append((lab, mat))
    factors = []
    for lab, mat in merged:
        rows, cols = np.nonzero(mat)
        entries = tuple(
            (int(r), int(c), float(mat[r, c])) for r, c in zip(rows, cols)
        )
        factors.append(SparseFactor(length, entries, lab))
    return factors


def factor_product(factors: list[SparseFactor]) -> np.ndarray:
    """Left-to-right dense product of a factor chain."""
    out = np.eye(factors[0].dim)
    for f in factors:
        out = out @ f.to_dense()
    return out
