"""Sparse operator kernels used by the recursive sine transforms.

Each kernel applies one sparse orthogonal (or scaled orthogonal) factor
out-of-place and reports its exact operation count.  The counting
convention throughout the library: only genuine additions and genuine
multiplications are counted; multiplications by +-1 and pure permutations
are free.

All kernels validate their input (length contract, finiteness) before
touching the output buffer, and the output must never alias the input.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NumericError, PlanError, SizeError

SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class OpCount:
    """Exact (additions, multiplications) pair.

    Additive under composition: the count of a factor chain is the sum of
    the per-factor counts.
    """

    adds: int
    mults: int

    def __post_init__(self):
        if self.adds < 0 or self.mults < 0:
            raise ValueError("operation counts must be non-negative")

    def __add__(self, other: "OpCount") -> "OpCount":
        return OpCount(self.adds + other.adds, self.mults + other.mults)

    def as_tuple(self) -> tuple[int, int]:
        return (self.adds, self.mults)


ZERO_COUNT = OpCount(0, 0)


@dataclass(frozen=True)
class RotationConstants:
    """Precomputed angles for the rotation-reflection kernel of size n.

    sines[k] = sin((2k+1)*pi/(4n)) and cosines[k] = cos((2k+1)*pi/(4n))
    for k = 0 .. n/2-1.  All angles lie in (0, pi/4), so 0 < s < c.
    """

    half_len: int
    sines: np.ndarray
    cosines: np.ndarray

    @property
    def size(self) -> int:
        return 2 * self.half_len


def rotation_constants(n: int) -> RotationConstants:
    """Build the rotation constants for an even transform size ``n >= 2``."""
    if n < 2 or n % 2 != 0:
        raise SizeError(f"rotation constants need an even size >= 2, got {n}")
    k = np.arange(n // 2)
    angles = (2 * k + 1) * (math.pi / (4 * n))
    return RotationConstants(n // 2, np.sin(angles), np.cos(angles))


def _as_signal(x, min_len: int = 1) -> np.ndarray:
    x = np.asarray(x, dtype=np.float64)
    if x.ndim != 1:
        raise SizeError(f"signal must be one-dimensional, got shape {x.shape}")
    if x.shape[0] < min_len:
        raise SizeError(f"signal length {x.shape[0]} is below the minimum {min_len}")
    if not np.all(np.isfinite(x)):
        raise NumericError("non-finite input detected")
    return x


def _out_buffer(x: np.ndarray, out) -> np.ndarray:
    if out is None:
        return np.empty_like(x)
    out = np.asarray(out)
    if out.shape != x.shape or out.dtype != np.float64:
        raise SizeError("output buffer must be float64 and match the input shape")
    if np.shares_memory(out, x):
        raise PlanError("output buffer must not alias the input")
    return out


def apply_reversal(x, out=None) -> tuple[np.ndarray, OpCount]:
    """Reverse the buffer: out[k] = x[m-1-k].  Costs nothing."""
    x = _as_signal(x)
    out = _out_buffer(x, out)
    out[:] = x[::-1]
    return out, ZERO_COUNT


def apply_sign_alternation(x, out=None) -> tuple[np.ndarray, OpCount]:
    """Flip the sign of odd-indexed entries: out[k] = (-1)^k * x[k].

    Sign flips are multiplications by -1 and therefore cost nothing.
    """
    x = _as_signal(x)
    out = _out_buffer(x, out)
    out[0::2] = x[0::2]
    out[1::2] = -x[1::2]
    return out, ZERO_COUNT


def apply_even_odd_perm(x, out=None) -> tuple[np.ndarray, OpCount]:
    """Gather even-indexed entries then odd-indexed entries.

    [x0, x1, x2, ...] -> [x0, x2, ..., x1, x3, ...] for either parity of
    the length; lengths 1 and 2 are identities.  Costs nothing.
    """
    x = _as_signal(x)
    out = _out_buffer(x, out)
    h = (x.shape[0] + 1) // 2
    out[:h] = x[0::2]
    out[h:] = x[1::2]
    return out, ZERO_COUNT


def apply_even_odd_perm_inverse(x, out=None) -> tuple[np.ndarray, OpCount]:
    """Scatter back: exact inverse of :func:`apply_even_odd_perm`."""
    x = _as_signal(x)
    out = _out_buffer(x, out)
    h = (x.shape[0] + 1) // 2
    out[0::2] = x[:h]
    out[1::2] = x[h:]
    return out, ZERO_COUNT


def apply_butterfly(x, out=None) -> tuple[np.ndarray, OpCount]:
    """Scaled butterfly pairing mirrored entries, for even length n.

    out[k] = x[k] + x[n-1-k] and out[n/2+k] = x[k] - x[n-1-k] for
    k < n/2.  Costs (n, 0).
    """
    x = _as_signal(x, 2)
    n = x.shape[0]
    if n % 2 != 0:
        raise SizeError(f"butterfly needs an even length, got {n}")
    out = _out_buffer(x, out)
    h = n // 2
    mirrored = x[n - 1 : h - 1 : -1]
    out[:h] = x[:h] + mirrored
    out[h:] = x[:h] - mirrored
    return out, OpCount(n, 0)


def apply_butterfly_transpose(x, out=None) -> tuple[np.ndarray, OpCount]:
    """Transpose of :func:`apply_butterfly`.

    out[k] = x[k] + x[n/2+k] for k < n/2 and out[n/2+j] =
    x[n/2-1-j] - x[n-1-j].  Costs (n, 0).
    """
    x = _as_signal(x, 2)
    n = x.shape[0]
    if n % 2 != 0:
        raise SizeError(f"butterfly transpose needs an even length, got {n}")
    out = _out_buffer(x, out)
    h = n // 2
    out[:h] = x[:h] + x[h:]
    out[h:] = (x[:h] - x[h:])[::-1]
    return out, OpCount(n, 0)


def apply_odd_butterfly(x, out=None) -> tuple[np.ndarray, OpCount]:
    """Odd-length butterfly with a single scaled middle line.

    For length m = n - 1 with n = 2^t: out[k] = x[k] + x[m-1-k] and
    out[n/2+k] = x[k] - x[m-1-k] for k < n/2 - 1, while the middle entry
    is scaled, out[n/2-1] = sqrt(2) * x[n/2-1].  Costs (n-2, 1).
    """
    x = _as_signal(x)
    m = x.shape[0]
    n = m + 1
    if m % 2 == 0 or n & (n - 1) != 0:
        raise SizeError(
            f"odd butterfly needs length 2^t - 1, got {m} (length+1 must be a power of two)"
        )
    out = _out_buffer(x, out)
    h = n // 2
    if m == 1:
        out[0] = SQRT2 * x[0]
        return out, OpCount(0, 1)
    mirrored = x[m - 1 : h - 1 : -1]
    out[: h - 1] = x[: h - 1] + mirrored
    out[h - 1] = SQRT2 * x[h - 1]
    out[h:] = x[: h - 1] - mirrored
    return out, OpCount(n - 2, 1)


def apply_mixer(x, out=None) -> tuple[np.ndarray, OpCount]:
    """Scaled post-combination mixer for even length n >= 4.

    Internally reverses the top half and sign-alternates the bottom half
    (both free), then combines:

        out[0]     = sqrt(2) * x[n/2-1]
        out[1+j]   =  x[n/2-2-j] - (-1)^j * x[n/2+j]     (j < n/2-1)
        out[n/2+j] = -x[n/2-2-j] - (-1)^j * x[n/2+j]
        out[n-1]   = (-1)^(n/2) * sqrt(2) * x[n-1]

    Costs (n-2, 2): the two scaled end lines are the only multiplications.
    """
    x = _as_signal(x, 4)
    n = x.shape[0]
    if n % 2 != 0:
        raise SizeError(f"mixer needs an even length >= 4, got {n}")
    out = _out_buffer(x, out)
    h = n // 2
    top = x[h - 2 :: -1]
    alt = np.ones(h - 1)
    alt[1::2] = -1.0
    bottom = alt * x[h : n - 1]
    out[0] = SQRT2 * x[h - 1]
    out[1:h] = top - bottom
    out[h : n - 1] = -top - bottom
    out[n - 1] = SQRT2 * x[n - 1] if h % 2 == 0 else -SQRT2 * x[n - 1]
    return out, OpCount(n - 2, 2)


def apply_rotation_reflection(
    x, consts: RotationConstants, out=None
) -> tuple[np.ndarray, OpCount]:
    """Orthogonal rotation-reflection pairing entries k and n-1-k.

    With s_k = sin((2k+1)*pi/(4n)) and c_k = cos((2k+1)*pi/(4n)):

        out[k]     = (-1)^k * (s_k * x[k] + c_k * x[n-1-k])
        out[n-1-k] = -c_k * x[k] + s_k * x[n-1-k]

    for k < n/2.  Costs (n, 2n).
    """
    x = _as_signal(x, 2)
    n = x.shape[0]
    if n % 2 != 0:
        raise SizeError(f"rotation-reflection needs an even length, got {n}")
    if consts.size != n:
        raise PlanError(
            f"rotation constants built for size {consts.size}, signal has length {n}"
        )
    out = _out_buffer(x, out)
    h = n // 2
    s = consts.sines
    c = consts.cosines
    top = x[:h]
    mirrored = x[n - 1 : h - 1 : -1]
    sign = np.ones(h)
    sign[1::2] = -1.0
    out[:h] = sign * (s * top + c * mirrored)
    out[n - 1 : h - 1 : -1] = -c * top + s * mirrored
    return out, OpCount(n, 2 * n)
