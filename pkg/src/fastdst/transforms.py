"""Completely recursive discrete sine transforms of types I-IV.

The four transforms are computed by radix-2 recursions built entirely
from the sparse kernels in :mod:`fastdst.kernels`:

* type II (order n):  butterfly, then a type-IV and a type-II half,
  then the inverse even-odd shuffle;
* type IV (order n):  rotation-reflection, then two type-II halves,
  then the mixer and the inverse shuffle;
* type III (order n): even-odd shuffle, then a type-IV and a type-III
  half, then the butterfly transpose;
* type I (order n, length n-1): odd butterfly, then a type-III half and
  a type-I half, then the inverse shuffle.

The recursion produces the transform scaled by sqrt(n); that scaling
makes every butterfly stage additions-only, which is what gives the low
multiplication count.  The unitary transform is obtained by one final
multiplication of each output by 1/sqrt(n).

Two execution paths exist.  The public ``dst*_scaled`` functions run an
instrumented reference recursion that applies the kernels one by one and
measures the exact operation count of each call.  ``TransformPlan.execute``
runs the same recursion through a precompiled pass schedule
(:mod:`fastdst.compiled`); it performs identical floating-point
operations and is the fast path used by the CLI and the benchmarks.

A plan's trigonometric constants are immutable and shareable across
threads, but its scratch buffers are not: run at most one transform at a
time per plan instance and give each thread its own plan.
"""

from __future__ import annotations

import enum
import math

import numpy as np

from . import compiled, kernels
from .errors import NumericError, PlanError, SizeError
from .kernels import SQRT2, OpCount, RotationConstants


class TransformKind(enum.Enum):
    """Selects which of the four sine transforms to run."""

    DST1 = 1
    DST2 = 2
    DST3 = 3
    DST4 = 4

    @property
    def inverse(self) -> "TransformKind":
        """Kind whose unitary transform inverts this kind's unitary transform."""
        return _INVERSE[self]

    def signal_length(self, order: int) -> int:
        """Signal length for a transform of the given order n = 2^t."""
        return order - 1 if self is TransformKind.DST1 else order

    def order_for_length(self, length: int) -> int:
        """Transform order n = 2^t for a signal of the given length."""
        return length + 1 if self is TransformKind.DST1 else length

    @classmethod
    def parse(cls, value) -> "TransformKind":
        if isinstance(value, cls):
            return value
        if isinstance(value, int):
            return cls(value)
        if isinstance(value, str):
            v = value.strip().upper()
            if v in {"1", "2", "3", "4"}:
                return cls(int(v))
            if v.startswith("DST"):
                return cls(int(v[3:]))
        raise ValueError(f"not a transform kind: {value!r}")


_INVERSE = {
    TransformKind.DST1: TransformKind.DST1,
    TransformKind.DST2: TransformKind.DST3,
    TransformKind.DST3: TransformKind.DST2,
    TransformKind.DST4: TransformKind.DST4,
}


class ScaleMode(enum.Enum):
    """Output scaling: the sqrt(n)-scaled transform or the unitary one."""

    SCALED = "scaled"
    UNITARY = "unitary"


def _is_pow2(n: int) -> bool:
    return n >= 1 and (n & (n - 1)) == 0


def validate_length(kind: TransformKind, length: int) -> int:
    """Check the length contract for ``kind`` and return the order n."""
    if kind is TransformKind.DST1:
        if length < 1 or not _is_pow2(length + 1):
            raise SizeError(
                f"type-I length+1 must be a power of two (got length {length})"
            )
        return length + 1
    if length < 2 or not _is_pow2(length):
        raise SizeError(f"length must be a power of two >= 2 (got {length})")
    return length


def _validate_signal(kind: TransformKind, x) -> np.ndarray:
    x = np.asarray(x, dtype=np.float64)
    if x.ndim != 1:
        raise SizeError(f"signal must be one-dimensional, got shape {x.shape}")
    validate_length(kind, x.shape[0])
    if not np.all(np.isfinite(x)):
        raise NumericError("non-finite input detected")
    return x


def _rotation_sizes(kind_code: int, m: int, acc: set[int]) -> None:
    """Collect the sizes at which the recursion applies rotation constants."""
    if m <= 2:
        if kind_code == 4:
            acc.add(2)
        return
    h = (m + 1) // 2
    if kind_code == 2:
        _rotation_sizes(4, h, acc)
        _rotation_sizes(2, h, acc)
    elif kind_code == 3:
        _rotation_sizes(4, h, acc)
        _rotation_sizes(3, h, acc)
    elif kind_code == 4:
        acc.add(m)
        _rotation_sizes(2, h, acc)
    else:
        _rotation_sizes(3, h, acc)
        _rotation_sizes(1, h - 1, acc)


class TransformPlan:
    """Precomputed constants, scratch buffers, and pass schedules.

    A plan is built for a (kind, order) pair and may also execute the
    inverse kind (type II and III plans are interchangeable; types I and
    IV are self-inverse).  Construction does all trigonometric work and
    all scheduling; executing a plan performs no allocation beyond the
    returned output vector.
    """

    def __init__(self, kind, n: int):
        kind = TransformKind.parse(kind)
        if n < 2 or not _is_pow2(n):
            raise SizeError(f"transform order must be a power of two >= 2, got {n}")
        self.kind = kind
        self.n = n
        self.t = n.bit_length() - 1
        sizes: set[int] = set()
        _rotation_sizes(kind.value, kind.signal_length(n), sizes)
        self.constants: dict[int, RotationConstants] = {
            size: kernels.rotation_constants(size) for size in sorted(sizes)
        }
        self.unit_scale = 1.0 / math.sqrt(n)
        self._buf0 = np.zeros(n)
        self._buf1 = np.zeros(n)
        self._sines, self._cosines, self._lvl_off = compiled.flatten_constants(
            self.constants, n
        )
        self._programs: dict[TransformKind, tuple[np.ndarray, OpCount]] = {}
        self._program(kind)

    def _program(self, kind: TransformKind) -> tuple[np.ndarray, OpCount]:
        if kind not in self._programs:
            self._programs[kind] = compiled.schedule(
                kind.value, kind.signal_length(self.n)
            )
        return self._programs[kind]

    def check(self, kind: TransformKind, length: int | None = None) -> None:
        if kind not in (self.kind, self.kind.inverse):
            raise PlanError(f"plan built for {self.kind.name} cannot run {kind.name}")
        if length is not None and length != kind.signal_length(self.n):
            raise PlanError(
                f"plan for order {self.n} expects length "
                f"{kind.signal_length(self.n)}, got {length}"
            )

    def counts(self, kind=None) -> OpCount:
        """Operation count of one execution for ``kind`` (default: plan kind)."""
        kind = self.kind if kind is None else TransformKind.parse(kind)
        self.check(kind, kind.signal_length(self.n))
        return self._program(kind)[1]

    def execute(self, x, kind=None) -> tuple[np.ndarray, OpCount]:
        """Run the compiled pass schedule on ``x``.

        Returns the sqrt(n)-scaled transform and its operation count.
        """
        kind = self.kind if kind is None else TransformKind.parse(kind)
        self.check(kind)
        x = _validate_signal(kind, x)
        self.check(kind, x.shape[0])
        prog, ops = self._program(kind)
        m = x.shape[0]
        self._buf0[:m] = x
        compiled.execute(
            prog, self._buf0, self._buf1, self._sines, self._cosines, self._lvl_off
        )
        return self._buf0[:m].copy(), ops


class _Counter:
    __slots__ = ("adds", "mults")

    def __init__(self):
        self.adds = 0
        self.mults = 0

    def tally(self, ops: OpCount) -> None:
        self.adds += ops.adds
        self.mults += ops.mults


def _reference(kind_code, src, dst, off, m, plan, counter) -> None:
    """Instrumented recursion; input and output in ``src[off:off+m]``."""
    if m <= 2:
        if kind_code == 4:
            rc = plan.constants[2]
            s = rc.sines[0]
            c = rc.cosines[0]
            a = src[off]
            b = src[off + 1]
            u = s * a + c * b
            v = c * a - s * b
            src[off] = SQRT2 * u
            src[off + 1] = SQRT2 * v
            counter.tally(OpCount(2, 6))
        elif kind_code == 1:
            src[off] = SQRT2 * src[off]
            counter.tally(OpCount(0, 1))
        else:
            a = src[off]
            b = src[off + 1]
            src[off] = a + b
            src[off + 1] = a - b
            counter.tally(OpCount(2, 0))
        return
    h = (m + 1) // 2
    sv = src[off : off + m]
    dv = dst[off : off + m]
    if kind_code == 2:
        _, ops = kernels.apply_butterfly(sv, out=dv)
        counter.tally(ops)
        _reference(4, dst, src, off, h, plan, counter)
        _reference(2, dst, src, off + h, h, plan, counter)
        _, ops = kernels.apply_even_odd_perm_inverse(dv, out=sv)
        counter.tally(ops)
    elif kind_code == 3:
        _, ops = kernels.apply_even_odd_perm(sv, out=dv)
        counter.tally(ops)
        _reference(4, dst, src, off, h, plan, counter)
        _reference(3, dst, src, off + h, h, plan, counter)
        _, ops = kernels.apply_butterfly_transpose(dv, out=sv)
        counter.tally(ops)
    elif kind_code == 4:
        _, ops = kernels.apply_rotation_reflection(sv, plan.constants[m], out=dv)
        counter.tally(ops)
        _reference(2, dst, src, off, h, plan, counter)
        _reference(2, dst, src, off + h, h, plan, counter)
        _, ops = kernels.apply_mixer(dv, out=sv)
        counter.tally(ops)
        _, ops = kernels.apply_even_odd_perm_inverse(sv, out=dv)
        counter.tally(ops)
        sv[:] = dv
    else:  # kind 1
        _, ops = kernels.apply_odd_butterfly(sv, out=dv)
        counter.tally(ops)
        _reference(3, dst, src, off, h, plan, counter)
        _reference(1, dst, src, off + h, h - 1, plan, counter)
        _, ops = kernels.apply_even_odd_perm_inverse(dv, out=sv)
        counter.tally(ops)


def _run_scaled(kind: TransformKind, x, plan) -> tuple[np.ndarray, OpCount, TransformPlan]:
    if plan is not None:
        plan.check(kind)
    x = _validate_signal(kind, x)
    if plan is None:
        plan = TransformPlan(kind, kind.order_for_length(x.shape[0]))
    plan.check(kind, x.shape[0])
    m = x.shape[0]
    plan._buf0[:m] = x
    counter = _Counter()
    _reference(kind.value, plan._buf0, plan._buf1, 0, m, plan, counter)
    return plan._buf0[:m].copy(), OpCount(counter.adds, counter.mults), plan


def dst_scaled(kind, x, plan: TransformPlan | None = None) -> tuple[np.ndarray, OpCount]:
    """Apply the sqrt(n)-scaled transform of the given kind to ``x``.

    Parameters
    ----------
    kind : TransformKind or int or str
        Which transform to run (1..4).
    x : array_like
        Signal of length 2^t (2^t - 1 for type I).
    plan : TransformPlan, optional
        Reusable constants and scratch space; built on the fly if absent.

    Returns
    -------
    (ndarray, OpCount)
        The transformed signal and the exact measured operation count.
    """
    kind = TransformKind.parse(kind)
    y, ops, _ = _run_scaled(kind, x, plan)
    return y, ops


def dst1_scaled(x, plan=None):
    """sqrt(n)-scaled type-I transform of a length 2^t - 1 signal."""
    return dst_scaled(TransformKind.DST1, x, plan)


def dst2_scaled(x, plan=None):
    """sqrt(n)-scaled type-II transform of a length 2^t signal."""
    return dst_scaled(TransformKind.DST2, x, plan)


def dst3_scaled(x, plan=None):
    """sqrt(n)-scaled type-III transform of a length 2^t signal."""
    return dst_scaled(TransformKind.DST3, x, plan)


def dst4_scaled(x, plan=None):
    """sqrt(n)-scaled type-IV transform of a length 2^t signal."""
    return dst_scaled(TransformKind.DST4, x, plan)


def dst_unitary(kind, x, plan: TransformPlan | None = None) -> np.ndarray:
    """Apply the unitary (norm-preserving) transform of the given kind.

    Computed as the scaled transform followed by one multiplication of
    each entry by 1/sqrt(n).  That final pass costs n multiplications
    which are reported separately (see ``unitary_scale_count``) and are
    not part of the recursion's count.
    """
    kind = TransformKind.parse(kind)
    y, _, plan = _run_scaled(kind, x, plan)
    return y * plan.unit_scale


def idst_unitary(kind, x, plan: TransformPlan | None = None) -> np.ndarray:
    """Invert the unitary transform of the given kind.

    Orthogonality makes the inverse another member of the family:
    type II and type III invert each other, types I and IV invert
    themselves.
    """
    kind = TransformKind.parse(kind)
    return dst_unitary(kind.inverse, x, plan)


def unitary_scale_count(n: int) -> OpCount:
    """Cost of the final 1/sqrt(n) pass of the unitary transform."""
    return OpCount(0, n)
