"""Compiled execution path for the recursive transforms.

The recursion is linearized once per plan into a flat pass schedule (a
small integer table), and a single non-recursive numba kernel interprets
that schedule over two ping-pong buffers.  The schedule performs exactly
the same floating-point operations, in the same order, as the
instrumented reference recursion in :mod:`fastdst.transforms`; only the
dispatch overhead differs.

Pass layout (one row per pass): ``(opcode, offset, length, src, dst)``
where ``src``/``dst`` select one of the two work buffers.
"""

from __future__ import annotations

import math

import numpy as np
from numba import njit

from .errors import PlanError
from .kernels import OpCount, RotationConstants

SQRT2 = math.sqrt(2.0)

# pass opcodes
BF = 0    # scaled butterfly, x -> y
SPT = 1   # even-odd scatter (inverse shuffle), y -> x
ROT = 2   # rotation-reflection, x -> y
VPT = 3   # mixer fused with the even-odd scatter, y -> x
GP = 4    # even-odd gather, x -> y
BFT = 5   # scaled butterfly transpose, y -> x
HAT = 6   # odd-length scaled butterfly, x -> y
B2 = 7    # 2-point add/subtract base block, in place
B4 = 8    # 2-point rotation + sqrt(2) scale base block, in place
B1 = 9    # 1-point sqrt(2) scale base block, in place

_PASS_COUNTS = {
    BF: lambda m: (m, 0),
    SPT: lambda m: (0, 0),
    ROT: lambda m: (m, 2 * m),
    VPT: lambda m: (m - 2, 2),
    GP: lambda m: (0, 0),
    BFT: lambda m: (m, 0),
    HAT: lambda m: (m - 1, 1),
    B2: lambda m: (2, 0),
    B4: lambda m: (2, 6),
    B1: lambda m: (0, 1),
}


def schedule(kind_code: int, length: int) -> tuple[np.ndarray, OpCount]:
    """Linearize the recursion for one transform into a pass table.

    ``kind_code`` is 1..4; ``length`` is the signal length (2^t, or
    2^t - 1 for kind 1).  Returns the pass table and the structural
    operation count of the whole schedule.
    """
    passes: list[tuple[int, int, int, int, int]] = []

    def rec(kind: int, off: int, m: int, xb: int) -> None:
        yb = 1 - xb
        if m <= 2:
            if kind == 4:
                passes.append((B4, off, 2, xb, xb))
            elif kind == 1:
                passes.append((B1, off, 1, xb, xb))
            else:
                passes.append((B2, off, 2, xb, xb))
            return
        h = (m + 1) // 2
        if kind == 2:
            passes.append((BF, off, m, xb, yb))
            rec(4, off, h, yb)
            rec(2, off + h, h, yb)
            passes.append((SPT, off, m, yb, xb))
        elif kind == 3:
            passes.append((GP, off, m, xb, yb))
            rec(4, off, h, yb)
            rec(3, off + h, h, yb)
            passes.append((BFT, off, m, yb, xb))
        elif kind == 4:
            passes.append((ROT, off, m, xb, yb))
            rec(2, off, h, yb)
            rec(2, off + h, h, yb)
            passes.append((VPT, off, m, yb, xb))
        else:  # kind 1, m = 2^s - 1
            passes.append((HAT, off, m, xb, yb))
            rec(3, off, h, yb)
            rec(1, off + h, h - 1, yb)
            passes.append((SPT, off, m, yb, xb))

    rec(kind_code, 0, length, 0)
    adds = mults = 0
    for op, _, m, _, _ in passes:
        a, mu = _PASS_COUNTS[op](m)
        adds += a
        mults += mu
    return np.array(passes, dtype=np.int64), OpCount(adds, mults)


def flatten_constants(
    consts: dict[int, RotationConstants], n: int
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Pack per-size rotation constants into flat arrays indexed by level.

    The constants for size m = 2^t start at ``lvl_off[t]`` and span m/2
    entries.  Sizes absent from ``consts`` are never touched by the
    schedules built against them.
    """
    t_max = max(n.bit_length() - 1, 1)
    lvl_off = np.zeros(t_max + 1, dtype=np.int64)
    total = 0
    for t in range(1, t_max + 1):
        lvl_off[t] = total
        total += 1 << (t - 1)
    sines = np.zeros(total)
    cosines = np.zeros(total)
    for size, rc in consts.items():
        t = size.bit_length() - 1
        if size != 1 << t or t > t_max:
            raise PlanError(f"rotation constants for unsupported size {size}")
        sines[lvl_off[t] : lvl_off[t] + size // 2] = rc.sines
        cosines[lvl_off[t] : lvl_off[t] + size // 2] = rc.cosines
    return sines, cosines, lvl_off


@njit(cache=True)
def execute(prog, b0, b1, sines, cosines, lvl_off):  # pragma: no cover - compiled
    for p in range(prog.shape[0]):
        op = prog[p, 0]
        off = prog[p, 1]
        m = prog[p, 2]
        src = b0 if prog[p, 3] == 0 else b1
        dst = b0 if prog[p, 4] == 0 else b1
        if op == 0:  # BF
            h = m // 2
            for k in range(h):
                a = src[off + k]
                b = src[off + m - 1 - k]
                dst[off + k] = a + b
                dst[off + h + k] = a - b
        elif op == 1:  # SPT
            h = (m + 1) // 2
            for k in range(h):
                dst[off + 2 * k] = src[off + k]
            for k in range(m - h):
                dst[off + 2 * k + 1] = src[off + h + k]
        elif op == 2:  # ROT
            h = m // 2
            t = 0
            mm = m
            while mm > 1:
                mm >>= 1
                t += 1
            base = lvl_off[t]
            sign = 1.0
            for k in range(h):
                s = sines[base + k]
                c = cosines[base + k]
                a = src[off + k]
                b = src[off + m - 1 - k]
                dst[off + k] = sign * (s * a + c * b)
                dst[off + m - 1 - k] = -c * a + s * b
                sign = -sign
        elif op == 3:  # VPT
            h = m // 2
            dst[off] = SQRT2 * src[off + h - 1]
            sj = 1.0
            for j in range(h - 1):
                wa = src[off + h - 2 - j]
                wb = sj * src[off + h + j]
                dst[off + 2 * (1 + j)] = wa - wb
                dst[off + 2 * j + 1] = -wa - wb
                sj = -sj
            if h % 2 == 0:
                dst[off + m - 1] = SQRT2 * src[off + m - 1]
            else:
                dst[off + m - 1] = -SQRT2 * src[off + m - 1]
        elif op == 4:  # GP
            h = (m + 1) // 2
            for k in range(h):
                dst[off + k] = src[off + 2 * k]
            for k in range(m - h):
                dst[off + h + k] = src[off + 2 * k + 1]
        elif op == 5:  # BFT
            h = m // 2
            for k in range(h):
                dst[off + k] = src[off + k] + src[off + h + k]
            for k in range(h):
                dst[off + h + k] = src[off + h - 1 - k] - src[off + m - 1 - k]
        elif op == 6:  # HAT
            h = (m + 1) // 2
            for k in range(h - 1):
                a = src[off + k]
                b = src[off + m - 1 - k]
                dst[off + k] = a + b
                dst[off + h + k] = a - b
            dst[off + h - 1] = SQRT2 * src[off + h - 1]
        elif op == 7:  # B2
            a = src[off]
            b = src[off + 1]
            dst[off] = a + b
            dst[off + 1] = a - b
        elif op == 8:  # B4
            s = sines[lvl_off[1]]
            c = cosines[lvl_off[1]]
            a = src[off]
            b = src[off + 1]
            u = s * a + c * b
            v = c * a - s * b
            dst[off] = SQRT2 * u
            dst[off + 1] = SQRT2 * v
        else:  # B1
            dst[off] = SQRT2 * src[off]
