"""Closed-form operation counts of the recursive transforms.

For order n = 2^t the recursion costs, exactly:

    type II / III: adds = (4/3)nt - (8/9)n - (1/9)(-1)^t + 1
                   mults = (2/3)nt + (2/9)n + (7/9)(-1)^t - 1
    type IV:       adds = (4/3)nt - (2/9)n + (2/9)(-1)^t
                   mults = (2/3)nt + (14/9)n - (14/9)(-1)^t
    type I:        adds = (4/3)nt - (14/9)n + (1/18)(-1)^t - t + 3/2
                   mults = (2/3)nt - (10/9)n - (7/18)(-1)^t + 3/2

All formulas are evaluated in exact rational arithmetic; the alternating
terms always cancel the ninths and eighteenths, so the results are exact
integers and anything else is a hard error.  ``recurrence_counts``
recomputes the same numbers by literally iterating the coupled cost
recurrences from the base cases, as an independent check on the closed
forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import SizeError
from .transforms import TransformKind, _is_pow2

# base-case costs at t = 1 (order 2): (adds, mults)
_BASE = {
    TransformKind.DST1: (0, 1),
    TransformKind.DST2: (2, 0),
    TransformKind.DST3: (2, 0),
    TransformKind.DST4: (2, 6),
}


@dataclass(frozen=True)
class CountFormulaResult:
    kind: TransformKind
    n: int
    t: int
    adds: int
    mults: int

    def as_tuple(self) -> tuple[int, int]:
        return (self.adds, self.mults)


def _order(n: int) -> int:
    if n < 2 or not _is_pow2(n):
        raise SizeError(f"count formulas need an order n = 2^t >= 2, got {n}")
    return n.bit_length() - 1


def _exact_int(value: Fraction) -> int:
    if value.denominator != 1:
        raise ArithmeticError(f"count formula evaluated to non-integer {value}")
    if value < 0:
        raise ArithmeticError(f"count formula evaluated to negative {value}")
    return int(value)


def formula_counts(kind, n: int) -> CountFormulaResult:
    """Evaluate the closed forms for the given kind and order ``n = 2^t``.

    For type I the result refers to the length n-1 transform.  At t = 1
    the stated base-case costs are returned directly (the closed forms
    reproduce them, which the tests confirm).
    """
    kind = TransformKind.parse(kind)
    t = _order(n)
    if t == 1:
        adds, mults = _BASE[kind]
        return CountFormulaResult(kind, n, t, adds, mults)
    nt = Fraction(n * t)
    nn = Fraction(n)
    alt = Fraction((-1) ** t)
    if kind in (TransformKind.DST2, TransformKind.DST3):
        adds = Fraction(4, 3) * nt - Fraction(8, 9) * nn - Fraction(1, 9) * alt + 1
        mults = Fraction(2, 3) * nt + Fraction(2, 9) * nn + Fraction(7, 9) * alt - 1
    elif kind is TransformKind.DST4:
        adds = Fraction(4, 3) * nt - Fraction(2, 9) * nn + Fraction(2, 9) * alt
        mults = Fraction(2, 3) * nt + Fraction(14, 9) * nn - Fraction(14, 9) * alt
    else:
        adds = (
            Fraction(4, 3) * nt
            - Fraction(14, 9) * nn
            + Fraction(1, 18) * alt
            - t
            + Fraction(3, 2)
        )
        mults = (
            Fraction(2, 3) * nt
            - Fraction(10, 9) * nn
            - Fraction(7, 18) * alt
            + Fraction(3, 2)
        )
    return CountFormulaResult(kind, n, t, _exact_int(adds), _exact_int(mults))


def recurrence_counts(kind, n: int) -> CountFormulaResult:
    """Iterate the coupled cost recurrences from the base cases.

    Per recursion level: a type-II transform costs one type-II and one
    type-IV half plus n butterfly additions; a type-IV transform costs
    two type-II halves plus the rotation (n adds, 2n mults) and the
    mixer (n-2 adds, 2 mults); type III mirrors type II; type I costs a
    type-III half, a type-I half, and the odd butterfly (n-2 adds, one
    mult).
    """
    kind = TransformKind.parse(kind)
    t = _order(n)
    a = {k: _BASE[k][0] for k in TransformKind}
    m = {k: _BASE[k][1] for k in TransformKind}
    for s in range(2, t + 1):
        size = 1 << s
        a_prev = dict(a)
        m_prev = dict(m)
        a[TransformKind.DST2] = (
            a_prev[TransformKind.DST2] + a_prev[TransformKind.DST4] + size
        )
        m[TransformKind.DST2] = m_prev[TransformKind.DST2] + m_prev[TransformKind.DST4]
        a[TransformKind.DST3] = (
            a_prev[TransformKind.DST4] + a_prev[TransformKind.DST3] + size
        )
        m[TransformKind.DST3] = m_prev[TransformKind.DST4] + m_prev[TransformKind.DST3]
        a[TransformKind.DST4] = (
            2 * a_prev[TransformKind.DST2] + (size - 2) + size
        )
        m[TransformKind.DST4] = 2 * m_prev[TransformKind.DST2] + 2 + 2 * size
        a[TransformKind.DST1] = (
            a_prev[TransformKind.DST3] + a_prev[TransformKind.DST1] + (size - 2)
        )
        m[TransformKind.DST1] = (
            m_prev[TransformKind.DST3] + m_prev[TransformKind.DST1] + 1
        )
    return CountFormulaResult(kind, n, t, a[kind], m[kind])


@dataclass(frozen=True)
class CountRow:
    kind: TransformKind
    n: int
    adds: int
    mults: int
    nlogn: int


def count_table(t_max: int) -> list[CountRow]:
    """Count table rows for every kind and t = 1 .. t_max.

    The n column is the order 2^t (type-I rows refer to the length n-1
    transform) and nlogn = n * log2(n) is the reference column.
    """
    if not 1 <= t_max <= 20:
        raise SizeError(f"t_max must be between 1 and 20, got {t_max}")
    rows = []
    for kind in TransformKind:
        for t in range(1, t_max + 1):
            n = 1 << t
            res = formula_counts(kind, n)
            rows.append(CountRow(kind, n, res.adds, res.mults, n * t))
    return rows
