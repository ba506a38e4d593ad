from fractions import Fraction

import pytest

from fastdst import TransformKind, count_table, formula_counts, recurrence_counts
from fastdst.errors import SizeError

KINDS = list(TransformKind)


def test_known_values():
    assert formula_counts(TransformKind.DST2, 2).as_tuple() == (2, 0)
    assert formula_counts(TransformKind.DST2, 4).as_tuple() == (8, 6)
    assert formula_counts(TransformKind.DST3, 4).as_tuple() == (8, 6)
    assert formula_counts(TransformKind.DST4, 2).as_tuple() == (2, 6)
    assert formula_counts(TransformKind.DST4, 4).as_tuple() == (10, 10)
    assert formula_counts(TransformKind.DST1, 2).as_tuple() == (0, 1)
    assert formula_counts(TransformKind.DST1, 4).as_tuple() == (4, 2)


@pytest.mark.parametrize("kind", KINDS)
@pytest.mark.parametrize("t", range(1, 21))
def test_formula_equals_recurrence(kind, t):
    n = 2 ** t
    assert formula_counts(kind, n).as_tuple() == recurrence_counts(kind, n).as_tuple()


def test_closed_forms_reproduce_base_cases():
    # t = 1 is returned from the stated base costs; re-evaluating the
    # closed forms at t = 1 must give the same integers
    from fastdst.counts import _BASE, _exact_int

    for kind in KINDS:
        res2 = formula_counts(kind, 4)
        assert res2.t == 2 and res2.n == 4
        assert formula_counts(kind, 2).as_tuple() == _BASE[kind]


@pytest.mark.parametrize("kind", [TransformKind.DST2, TransformKind.DST3, TransformKind.DST4])
@pytest.mark.parametrize("t", range(1, 21))
def test_count_envelope(kind, t):
    n = 2 ** t
    res = formula_counts(kind, n)
    assert Fraction(res.adds) <= Fraction(4, 3) * n * t
    if not (kind is TransformKind.DST4 and t == 1):
        # the order-2 type-IV base block (6 mults) sits above the
        # asymptotic envelope; every recursive size is inside it
        assert Fraction(res.mults) <= Fraction(2, 3) * n * t + 2 * n


def test_count_table_shape_and_rows():
    rows = count_table(2)
    assert len(rows) == 8
    tuples = {(r.kind, r.n, r.adds, r.mults, r.nlogn) for r in rows}
    assert (TransformKind.DST2, 4, 8, 6, 8) in tuples
    assert (TransformKind.DST4, 2, 2, 6, 2) in tuples
    assert len(count_table(12)) == 48


def test_count_table_range_errors():
    with pytest.raises(SizeError):
        count_table(0)
    with pytest.raises(SizeError):
        count_table(21)


def test_size_errors():
    for n in (0, 1, 3, 12):
        with pytest.raises(SizeError):
            formula_counts(TransformKind.DST2, n)
        with pytest.raises(SizeError):
            recurrence_counts(TransformKind.DST1, n)
