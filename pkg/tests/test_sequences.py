from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from homersenne.sequences import (
    cofactor,
    exact_div,
    hoj,
    hojl,
    hom_closed,
    hom_quotient,
    hom_recurrence,
    hom_stream,
    mersenne,
    mersenne_lucas,
)
from oracles import repunit_sum

ks = st.integers(1, 12)
ns = st.integers(0, 80)

# reference table, columns k = 1..5, rows n = 0..5
TABLE1 = {
    1: [0, 1, 3, 7, 15, 31],
    2: [0, 1, 5, 21, 85, 341],
    3: [0, 1, 9, 73, 585, 4681],
    4: [0, 1, 17, 273, 4369, 69905],
    5: [0, 1, 33, 1057, 33825, 1082401],
}


@pytest.mark.parametrize("n, expected", [(0, 0), (5, 31), (8, 255)])
def test_mersenne(n, expected):
    assert mersenne(n) == expected


@pytest.mark.parametrize("n, expected", [(0, 2), (1, 3), (6, 65)])
def test_mersenne_lucas(n, expected):
    assert mersenne_lucas(n) == expected


def test_mersenne_lists():
    assert [mersenne(n) for n in range(9)] == [0, 1, 3, 7, 15, 31, 63, 127, 255]
    assert [mersenne_lucas(n) for n in range(8)] == [2, 3, 5, 9, 17, 33, 65, 129]


@pytest.mark.parametrize("k, n, expected", [(3, 4, 585), (5, 5, 1082401), (1, 7, 127)])
def test_hom_recurrence(k, n, expected):
    assert hom_recurrence(k, n) == expected


@pytest.mark.parametrize("k, n, expected", [(4, 4, 4369), (2, 5, 341), (7, 1, 1)])
def test_hom_closed(k, n, expected):
    assert hom_closed(k, n) == expected


@pytest.mark.parametrize("k, n, expected", [(3, 2, 9), (2, 3, 21), (5, 0, 0)])
def test_hom_quotient(k, n, expected):
    assert hom_quotient(k, n) == expected


@pytest.mark.parametrize(
    "k, count, expected",
    [(3, 6, [0, 1, 9, 73, 585, 4681]), (1, 5, [0, 1, 3, 7, 15]), (4, 3, [0, 1, 17])],
)
def test_hom_stream(k, count, expected):
    assert hom_stream(k, count) == expected


def test_hom_stream_empty():
    assert hom_stream(2, 0) == []


@pytest.mark.parametrize("k, column", TABLE1.items())
def test_table1_all_paths(k, column):
    for n, value in enumerate(column):
        assert hom_recurrence(k, n) == hom_closed(k, n) == hom_quotient(k, n) == value


@pytest.mark.parametrize("k, n, expected", [(1, 3, 3), (2, 2, 5), (6, 0, 0)])
def test_hoj(k, n, expected):
    assert hoj(k, n) == expected


def test_hoj_k1_is_classical_jacobsthal():
    assert [hoj(1, n) for n in range(8)] == [0, 1, 1, 3, 5, 11, 21, 43]


@pytest.mark.parametrize("k, n, expected", [(1, 2, 5), (1, 0, 2), (3, 1, 1)])
def test_hojl(k, n, expected):
    assert hojl(k, n) == expected


def test_hojl_k1_is_classical_jacobsthal_lucas():
    assert [hojl(1, n) for n in range(7)] == [2, 1, 5, 7, 17, 31, 65]


def test_hojl_not_always_integral():
    assert hojl(2, 0) == Fraction(2, 5)
    assert hojl(3, 2) == Fraction(65, 7)


@given(ks, st.integers(0, 40))
def test_hojl_integral_for_odd_n_or_k1(k, n):
    if n % 2 or k == 1:
        assert hojl(k, n).denominator == 1


@pytest.mark.parametrize("k, n, expected", [(2, 2, 5), (1, 4, 15), (3, 1, 1)])
def test_cofactor(k, n, expected):
    assert cofactor(k, n) == expected


def test_cofactor_rejects_zero():
    with pytest.raises(ValueError):
        cofactor(2, 0)


@pytest.mark.parametrize("fn", [mersenne, mersenne_lucas])
def test_negative_index_rejected(fn):
    with pytest.raises(ValueError):
        fn(-1)


@pytest.mark.parametrize("fn", [hom_recurrence, hom_closed, hom_quotient, hoj, hojl])
def test_bad_order_rejected(fn):
    with pytest.raises(ValueError):
        fn(0, 3)
    with pytest.raises(TypeError):
        fn(1.0, 3)


def test_exact_div_raises_on_remainder():
    assert exact_div(63, 7) == 9
    with pytest.raises(ArithmeticError):
        exact_div(64, 7)


@given(ks, ns)
def test_three_paths_agree_with_brute_force(k, n):
    expected = repunit_sum(k, n)
    assert hom_recurrence(k, n) == hom_closed(k, n) == hom_quotient(k, n) == expected


@given(ks)
def test_seed_identities(k):
    assert hom_closed(k, 0) == 0
    assert hom_closed(k, 1) == 1
    assert hom_closed(k, 2) == 2**k + 1


@given(ks, ns)
def test_one_step_affine_form(k, n):
    assert hom_closed(k, n + 1) == 2**k * hom_closed(k, n) + 1


@given(ks, st.integers(1, 80))
def test_divisibility_witness(k, n):
    assert mersenne(k) * cofactor(k, n) == mersenne(k * n)


@given(ks, ns)
def test_monotone(k, n):
    assert hom_closed(k, n + 1) > hom_closed(k, n)


@given(ks, st.integers(0, 60))
def test_stream_matches_pointwise(k, count):
    assert hom_stream(k, count) == [hom_closed(k, n) for n in range(count)]


def test_oeis_prefixes(fixture_path):
    from homersenne.bfile import bfile_terms

    for k, anum in [(1, "000225"), (2, "002450"), (3, "023001")]:
        expected = bfile_terms(fixture_path(f"b{anum}.txt"), offset=0)
        assert hom_stream(k, len(expected)) == expected
