"""Hankel determinant checks against a permutation-expansion oracle."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from plcpkit.field import CoeffSeq, PrimeField
from plcpkit.hankel import (
    ApwwResult,
    HankelReport,
    apww_check,
    hankel_integer_pm1,
    hankel_mod_p,
    is_apwenian_hankel,
    is_apwenian_recurrence,
)
from plcpkit.seqgen import named_sequence

GF2 = PrimeField(2)


def perm_det(rows):
    # Leibniz expansion; exact, independent of any elimination code
    n = len(rows)
    total = 0
    for perm in itertools.permutations(range(n)):
        sign = 1
        for a in range(n):
            for b in range(a + 1, n):
                if perm[a] > perm[b]:
                    sign = -sign
        term = 1
        for i in range(n):
            term *= rows[i][perm[i]]
        total += sign * term
    return total


def hankel_rows(entries, n):
    return [list(entries[i : i + n]) for i in range(n)]


mod_p_inputs = st.sampled_from([2, 3, 5]).flatmap(
    lambda p: st.tuples(
        st.just(p), st.lists(st.integers(0, p - 1), min_size=1, max_size=9)
    )
)


@given(mod_p_inputs)
def test_mod_p_matches_permutation_expansion(pt):
    p, terms = pt
    c = CoeffSeq(PrimeField(p), terms, origin=0)
    m = (len(terms) + 1) // 2
    report = hankel_mod_p(c, m)
    assert report.modulus == p
    assert report.max_order == m
    for n in range(1, m + 1):
        assert report.values[n - 1] == perm_det(hankel_rows(terms, n)) % p


@given(mod_p_inputs)
def test_pivot_strategies_agree(pt):
    # over F2 this doubles as packed-kernel vs generic-elimination cross-check
    p, terms = pt
    c = CoeffSeq(PrimeField(p), terms, origin=0)
    m = (len(terms) + 1) // 2
    assert hankel_mod_p(c, m, pivot="row").values == hankel_mod_p(c, m, pivot="col").values


def test_unknown_pivot_rejected():
    # the strategy is consulted on the first zero pivot
    c = CoeffSeq(PrimeField(3), [0, 1, 2], origin=0)
    with pytest.raises(ValueError, match="pivot"):
        hankel_mod_p(c, 2, pivot="diagonal")


@given(st.lists(st.sampled_from([1, -1]), min_size=1, max_size=11))
def test_bareiss_matches_permutation_expansion(entries):
    m = (len(entries) + 1) // 2
    report = hankel_integer_pm1(entries, m)
    assert report.modulus is None
    for n in range(1, m + 1):
        assert report.values[n - 1] == perm_det(hankel_rows(entries, n))


def test_pm1_input_validation():
    with pytest.raises(ValueError, match=r"\+-1"):
        hankel_integer_pm1([1, 0, 1], 2)
    with pytest.raises(ValueError, match="max_order"):
        hankel_integer_pm1([1, -1, 1], 0)
    with pytest.raises(ValueError, match="insufficient terms"):
        hankel_integer_pm1([1, -1, 1], 3)


def test_mod_p_input_validation():
    s1 = CoeffSeq(GF2, [1, 0, 1], origin=1)
    with pytest.raises(ValueError, match="origin-0"):
        hankel_mod_p(s1, 1)
    c = s1.shift_index(0)
    with pytest.raises(ValueError, match="insufficient terms"):
        hankel_mod_p(c, 3)
    with pytest.raises(ValueError, match="max_order"):
        hankel_mod_p(c, 0)


def test_report_length_guard():
    with pytest.raises(ValueError, match="orders"):
        HankelReport(modulus=2, values=(1,), max_order=2, source_length=3)


def test_apww_small_orders_exact():
    res = apww_check(6)
    assert res.ok and bool(res)
    assert res.first_failure is None
    assert res.quotients == (1, -1, 1, 1, -1, -1)
    # reconstruct the determinants and confirm against the oracle
    entries = [1 - 2 * (i.bit_count() & 1) for i in range(11)]
    for n in range(1, 7):
        h = res.quotients[n - 1] * (1 << (n - 1))
        assert h == perm_det(hankel_rows(entries, n))


def test_apww_result_bool():
    assert not ApwwResult(False, 3, (1,), 2)
    assert ApwwResult(True, 1, (1,), None)


def test_apwenian_routes_agree_exhaustively():
    # determinant path and feedback-relation path decide identically
    for length in range(1, 11):
        for x in range(1 << (length - 1)):
            terms = [1] + [(x >> i) & 1 for i in range(length - 1)]
            c = CoeffSeq(GF2, terms, origin=0)
            assert is_apwenian_hankel(c) == is_apwenian_recurrence(c), terms


def test_apwenian_known_families():
    pd = named_sequence("pd", 64).shift_index(0)
    z = named_sequence("z", 64).shift_index(0)
    assert is_apwenian_hankel(pd)
    assert is_apwenian_hankel(z)
    flat = CoeffSeq(GF2, [1, 0, 0, 0], origin=0)
    assert not is_apwenian_hankel(flat)
    assert not is_apwenian_recurrence(flat)


def test_apwenian_input_validation():
    with pytest.raises(ValueError, match="F2"):
        is_apwenian_hankel(CoeffSeq(PrimeField(3), [1, 2, 1], origin=0))
    with pytest.raises(ValueError, match="origin-0"):
        is_apwenian_hankel(CoeffSeq(GF2, [1, 0, 1], origin=1))
    with pytest.raises(ValueError, match="leading"):
        is_apwenian_hankel(CoeffSeq(GF2, [0, 1, 1], origin=0))
    with pytest.raises(ValueError, match="leading"):
        is_apwenian_recurrence(CoeffSeq(GF2, [0, 1, 1], origin=0))


def test_apww_rejects_bad_order():
    with pytest.raises(ValueError, match="max_order"):
        apww_check(0)
