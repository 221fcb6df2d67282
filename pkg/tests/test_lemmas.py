from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lievanish.lemmas import (
    b_P,
    b_sharp_value,
    b_small_rank_sum,
    b_t,
    b_T,
    b_T_direct,
    d_P,
    f4_conjecture_values,
    g2_restricted_difference,
    g2_sum,
    verify_b_relations,
    verify_b_thresholds,
    verify_d_recursions,
    verify_f4_conjectures,
    verify_g2,
)


def test_type_d_suite_small_grid(fresh_memos):
    rep = verify_d_recursions(5, 4, 8)
    assert rep.rows and rep.ok, [r.as_dict() for r in rep.mismatches]


def test_type_d_rank_recursion_at_m_zero():
    for k in range(0, 8):
        assert d_P(0, k, 5) == d_P(0, k, 4) + d_P(-2, k - 8, 5)


@settings(max_examples=40, deadline=None)
@given(n=st.integers(4, 6), m=st.integers(1, 6), data=st.data())
def test_type_d_vanishes_below_m(n, m, data):
    k = data.draw(st.integers(0, m - 1))
    assert d_P(m, k, n) == 0


def test_type_b_relations_small_grid(fresh_memos):
    rep = verify_b_relations(3, 3, 6)
    assert rep.rows and rep.ok, [r.as_dict() for r in rep.mismatches]


def test_type_b_thresholds_small_grid(fresh_memos):
    rep = verify_b_thresholds(4, 4, 8)
    assert rep.rows and rep.ok, [r.as_dict() for r in rep.mismatches]


@pytest.mark.parametrize(
    "m,j,n,t",
    [(2, 1, 3, 5), (1, 1, 3, 2), (2, 2, 3, 3), (1, 2, 3, 4), (0, 3, 4, 3), (3, 4, 4, 6)],
)
def test_threshold_formula_cases(m, j, n, t):
    assert b_t(m, j, n) == t


@pytest.mark.parametrize("n", range(1, 6))
def test_type_b_boundary_value(n):
    assert b_P(-1, 0, 1, n) == 1
    assert b_P(-1, 1, 1, n) == 0
    assert b_P(-2, 0, 1, n) == 0


@settings(max_examples=60, deadline=None)
@given(n=st.integers(2, 4), m=st.integers(0, 3), k=st.integers(0, 8), data=st.data())
def test_type_b_tensor_rule_matches_assembled_formula(n, m, k, data):
    j = data.draw(st.integers(1, n))
    assert b_T(m, k, j, n) == b_T_direct(m, k, j, n)
    assert b_P(m, k, j, n) >= 0


@pytest.mark.parametrize("n,p", [(3, 7), (4, 11), (5, 11), (6, 13)])
def test_type_b_sharp_class(n, p, fresh_memos):
    via_p, direct = b_sharp_value(n, p)
    assert via_p == direct != 0


@pytest.mark.parametrize("n", [3, 4])
def test_type_b_small_rank_sums(n):
    assert [b_small_rank_sum(n, m) for m in range(0, 9, 2)] == [1] * 5


@pytest.mark.parametrize("a,b,k,value", [(3, 0, 2, 1), (5, 1, 4, 0), (7, 2, 8, 3), (1, 0, 0, 1)])
def test_g2_examples(a, b, k, value):
    assert g2_sum(a, b, k) == value


def test_g2_restricted_counts_start_at_one():
    assert g2_restricted_difference(0) == 1
    assert [g2_restricted_difference(c) for c in range(1, 7)] == [1, 1, 2, 2, 2, 3]


def test_g2_suite():
    rep = verify_g2(12)
    assert rep.ok and len(rep.rows) == 12 * 3 * 2 + 13


@pytest.mark.parametrize("m,expected", [(1, (0, 1, 1)), (2, (0, 0, 1)), (3, (0, 1, 1))])
def test_f4_values(m, expected):
    assert f4_conjecture_values(m) == expected


def test_f4_suite_and_guard():
    assert verify_f4_conjectures(range(1, 5)).ok
    with pytest.raises(ValueError):
        f4_conjecture_values(10)
    with pytest.raises(ValueError):
        verify_g2(41)
    with pytest.raises(ValueError):
        verify_b_thresholds(6)
    with pytest.raises(ValueError):
        verify_d_recursions(9)
