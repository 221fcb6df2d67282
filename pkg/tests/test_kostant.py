from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lievanish.kostant import (
    MemoBudgetExceeded,
    OracleTooLarge,
    PartitionQuery,
    alternating_sum,
    count,
    count_oracle,
    get_counter,
)
from lievanish.rootsys import build
from lievanish.weyl import dot, enumerate_group


def _two_rho(rs):
    return rs.integral_root_coords(tuple(2 for _ in range(rs.rank)))


@pytest.mark.parametrize("label", ["G2", "B3"])
def test_dp_matches_oracle_exhaustively(label):
    rs = build(label)
    box = [range(c + 1) for c in _two_rho(rs)]
    for parts in range(5):
        for target in itertools.product(*box):
            q = PartitionQuery(target, parts)
            assert count(rs, q) == count_oracle(rs, q), (target, parts)


def _random_query(rs, rng):
    roots = [r.simple_coords for r in rs.positive_roots]
    parts = rng.randint(0, 5)
    picks = [rng.choice(roots) for _ in range(parts)]
    target = [sum(col) for col in zip(*picks)] if picks else [0] * rs.rank
    # nudge some targets off the reachable set
    if rng.random() < 0.3:
        j = rng.randrange(rs.rank)
        target[j] = max(0, target[j] + rng.choice((-1, 1)))
    excluded = frozenset(rng.sample(roots, rng.randint(0, 2)))
    forced = ()
    if parts and rng.random() < 0.3:
        forced = ((rng.choice(roots), rng.randint(1, 2)),)
    return PartitionQuery(tuple(target), parts, excluded, forced)


@pytest.mark.parametrize("label", ["B4", "F4", "D4"])
def test_dp_matches_oracle_on_random_queries(label):
    rs = build(label)
    rng = random.Random(f"oracle-{label}")
    for _ in range(500):
        q = _random_query(rs, rng)
        assert count(rs, q) == count_oracle(rs, q), q


def test_examples():
    g2 = build("G2")
    assert count(g2, PartitionQuery((2, 2), 2)).value == 2
    assert count(g2, PartitionQuery((0, 0), 0)).value == 1
    assert count(g2, PartitionQuery((1, 1), 0)).value == 0


def test_oracle_refuses_large_queries():
    with pytest.raises(OracleTooLarge):
        count_oracle(build("E6"), PartitionQuery((1,) * 6, 2))
    with pytest.raises(OracleTooLarge):
        count_oracle(build("G2"), PartitionQuery((4, 4), 7))


def test_memo_budget_is_enforced(fresh_memos):
    rs = build("B5")
    counter = get_counter(rs, frozenset({(0, 0, 0, 0, 1)}), memo_budget=5)
    with pytest.raises(MemoBudgetExceeded):
        counter.count_vector((6, 8, 10, 12, 14), 12)


@settings(max_examples=200, deadline=None)
@given(label=st.sampled_from(["G2", "B3", "C3", "D4", "F4"]), data=st.data())
def test_exclusion_and_forcing_split_the_count(label, data):
    rs = build(label)
    roots = [r.simple_coords for r in rs.positive_roots]
    beta = data.draw(st.sampled_from(roots))
    target = tuple(data.draw(st.lists(st.integers(0, 6), min_size=rs.rank, max_size=rs.rank)))
    parts = data.draw(st.integers(0, 6))
    total = count(rs, PartitionQuery(target, parts)).value
    without = count(rs, PartitionQuery(target, parts, frozenset({beta}))).value
    with_beta = count(rs, PartitionQuery(target, parts, forced_min=((beta, 1),))).value
    assert total == without + with_beta
    shifted = tuple(a - b for a, b in zip(target, beta))
    assert with_beta == count(rs, PartitionQuery(shifted, parts - 1)).value if parts else with_beta == 0
    assert total >= 0 and without >= 0


@settings(max_examples=100, deadline=None)
@given(label=st.sampled_from(["G2", "B3", "C3", "A3"]), data=st.data())
def test_pruned_weyl_sum_matches_full_group_sum(label, data):
    rs = build(label)
    lam = tuple(data.draw(st.lists(st.integers(0, 8), min_size=rs.rank, max_size=rs.rank)))
    shift = tuple(data.draw(st.lists(st.integers(0, 2), min_size=rs.rank, max_size=rs.rank)))
    parts = data.draw(st.integers(0, 6))
    counter = get_counter(rs)
    naive = 0
    for u in enumerate_group(rs):
        nu = rs.integral_root_coords(tuple(a - b for a, b in zip(dot(u, lam).coords, shift)))
        if nu is not None:
            naive += u.sign * counter.count_vector(nu, parts)
    assert alternating_sum(rs, lam, shift, parts) == naive


def test_parallel_sum_is_deterministic():
    rs = build("B4")
    lam, shift = (2, 1, 0, 5), (0, 0, 0, 1)
    serial = alternating_sum(rs, lam, shift, 6)
    assert alternating_sum(rs, lam, shift, 6, workers=2) == serial
