from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lievanish.cohomology import least_nonvanishing
from lievanish.rootsys import build
from lievanish.theorems import OutOfTheoremScope, theorem_bound


@pytest.mark.parametrize(
    "label,p,r,variant,D,sharp",
    [
        ("E6", 13, 1, "universal", 16, True),
        ("E6", 13, 2, "universal", 32, True),
        ("E6", 17, 2, "universal", 54, None),
        ("E6", 17, 3, "universal", 93, True),
        ("E6", 19, 2, "universal", 64, None),
        ("E7", 19, 1, "universal", 27, True),
        ("E7", 23, 2, "universal", 78, True),
        ("E7", 29, 1, "universal", 55, True),
        ("E8", 31, 1, "universal", 59, True),
        ("D5", 11, 2, "universal", 24, True),
        ("B7", 17, 1, "universal", 31, True),
        ("B5", 13, 1, "universal", 21, True),
        ("B5", 11, 1, "universal", 15, True),
        ("B3", 7, 1, "universal", 6, True),
        ("B4", 11, 2, "universal", 18, None),
        ("G2", 7, 1, "universal", 6, None),
        ("F4", 13, 1, "universal", 17, None),
        ("C3", 7, 1, "universal", 5, True),
        ("A3", 5, 1, "universal", 3, None),
        ("E7", 19, 2, "adjoint", 70, True),
        ("D4", 7, 1, "twisted-adjoint", 11, True),
    ],
)
def test_recorded_bounds(label, p, r, variant, D, sharp):
    res = theorem_bound(build(label), p, r, variant)
    assert res.D == D
    assert res.sharp is sharp


def test_d4_cohomology_is_three_dimensional():
    assert theorem_bound(build("D4"), 7).cohomology == "k+k+k"
    assert theorem_bound(build("D6"), 13).cohomology == "k"


@pytest.mark.parametrize(
    "label,p,r,variant",
    [("G2", 5, 1, "universal"), ("B3", 7, 1, "adjoint"), ("E7", 19, 1, "twisted-adjoint"),
     ("E6", 13, 0, "universal"), ("E6", 13, 1, "sideways")],
)
def test_out_of_scope(label, p, r, variant):
    with pytest.raises(OutOfTheoremScope):
        theorem_bound(build(label), p, r, variant)


@given(label=st.sampled_from(["D4", "D5", "D6", "E6", "E7", "E8", "B7", "C4"]),
       p=st.sampled_from([31, 37, 41]), r=st.integers(1, 6))
def test_bounds_scale_with_r_when_sharp(label, p, r):
    rs = build(label)
    one = theorem_bound(rs, p, 1)
    many = theorem_bound(rs, p, r)
    if one.sharp and many.sharp:
        assert many.D == r * one.D
    # every recorded range contains the general one
    assert many.D >= r * (p - 2)


@pytest.mark.parametrize("label,p", [("D4", 7), ("D5", 11), ("B3", 7), ("B4", 11), ("E6", 13)])
def test_computed_degree_agrees_with_recorded_bound(label, p):
    rs = build(label)
    recs = least_nonvanishing(rs, p, 2 * p - 3)
    assert recs and recs[0].degree == theorem_bound(rs, p).D
