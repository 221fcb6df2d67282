"""Partition-function identities for types D, B, G2 and F4, checked by direct evaluation.

Every identity is tested by evaluating both sides as separate Weyl
alternating sums; no side is derived from the other.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

from .kostant import PartitionQuery, _COUNTERS, alternating_sum, count
from .report import TableReport
from .rootsys import RootSystem, build

__all__ = [
    "BnPValue",
    "BnTValue",
    "d_P",
    "b_P",
    "b_T",
    "b_T_direct",
    "b_t",
    "b_target",
    "verify_d_recursions",
    "verify_b_relations",
    "verify_b_thresholds",
    "verify_g2",
    "verify_f4_conjectures",
    "g2_sum",
    "g2_restricted_difference",
    "f4_conjecture_values",
    "release_memos",
]

D_MAX_RANK = 8
B_MAX_RANK = 5
G2_MAX_A = 40
F4_MAX_M = 9


def release_memos():
    """Drop every shared partition memo (they can reach gigabytes on large ranks)."""
    for c in _COUNTERS.values():
        c.clear()
    _COUNTERS.clear()


def _scaled(rs: RootSystem, j: int, c: int = 1) -> tuple[int, ...]:
    return tuple(c if i == j - 1 else 0 for i in range(rs.rank))


# -- type D -------------------------------------------------------------------

def d_P(m: int, k: int, n: int, workers: int = 1) -> int:
    """P(m,k,n): alternating sum of P_k(u . m eps_1) over W(D_n), with the boundary cases."""
    if m == 0 and k == 0:
        return 1
    if m < 1 or k < 0:
        return 0
    rs = build("D", n)
    return alternating_sum(rs, _scaled(rs, 1, m), rs.zero().coords, k, workers=workers)


def _d_shifted(m: int, k: int, n: int, sign: int, workers: int = 1) -> int:
    """Alternating sum of P_k(u . m eps_1 + sign * eps_1) over W(D_n)."""
    rs = build("D", n)
    shift = _scaled(rs, 1, -sign)
    return alternating_sum(rs, _scaled(rs, 1, m), shift, k, workers=workers)


def verify_d_recursions(n_max: int = 6, m_max: int = 6, k_max: int = 10, *,
                        f_n_max: int | None = None, f_m_max: int | None = None,
                        workers: int = 1) -> TableReport:
    """Check the type D identities on the grid 4 <= n <= n_max, 0 <= m <= m_max, 0 <= k <= k_max.

    ``f_n_max``/``f_m_max`` widen the P(m, m, n) = 1 family separately,
    since that family is cheap compared with the full grid.
    """
    if n_max > D_MAX_RANK or (f_n_max or 0) > D_MAX_RANK:
        raise ValueError(f"type D checks are limited to rank {D_MAX_RANK}")
    t0 = time.perf_counter()
    rep = TableReport("verify-d")
    for n in range(4, n_max + 1):
        for m in range(0, m_max + 1):
            for k in range(0, k_max + 1):
                base = {"n": n, "m": m, "k": k}
                if k < m:
                    rep.add({**base, "part": "a"}, 0, d_P(m, k, n, workers), "vanishing for k < m")
                if m >= 1:
                    rep.add({**base, "part": "b"}, d_P(m - 1, k, n, workers),
                            _d_shifted(m, k, n, -1, workers), "shift by -eps_1")
                plus = _d_shifted(m, k, n, +1, workers)
                rep.add({**base, "part": "d"}, d_P(m - 1, k - 2 * n + 2, n, workers), plus,
                        "shift by +eps_1, degree drop 2n-2")
                if n >= 5:
                    rep.add({**base, "part": "c"},
                            d_P(m + 1, k, n, workers) - d_P(m + 1, k, n - 1, workers), plus,
                            "shift by +eps_1 against rank n-1")
                    rep.add({**base, "part": "e"},
                            d_P(m, k, n - 1, workers) + d_P(m - 2, k - 2 * n + 2, n, workers),
                            d_P(m, k, n, workers), "rank recursion")
        release_memos()
    for n in range(4, (f_n_max or n_max) + 1):
        for m in range(0, (f_m_max or m_max) + 1, 2):
            rep.add({"n": n, "m": m, "k": m, "part": "f"}, 1, d_P(m, m, n, workers),
                    "P(m,m,n) = 1 for even m")
        release_memos()
    rep.runtime_ms = int(1000 * (time.perf_counter() - t0))
    return rep


# -- type B -------------------------------------------------------------------

@dataclass(frozen=True)
class BnPValue:
    m: int
    k: int
    j: int
    n: int
    value: int


@dataclass(frozen=True)
class BnTValue:
    m: int
    k: int
    j: int
    n: int
    value: int


def b_target(rs: RootSystem, m: int, j: int) -> tuple[int, ...]:
    """m eps_1 + (eps_1 + ... + eps_j) in fundamental-weight coordinates."""
    n = rs.rank
    vec = [m + 1] + [1 if i < j else 0 for i in range(1, n)]
    return rs.from_epsilon(vec).coords


def b_P(m: int, k: int, j: int, n: int, workers: int = 1) -> int:
    """P(m,k,j,n) for type B_n, including the boundary conventions."""
    if m == -1 and k == 0 and j == 1 and n >= 1:
        return 1
    if m < 0 or k < 0 or not 1 <= j <= n:
        return 0
    rs = build("B", n)
    return alternating_sum(rs, b_target(rs, m, j), rs.zero().coords, k, workers=workers)


def b_T(m: int, k: int, j: int, n: int, workers: int = 1) -> int:
    """T(m,k,j,n) assembled from P values (the Koszul-resolution formula)."""
    if m < 0 or k < 0 or not 1 <= j <= n:
        return 0
    total = sum(b_P(m - 1, k - i + 1, j, n, workers) for i in range(1, 2 * n + 1))
    total += sum(b_P(m, k - i + 1, j - 1, n - 1, workers) for i in range(1, 2 * n + 1))
    return total + b_P(m, k - n, j, n, workers)


def b_T_direct(m: int, k: int, j: int, n: int, workers: int = 1) -> int:
    """T(m,k,j,n) from the tensor product rule.

    Tensoring with the natural module shifts the partition target by each
    of its weights (+-eps_i and 0), so the multiplicity is a sum of
    alternating sums with those shifts.
    """
    if m < 0 or k < 0 or not 1 <= j <= n:
        return 0
    rs = build("B", n)
    lam = b_target(rs, m, j)
    shifts = [rs.zero().coords]
    for i in range(n):
        e = [0] * n
        e[i] = 1
        shifts.append(rs.from_epsilon(e).coords)
        e[i] = -1
        shifts.append(rs.from_epsilon(e).coords)
    return sum(alternating_sum(rs, lam, s, k, workers=workers) for s in shifts)


def b_t(m: int, j: int, n: int) -> int:
    """Degree below which P(m, k, j, n) vanishes."""
    if j % 2 and m % 2:
        return m + (j + 1) // 2
    if j % 2 == 0 and m % 2 == 0:
        return m + j // 2
    if j % 2 == 0:
        return m + 1 + (2 * n - j) // 2
    return m + 1 + (2 * n - j - 1) // 2


def _b_shift_sum(m: int, k: int, j: int, n: int, shift_eps1: int, workers: int = 1) -> int:
    """Alternating sum of P_k(u . (m eps_1 + eps_1 + ... + eps_j) - shift_eps1 * eps_1)."""
    rs = build("B", n)
    e1 = rs.from_epsilon([1] + [0] * (n - 1)).coords
    shift = tuple(shift_eps1 * c for c in e1)
    if j == 0:
        lam = rs.from_epsilon([m] + [0] * (n - 1)).coords
    else:
        lam = b_target(rs, m, j)
    return alternating_sum(rs, lam, shift, k, workers=workers)


def verify_b_relations(n_max: int = 4, m_max: int = 4, k_max: int = 8, *,
                       workers: int = 1) -> TableReport:
    """Check the type B relations among P and T on a grid, both sides evaluated separately."""
    if n_max > B_MAX_RANK:
        raise ValueError(f"type B checks are limited to rank {B_MAX_RANK}")
    t0 = time.perf_counter()
    rep = TableReport("verify-b-relations")
    for n in range(1, n_max + 1):
        for m in range(0, m_max + 1):
            for k in range(0, k_max + 1):
                for j in range(1, n + 1):
                    base = {"n": n, "m": m, "k": k, "j": j}
                    p_val = b_P(m, k, j, n, workers)
                    rep.add({**base, "part": "a"},
                            b_P(m - 1, k, j, n, workers) + b_P(m, k, j - 1, n - 1, workers),
                            _b_shift_sum(m, k, j, n, 1, workers), "shift by -eps_1")
                    if k < m + 1:
                        rep.add({**base, "part": "c"}, 0, p_val, "vanishing for k < m+1")
                    t_val = b_T_direct(m, k, j, n, workers)
                    rep.add({**base, "part": "d"}, b_T(m, k, j, n, workers), t_val,
                            "T from P values vs tensor product rule")
                    if n >= 2 and j <= n - 1:
                        lower = (b_P(m - 1, k, j, n, workers) + b_P(m, k, j + 1, n, workers)
                                 + b_P(m, k, j - 1, n, workers))
                        rep.add({**base, "part": "e"}, True, t_val >= lower, "T lower bound")
                    if j == n:
                        lower = (b_P(m - 1, k, n, n, workers) + p_val
                                 + b_P(m, k, n - 1, n, workers))
                        rep.add({**base, "part": "f"}, True, t_val >= lower, "T lower bound, j = n")
                base = {"n": n, "m": m, "k": k, "j": 1}
                # j = 0 below means the pure multiple m eps_1; the right side
                # refers to rank n-1, so this one needs n >= 2
                if n >= 2:
                    rep.add({**base, "part": "b"},
                            b_P(m, k, 1, n, workers) - b_P(m, k, 1, n - 1, workers),
                            _b_shift_sum(m, k, 0, n, -1, workers), "shift by +eps_1")
                if m % 2 == 0:
                    rep.add({**base, "part": "g"}, b_P(m - 1, k - n, 1, n, workers),
                            b_P(m, k, 1, n, workers), "even m drops to m-1 and k-n")
                else:
                    rep.add({**base, "part": "h"}, b_P(m - 1, k - n, 1, n, workers),
                            _b_shift_sum(m, k, 0, n, -1, workers), "odd m shifted by +eps_1")
        release_memos()
    rep.runtime_ms = int(1000 * (time.perf_counter() - t0))
    return rep


def verify_b_thresholds(n_max: int = 5, m_max: int = 6, k_max: int = 10, *,
                        workers: int = 1) -> TableReport:
    """For each (m, j, n), count nonzero P(m, k, j, n) with k below the threshold (expected 0)."""
    if n_max > B_MAX_RANK:
        raise ValueError(f"type B checks are limited to rank {B_MAX_RANK}")
    t0 = time.perf_counter()
    rep = TableReport("verify-b-thresholds")
    for n in range(1, n_max + 1):
        for j in range(1, n + 1):
            for m in range(0, m_max + 1):
                t = b_t(m, j, n)
                violations = 0
                first = None
                for k in range(0, k_max + 1):
                    v = b_P(m, k, j, n, workers)
                    if v < 0:
                        raise ArithmeticError(f"P({m},{k},{j},{n}) = {v} < 0")
                    if v and first is None:
                        first = k
                    if v and k < t:
                        violations += 1
                rep.add({"n": n, "j": j, "m": m, "t": t, "k_max": k_max}, 0, violations,
                        "vanishing below t(m,j,n)")
                rep.extras.append({"n": n, "j": j, "m": m, "t": t, "first_nonzero_k": first})
        release_memos()
    rep.runtime_ms = int(1000 * (time.perf_counter() - t0))
    return rep


def b_sharp_value(n: int, p: int, workers: int = 1) -> tuple[int, int]:
    """Both forms of the lowest pw_1-class value in degree 2p-3.

    Returns ``(P(p-2n-1, p-n-1, 1, n), direct)`` where ``direct`` is the
    alternating sum of P_{p-n-1}(u . (p-2n+1) eps_1 - eps_1).
    """
    direct = _b_shift_sum(p - 2 * n + 1, p - n - 1, 0, n, 1, workers)
    return b_P(p - 2 * n - 1, p - n - 1, 1, n, workers), direct


def b_small_rank_sum(n: int, m: int, workers: int = 1) -> int:
    """Alternating sum of P_m(u . ((m+1) w_n) - w_n) in B_n."""
    rs = build("B", n)
    return alternating_sum(rs, _scaled(rs, n, m + 1), _scaled(rs, n, 1), m, workers=workers)


# -- type G2 ------------------------------------------------------------------

_G2_LONG_TOP = (3, 2)


def g2_sum(a: int, b: int, k: int, workers: int = 1) -> int:
    """Alternating sum of P_k(u . (a w_1 + b w_2) - w_1) in G2."""
    rs = build("G2")
    return alternating_sum(rs, (a, b), (1, 0), k, workers=workers)


def g2_restricted_difference(c: int) -> int:
    """P_{c, no top root}(2c a_1 + c a_2) - P_{c, no top root}((c-2) a_1 + c a_2)."""
    rs = build("G2")
    ex = frozenset({_G2_LONG_TOP})
    first = count(rs, PartitionQuery((2 * c, c), c, ex)).value
    second = count(rs, PartitionQuery((c - 2, c), c, ex)).value if c >= 2 else 0
    return first - second


def verify_g2(a_max: int = 40) -> TableReport:
    if a_max > G2_MAX_A:
        raise ValueError(f"G2 checks are limited to a <= {G2_MAX_A}")
    t0 = time.perf_counter()
    rep = TableReport("verify-g2")
    for a in range(1, a_max + 1):
        for b in range(0, 3):
            nonzero = sum(1 for k in range(0, a + b - 1) if g2_sum(a, b, k))
            rep.add({"a": a, "b": b, "k": f"0..{a + b - 2}"}, 0, nonzero,
                    "zero range k <= a+b-2")
            rep.add({"a": a, "b": b, "k": a + b - 1}, math.ceil(a / 3),
                    g2_sum(a, b, a + b - 1), "value ceil(a/3) at k = a+b-1")
    for c in range(0, a_max + 1):
        rep.add({"c": c}, math.ceil((c + 1) / 3), g2_restricted_difference(c),
                "restricted count difference ceil((c+1)/3)")
    rep.runtime_ms = int(1000 * (time.perf_counter() - t0))
    return rep


# -- type F4 ------------------------------------------------------------------

def f4_conjecture_values(m: int, workers: int = 1) -> tuple[int, int, int]:
    """The three alternating sums (a), (b), (c) at a given m >= 1."""
    if not 1 <= m <= F4_MAX_M:
        raise ValueError(f"m must lie in 1..{F4_MAX_M}")
    rs = build("F4")
    w4 = (0, 0, 0, 1)
    a = alternating_sum(rs, (0, 1, 0, m), w4, m + 1, workers=workers)
    b = alternating_sum(rs, (0, 0, 0, m), w4, m - 1, workers=workers)
    c = alternating_sum(rs, (0, 0, 1, m), w4, m + 1, workers=workers)
    return a, b, c


def verify_f4_conjectures(m_list=range(1, 8), workers: int = 1) -> TableReport:
    t0 = time.perf_counter()
    rep = TableReport("verify-f4")
    for m in m_list:
        a, b, c = f4_conjecture_values(m, workers)
        rep.add({"m": m, "part": "a"}, 0, a, "P_{m+1}(u.(m w4 + w2) - w4) sum is 0")
        rep.add({"m": m, "part": "b"}, m % 2, b, "P_{m-1}(u.(m w4) - w4) sum is the parity of m")
        rep.add({"m": m, "part": "c"}, 1, c, "P_{m+1}(u.(m w4 + w3) - w4) sum is 1")
    rep.runtime_ms = int(1000 * (time.perf_counter() - t0))
    return rep
