"""Kostant partition counts with a fixed number of parts, and Weyl alternating sums.

``P_n(nu)`` counts multisets of exactly ``n`` positive roots with sum ``nu``.
The main route is a memoised recursion over the positive roots in a fixed
order; :func:`count_oracle` is an independent brute-force enumeration used
only for verification.
"""

from __future__ import annotations

import itertools
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

from .rootsys import Root, RootSystem, Weight, build
from .weyl import reflect_to_dominant, walk_orbit

__all__ = [
    "MemoBudgetExceeded",
    "OracleTooLarge",
    "PartitionQuery",
    "CountResult",
    "KostantCounter",
    "count",
    "count_oracle",
    "alternating_sum",
    "alternating_terms",
    "get_counter",
    "set_memo_budget",
    "DEFAULT_MEMO_BUDGET",
]

DEFAULT_MEMO_BUDGET = 10**8
ORACLE_MAX_PARTS = 6
ORACLE_MAX_ROOTS = 24


class MemoBudgetExceeded(RuntimeError):
    pass


class OracleTooLarge(ValueError):
    pass


def _root_tuple(r) -> tuple[int, ...]:
    if isinstance(r, Root):
        return r.simple_coords
    if isinstance(r, Weight):
        return r.coords
    return tuple(int(x) for x in r)


@dataclass(frozen=True)
class PartitionQuery:
    """Count multisets of ``parts`` positive roots summing to ``target``.

    ``target`` is in simple-root coordinates. ``excluded_roots`` removes
    roots from the pool; ``forced_min`` demands minimum multiplicities.
    """

    target: tuple[int, ...]
    parts: int
    excluded_roots: frozenset = field(default_factory=frozenset)
    forced_min: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "target", _root_tuple(self.target))
        object.__setattr__(
            self, "excluded_roots", frozenset(_root_tuple(r) for r in self.excluded_roots)
        )
        forced = self.forced_min
        if isinstance(forced, dict):
            forced = forced.items()
        merged: dict[tuple[int, ...], int] = {}
        for r, m in forced:
            if m < 0:
                raise ValueError("forced multiplicities must be nonnegative")
            if m:
                key = _root_tuple(r)
                merged[key] = merged.get(key, 0) + int(m)
        object.__setattr__(self, "forced_min", tuple(sorted(merged.items())))
        if self.parts < 0:
            raise ValueError("parts must be nonnegative")


@dataclass(frozen=True)
class CountResult:
    value: int

    def __int__(self) -> int:
        return self.value


class KostantCounter:
    """Memoised partition counter for one root system and one root pool.

    Roots are visited from the highest down; the simple roots come last, and
    once only simple roots remain the decomposition is forced, which ends the
    recursion early. Memo keys are ``(root index, residual, parts left)``.
    """

    def __init__(self, rs: RootSystem, excluded=frozenset(), memo_budget: int = DEFAULT_MEMO_BUDGET):
        self.rs = rs
        self.memo_budget = memo_budget
        excluded = frozenset(_root_tuple(r) for r in excluded)
        for r in excluded:
            if r not in rs.root_index:
                raise ValueError(f"{r} is not a positive root of {rs.label}")
        self.excluded = excluded
        pool = [r.simple_coords for r in rs.positive_roots if r.simple_coords not in excluded]
        pool.reverse()
        n = rs.rank
        self.roots = pool
        self.heights = [sum(r) for r in pool]
        # first index from which only simple roots remain
        k = len(pool)
        while k > 0 and self.heights[k - 1] == 1:
            k -= 1
        self.simple_start = k
        simple_support = [0] * n
        for r in pool[k:]:
            simple_support[r.index(1)] = 1
        self.simple_support = tuple(simple_support)
        # suffix maxima used for pruning
        self.max_height = []
        self.max_coef = []
        for i in range(len(pool)):
            self.max_height.append(max(self.heights[i:]))
            self.max_coef.append(tuple(max(r[j] for r in pool[i:]) for j in range(n)))
        # residuals are packed into one integer, FIELD bits per coordinate,
        # with a guard bit per field that a negative coordinate would clear
        self._guard = sum(_GUARD << (FIELD * j) for j in range(n))
        self._packed_roots = [_pack(r) for r in pool]
        self._packed_caps = [_pack(m) for m in self.max_coef]
        low = (1 << (FIELD - 1)) - 1
        self._off_support = sum(low << (FIELD * j) for j in range(n) if not simple_support[j])
        self.memo: dict = {}

    def __getstate__(self):
        state = self.__dict__.copy()
        state["memo"] = {}
        return state

    def clear(self):
        self.memo.clear()

    def count_vector(self, target, parts: int) -> int:
        target = tuple(target)
        if parts < 0 or any(t < 0 for t in target):
            return 0
        if parts == 0:
            return 1 if not any(target) else 0
        if not self.roots:
            return 0
        if parts >= 1 << 8 or max(target) >= _GUARD or parts * max(max(self.max_coef[0]), 1) >= _GUARD:
            raise ValueError("query too large for the packed residual encoding")
        return self._rec(0, _pack(target) + self._guard, sum(target), parts)

    def _rec(self, i: int, r: int, ht: int, q: int) -> int:
        # r carries the guard bits; r - guard is the packed residual
        if q == 0:
            return 1 if ht == 0 else 0
        if i >= self.simple_start:
            if ht != q:
                return 0
            return 0 if (r - self._guard) & self._off_support else 1
        if ht < q or ht > q * self.max_height[i]:
            return 0
        g = self._guard
        # every coordinate must be reachable with q copies of the largest coefficient
        if (q * self._packed_caps[i] + 2 * g - r) & g != g:
            return 0
        key = (r << 16) | (i << 8) | q
        memo = self.memo
        hit = memo.get(key)
        if hit is not None:
            return hit
        beta = self._packed_roots[i]
        hb = self.heights[i]
        total = 0
        nxt = i + 1
        while True:
            total += self._rec(nxt, r, ht, q)
            q -= 1
            if q < 0:
                break
            r -= beta
            if r & g != g:
                break
            ht -= hb
        if len(memo) >= self.memo_budget:
            raise MemoBudgetExceeded(
                f"memo for {self.rs.label} reached {self.memo_budget} states; "
                "raise the budget or shrink the query"
            )
        memo[key] = total
        return total


FIELD = 16
_GUARD = 1 << (FIELD - 1)


def _pack(vec) -> int:
    out = 0
    for j, c in enumerate(vec):
        out |= int(c) << (FIELD * j)
    return out


_COUNTERS: dict = {}


def get_counter(rs: RootSystem, excluded=frozenset(), memo_budget: int | None = None) -> KostantCounter:
    """Shared counter for (root system, exclusion set); memo persists across calls."""
    key = (rs.family, rs.rank, frozenset(_root_tuple(r) for r in excluded))
    c = _COUNTERS.get(key)
    if c is None:
        c = KostantCounter(rs, key[2], memo_budget or DEFAULT_MEMO_BUDGET)
        _COUNTERS[key] = c
    elif memo_budget is not None:
        c.memo_budget = memo_budget
    return c


def set_memo_budget(budget: int) -> None:
    """Change the memo cap for new and existing counters."""
    global DEFAULT_MEMO_BUDGET
    if budget < 1:
        raise ValueError("memo budget must be positive")
    DEFAULT_MEMO_BUDGET = budget
    for c in _COUNTERS.values():
        c.memo_budget = budget


def count(rs: RootSystem, q: PartitionQuery, memo_budget: int | None = None) -> CountResult:
    """Exact number of root multisets answering the query."""
    target = list(q.target)
    parts = q.parts
    if len(target) != rs.rank:
        raise ValueError(f"target must have {rs.rank} coordinates")
    for r, m in q.forced_min:
        if r in q.excluded_roots:
            return CountResult(0)
        if r not in rs.root_index:
            raise ValueError(f"{r} is not a positive root of {rs.label}")
        target = [a - m * b for a, b in zip(target, r)]
        parts -= m
    counter = get_counter(rs, q.excluded_roots, memo_budget)
    return CountResult(counter.count_vector(tuple(target), parts))


@lru_cache(maxsize=64)
def _oracle_table(label: str, parts: int, excluded: frozenset, forced: tuple) -> Counter:
    rs = build(label)
    pool = [r.simple_coords for r in rs.positive_roots if r.simple_coords not in excluded]
    need = dict(forced)
    table: Counter = Counter()
    n = rs.rank
    for combo in itertools.combinations_with_replacement(range(len(pool)), parts):
        if need:
            mult = Counter(pool[k] for k in combo)
            if any(mult[r] < m for r, m in need.items()):
                continue
        s = [0] * n
        for k in combo:
            for j, c in enumerate(pool[k]):
                s[j] += c
        table[tuple(s)] += 1
    return table


def count_oracle(rs: RootSystem, q: PartitionQuery) -> CountResult:
    """Brute-force count by listing every multiset of ``parts`` roots."""
    if q.parts > ORACLE_MAX_PARTS or len(rs.positive_roots) > ORACLE_MAX_ROOTS:
        raise OracleTooLarge(
            f"oracle limited to {ORACLE_MAX_PARTS} parts and {ORACLE_MAX_ROOTS} positive roots"
        )
    table = _oracle_table(rs.label, q.parts, q.excluded_roots, q.forced_min)
    return CountResult(table.get(tuple(q.target), 0))


# -- alternating sums ----------------------------------------------------------

def alternating_terms(rs: RootSystem, lam, shift, parts: int):
    """Signed targets of the Weyl alternating sum that can be nonzero.

    Returns ``(sign, terms)`` where ``terms`` lists ``(sign_u, nu_u)`` with
    ``nu_u = u . lambda - shift`` in simple-root coordinates. Elements u
    whose target leaves the nonnegative root lattice, or is too small or too
    large for ``parts`` roots, are dropped.
    """
    x = tuple(c + 1 for c in lam)
    top, word = reflect_to_dominant(rs, x)
    if any(c == 0 for c in top):
        # lambda + rho is singular: terms cancel in pairs
        return 1, []
    outer = -1 if len(word) % 2 else 1
    diff = tuple(a - 1 - b for a, b in zip(top, shift))
    slack = rs.integral_root_coords(diff)
    if slack is None:
        return outer, []
    if parts == 0:
        # only nu = 0 contributes; reached by at most one u
        terms = [(1 if ell % 2 == 0 else -1, s)
                 for _, s, ell in walk_orbit(rs, top, slack, 0) if not any(s)]
        return outer, terms
    marks = rs.highest_root.simple_coords
    max_ht = rs.highest_root.height * parts
    caps = tuple(m * parts for m in marks)
    terms = []
    for _, s, ell in walk_orbit(rs, top, slack, parts):
        if sum(s) > max_ht:
            continue
        if any(a > b for a, b in zip(s, caps)):
            continue
        terms.append((1 if ell % 2 == 0 else -1, s))
    return outer, terms


def _worker_sum(args):
    label, excluded, budget, parts, chunk = args
    counter = get_counter(build(label), excluded, budget)
    return sum(sg * counter.count_vector(s, parts) for sg, s in chunk)


def alternating_sum(rs: RootSystem, lam, shift, parts: int, *, excluded=frozenset(),
                    workers: int = 1, memo_budget: int | None = None) -> int:
    """Sum over u in W of (-1)^{l(u)} P_parts(u . lambda - shift).

    ``lam`` and ``shift`` are in fundamental-weight coordinates. With
    ``workers > 1`` the terms are split across processes, each with its own
    memo.
    """
    lam = tuple(lam)
    shift = tuple(shift)
    outer, terms = alternating_terms(rs, lam, shift, parts)
    if not terms:
        return 0
    if workers <= 1 or len(terms) < 2 * workers:
        counter = get_counter(rs, excluded, memo_budget)
        total = sum(sg * counter.count_vector(s, parts) for sg, s in terms)
        return outer * total
    # big targets first so workers finish together
    terms.sort(key=lambda t: -sum(t[1]))
    chunks = [terms[k::workers] for k in range(workers)]
    budget = memo_budget or DEFAULT_MEMO_BUDGET
    jobs = [(rs.label, frozenset(excluded), budget, parts, ch) for ch in chunks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        total = sum(pool.map(_worker_sum, jobs))
    return outer * total


def default_workers() -> int:
    env = os.environ.get("THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1
