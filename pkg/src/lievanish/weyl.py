"""Weyl group elements, dot action, inversion sets and p-linkage.

An element ``w`` is identified by ``w(rho)``: rho is regular, so the map is
injective, and reflecting ``w(rho)`` back to the dominant chamber yields a
reduced word and the length at the same time.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator

from .rootsys import Root, RootSystem, Weight

__all__ = [
    "BudgetExceeded",
    "WeylElement",
    "identity",
    "simple_reflection",
    "from_word",
    "from_rho_image",
    "longest_element",
    "enumerate_group",
    "materialize",
    "dot",
    "act",
    "inversion_set",
    "coset_min_rep",
    "linked",
    "linked_by_scan",
    "linkage_class_id",
    "reflect_to_dominant",
    "walk_orbit",
]

DEFAULT_MATERIALIZE_BUDGET = 1_000_000


class BudgetExceeded(RuntimeError):
    pass


def _reflect(rs: RootSystem, x: tuple[int, ...], i: int) -> tuple[int, ...]:
    """s_i applied to a weight in fundamental-weight coordinates."""
    c = x[i]
    if c == 0:
        return x
    row = rs.cartan[i]
    return tuple(a - c * b for a, b in zip(x, row))


def reflect_to_dominant(rs: RootSystem, x) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Return ``(dominant, word)`` with ``x = s_word[0] ... s_word[-1] (dominant)``.

    Always reflects in the smallest index with a negative coordinate, so the
    word is the lexicographically first reduced word of the minimal element.
    """
    x = tuple(x)
    word = []
    while True:
        for i, c in enumerate(x):
            if c < 0:
                x = _reflect(rs, x, i)
                word.append(i)
                break
        else:
            return x, tuple(word)


@dataclass(frozen=True, eq=False)
class WeylElement:
    """A Weyl group element, keyed by its image of rho."""

    rs: RootSystem = field(repr=False)
    rho_image: tuple[int, ...]
    length: int
    word: tuple[int, ...] = field(repr=False, default=())

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.rho_image == other.rho_image and \
            self.rs is other.rs

    def __hash__(self):
        return hash(self.rho_image)

    @property
    def sign(self) -> int:
        return -1 if self.length % 2 else 1

    @cached_property
    def action(self) -> tuple[tuple[int, ...], ...]:
        """Integer matrix M with (w lambda)_i = sum_j M[i][j] lambda_j."""
        n = self.rs.rank
        cols = []
        for j in range(n):
            cols.append(self.apply(tuple(int(i == j) for i in range(n))))
        return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))

    def apply(self, lam) -> tuple[int, ...]:
        """w(lambda) for lambda in fundamental-weight coordinates."""
        x = tuple(lam)
        for i in reversed(self.word):
            x = _reflect(self.rs, x, i)
        return x

    def apply_root(self, beta) -> tuple[int, ...]:
        """w(beta) for beta in simple-root coordinates, returned the same way."""
        c = beta.simple_coords if isinstance(beta, Root) else tuple(beta)
        n = self.rs.rank
        for i in reversed(self.word):
            pairing = sum(c[k] * self.rs.cartan[k][i] for k in range(n))
            if pairing:
                c = tuple(v - pairing if k == i else v for k, v in enumerate(c))
        return c

    def inverse(self) -> "WeylElement":
        return from_word(self.rs, tuple(reversed(self.word)))

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return from_rho_image(self.rs, self.apply(other.rho_image))

    def is_identity(self) -> bool:
        return self.length == 0


def from_rho_image(rs: RootSystem, x) -> WeylElement:
    dom, word = reflect_to_dominant(rs, x)
    if dom != rs.rho.coords:
        raise ValueError(f"{tuple(x)} is not in the Weyl orbit of rho")
    return WeylElement(rs, tuple(x), len(word), word)


def from_word(rs: RootSystem, word) -> WeylElement:
    """The product s_word[0] s_word[1] ... (indices are 0-based)."""
    x = rs.rho.coords
    for i in reversed(tuple(word)):
        x = _reflect(rs, x, i)
    return from_rho_image(rs, x)


def identity(rs: RootSystem) -> WeylElement:
    return WeylElement(rs, rs.rho.coords, 0, ())


def simple_reflection(rs: RootSystem, i: int) -> WeylElement:
    """s_{alpha_i}, with i 1-based as in the Bourbaki numbering."""
    return from_word(rs, (i - 1,))


def longest_element(rs: RootSystem) -> WeylElement:
    return from_rho_image(rs, tuple(-c for c in rs.rho.coords))


def act(w: WeylElement, lam) -> Weight:
    return Weight(w.apply(tuple(lam)))


def dot(w: WeylElement, lam) -> Weight:
    """w . lambda = w(lambda + rho) - rho."""
    shifted = tuple(c + 1 for c in lam)
    return Weight(tuple(c - 1 for c in w.apply(shifted)))


def inversion_set(w: WeylElement) -> frozenset[Root]:
    """Positive roots sent negative by w^{-1}.

    beta is such a root exactly when <w(rho), beta^vee> < 0.
    """
    rs = w.rs
    x = w.rho_image
    out = []
    for beta, co in zip(rs.positive_roots, rs.positive_coroots):
        if sum(a * b for a, b in zip(x, co)) < 0:
            out.append(beta)
    return frozenset(out)


def coset_min_rep(rs: RootSystem, w: WeylElement, subset) -> WeylElement:
    """Minimal-length representative of the left coset w W_I.

    ``subset`` holds 1-based simple-root indices.
    """
    idx = sorted(int(i) - 1 for i in subset)
    n = rs.rank
    while True:
        for i in idx:
            image = w.apply_root(tuple(int(k == i) for k in range(n)))
            if any(c < 0 for c in image):
                # w s_i is shorter; w s_i (rho) = w(rho) - w(alpha_i)
                shift = rs.root_to_weight(image).coords
                w = from_rho_image(rs, tuple(a - b for a, b in zip(w.rho_image, shift)))
                break
        else:
            return w


def enumerate_group(rs: RootSystem) -> Iterator[WeylElement]:
    """Stream every element exactly once, in depth-first order.

    Each element is reached from its canonical parent, obtained by undoing
    the smallest left descent, so no visited set is needed and memory stays
    proportional to the longest word.
    """
    n = rs.rank
    start = rs.rho.coords
    stack = [(start, ())]
    while stack:
        x, word = stack.pop()
        yield WeylElement(rs, x, len(word), word)
        for i in range(n - 1, -1, -1):
            if x[i] <= 0:
                continue
            y = _reflect(rs, x, i)
            # canonical parent of y undoes its first negative coordinate
            if any(y[j] < 0 for j in range(i)):
                continue
            stack.append((y, (i,) + word))


def materialize(rs: RootSystem, budget: int = DEFAULT_MATERIALIZE_BUDGET) -> list[WeylElement]:
    if rs.weyl_order > budget:
        raise BudgetExceeded(
            f"|W({rs.label})| = {rs.weyl_order} exceeds the materialization budget {budget}"
        )
    return list(enumerate_group(rs))


def walk_orbit(rs: RootSystem, top, slack, min_height: int = 0):
    """Walk the part of the Weyl orbit of a dominant regular weight lying above a floor.

    ``top`` is dominant and regular (fundamental-weight coordinates) and
    ``slack`` gives the simple-root coordinates of ``top - floor``. Yields
    ``(point, slack, length)`` for every orbit point ``u(top)`` whose slack
    stays nonnegative and whose slack height is at least ``min_height``.
    Descending in the orbit only subtracts positive multiples of simple
    roots, so both conditions are inherited by canonical parents and the
    walk can prune whole subtrees.
    """
    n = rs.rank
    cartan = rs.cartan
    top = tuple(top)
    slack = tuple(slack)
    if any(s < 0 for s in slack) or sum(slack) < min_height:
        return
    stack = [(top, slack, 0)]
    while stack:
        x, s, ell = stack.pop()
        yield x, s, ell
        ht = sum(s)
        for i in range(n):
            c = x[i]
            if c <= 0:
                continue
            si = s[i] - c
            if si < 0 or ht - c < min_height:
                continue
            row = cartan[i]
            y = tuple(a - c * b for a, b in zip(x, row))
            if any(y[j] < 0 for j in range(i)):
                continue
            s2 = s[:i] + (si,) + s[i + 1:]
            stack.append((y, s2, ell + 1))


# -- linkage -----------------------------------------------------------------

def linkage_class_id(rs: RootSystem, p: int, lam) -> Weight:
    """Canonical label of the W_p dot-orbit of lambda.

    Returns the unique point of the orbit of lambda + rho (under W and
    translations by p times the root lattice) in the closed fundamental
    p-alcove, shifted back by rho.
    """
    x = tuple(c + 1 for c in lam)
    a0 = rs.highest_short_root
    a0_w = rs.root_to_weight(a0).coords
    a0_co = rs.positive_coroots[rs.root_index[a0.simple_coords]]
    while True:
        moved = False
        for i, c in enumerate(x):
            if c < 0:
                x = _reflect(rs, x, i)
                moved = True
                break
        if moved:
            continue
        t = sum(a * b for a, b in zip(x, a0_co)) - p
        if t > 0:
            x = tuple(a - t * b for a, b in zip(x, a0_w))
            continue
        return Weight(tuple(c - 1 for c in x))


def linked(rs: RootSystem, p: int, lam, nu) -> bool:
    return linkage_class_id(rs, p, lam) == linkage_class_id(rs, p, nu)


def linked_by_scan(rs: RootSystem, p: int, lam, nu) -> bool:
    """Exhaustive check: some u has u(lambda + rho) - (nu + rho) in p Z Phi."""
    lr = tuple(c + 1 for c in lam)
    nr = tuple(c + 1 for c in nu)
    for u in enumerate_group(rs):
        diff = tuple(a - b for a, b in zip(u.apply(lr), nr))
        c = rs.integral_root_coords(diff)
        if c is not None and all(x % p == 0 for x in c):
            return True
    return False
