"""Finite irreducible root systems with exact coordinate algebra.

Weights live in the fundamental-weight basis as integer tuples; roots live in
the simple-root basis. Simple roots follow the Bourbaki numbering and the
Cartan matrix is ``cartan[i][j] = <alpha_i, alpha_j^vee>``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, cached_property

__all__ = [
    "InvalidRank",
    "UnsupportedType",
    "Weight",
    "Root",
    "RootSystem",
    "build",
    "parse_type",
]


class InvalidRank(ValueError):
    pass


class UnsupportedType(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Weight:
    """Integral weight in fundamental-weight coordinates."""

    coords: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    @classmethod
    def zero(cls, rank: int) -> "Weight":
        return cls((0,) * rank)

    @classmethod
    def fundamental(cls, rank: int, j: int) -> "Weight":
        """The fundamental weight omega_j (1-based, Bourbaki numbering)."""
        return cls(tuple(1 if i == j - 1 else 0 for i in range(rank)))

    def dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coords))

    def __mul__(self, k: int) -> "Weight":
        return Weight(tuple(k * a for a in self.coords))

    __rmul__ = __mul__

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __str__(self) -> str:
        return format_weight(self.coords)


def format_weight(coords) -> str:
    """Render a weight as a sum of fundamental weights, e.g. ``7w1+w4``."""
    terms = []
    for j, c in enumerate(coords, start=1):
        if c == 0:
            continue
        coef = "" if c == 1 else ("-" if c == -1 else str(c))
        terms.append(f"{coef}w{j}")
    if not terms:
        return "0"
    return "+".join(terms).replace("+-", "-")


@dataclass(frozen=True, order=True)
class Root:
    """A root in simple-root coordinates."""

    simple_coords: tuple[int, ...]
    length_class: str = "long"

    @property
    def height(self) -> int:
        return sum(self.simple_coords)

    def __neg__(self) -> "Root":
        return Root(tuple(-c for c in self.simple_coords), self.length_class)

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.simple_coords) + ")"


_FAMILY_RANKS = {
    "A": (1, None),
    "B": (1, None),
    "C": (2, None),
    "D": (3, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


def parse_type(type_label: str, rank: int | None = None) -> tuple[str, int]:
    """Accept ``("B", 3)``, ``("B3", None)``, ``("E6", 6)`` and the like."""
    label = type_label.strip().upper()
    family = label[0]
    if family not in _FAMILY_RANKS:
        raise UnsupportedType(f"unknown root system type {type_label!r}")
    embedded = int(label[1:]) if len(label) > 1 else None
    if rank is None:
        rank = embedded
    elif embedded is not None and embedded != rank:
        raise InvalidRank(f"type {type_label} does not have rank {rank}")
    if rank is None:
        raise InvalidRank(f"no rank given for type {type_label}")
    lo, hi = _FAMILY_RANKS[family]
    if rank < lo or (hi is not None and rank > hi):
        raise InvalidRank(f"rank {rank} is out of range for type {family}")
    return family, int(rank)


def _cartan(family: str, n: int) -> list[list[int]]:
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, aij=-1, aji=-1):
        a[i][j] = aij
        a[j][i] = aji

    if family in "ABC":
        for i in range(n - 1):
            link(i, i + 1)
        if family == "B" and n >= 2:
            # alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
            link(n - 2, n - 1, -2, -1)
        if family == "C":
            link(n - 2, n - 1, -1, -2)
    elif family == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif family == "E":
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif family == "F":
        link(0, 1)
        link(1, 2, -2, -1)
        link(2, 3)
    elif family == "G":
        # alpha_1 short, alpha_2 long
        link(0, 1, -1, -3)
    return a


def _inverse(a: list[list[int]]) -> list[list[Fraction]]:
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(a)]
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        pv = m[col][col]
        m[col] = [x / pv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [row[n:] for row in m]


def _simple_norms(a: list[list[int]]) -> list[Fraction]:
    """Squared lengths of simple roots, normalised so long roots have 2."""
    n = len(a)
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j != i and a[i][j] != 0 and d[j] is None:
                d[j] = d[i] * Fraction(a[j][i], a[i][j])
                stack.append(j)
    top = max(d)
    return [2 * x / top for x in d]


def _positive_roots(a: list[list[int]]) -> list[tuple[int, ...]]:
    n = len(a)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                # alpha_i-string through beta: beta - q alpha_i, ..., beta + r alpha_i
                q = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        q += 1
                    else:
                        break
                pairing = sum(beta[k] * a[k][i] for k in range(n))
                if q - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
        layer = nxt
    return sorted(roots, key=lambda c: (sum(c), c))


class RootSystem:
    """Immutable root datum for one irreducible type.

    Build instances through :func:`build`, which caches them; identical
    requests return the same object, so memo tables keyed on a root system
    are shared.
    """

    def __init__(self, family: str, rank: int):
        self.family = family
        self.rank = rank
        self.type_label = family if family in "ABCD" else f"{family}{rank}"
        self.label = f"{family}{rank}"
        n = rank
        a = _cartan(family, n)
        self.cartan: tuple[tuple[int, ...], ...] = tuple(tuple(r) for r in a)
        inv = _inverse(a)
        self.cartan_inverse: tuple[tuple[Fraction, ...], ...] = tuple(tuple(r) for r in inv)
        self.index_of_connection = round(_det(a))
        # integer matrix det * A^{-1}, used for fast lattice tests
        f = self.index_of_connection
        self._inv_num = tuple(tuple(int(x * f) for x in row) for row in inv)
        self.simple_norms: tuple[Fraction, ...] = tuple(_simple_norms(a))
        long_norm = max(self.simple_norms)
        coords = _positive_roots(a)
        roots = []
        coroots = []
        for c in coords:
            nrm = self._norm(c)
            roots.append(Root(c, "long" if nrm == long_norm else "short"))
            coroots.append(tuple(int(c[j] * self.simple_norms[j] / nrm) for j in range(n)))
        self.positive_roots: tuple[Root, ...] = tuple(roots)
        # coroot of each positive root in the simple-coroot basis
        self.positive_coroots: tuple[tuple[int, ...], ...] = tuple(coroots)
        self.root_index = {r.simple_coords: k for k, r in enumerate(roots)}
        self.simple_roots: tuple[Root, ...] = tuple(roots[: n])
        self.rho = Weight((1,) * n)
        self.highest_root: Root = roots[-1]
        shorts = [r for r in roots if r.length_class == "short"]
        self.highest_short_root: Root = shorts[-1] if shorts else roots[-1]
        self.coxeter_number = self.highest_root.height + 1
        marks = self.highest_root.simple_coords
        self.weyl_order = math.factorial(n) * math.prod(marks) * self.index_of_connection

    # -- coordinate algebra ---------------------------------------------
    def _norm(self, c) -> Fraction:
        """(beta, beta) for beta given in simple-root coordinates."""
        n = self.rank
        total = Fraction(0)
        for i in range(n):
            if c[i] == 0:
                continue
            for j in range(n):
                if c[j]:
                    total += c[i] * c[j] * self.cartan[i][j] * self.simple_norms[j] / 2
        return total

    def weight(self, *coords) -> Weight:
        if len(coords) == 1 and not isinstance(coords[0], int):
            coords = tuple(coords[0])
        if len(coords) != self.rank:
            raise ValueError(f"expected {self.rank} coordinates, got {len(coords)}")
        return Weight(coords)

    def omega(self, j: int) -> Weight:
        return Weight.fundamental(self.rank, j)

    def zero(self) -> Weight:
        return Weight.zero(self.rank)

    def root_to_weight(self, c) -> Weight:
        """Simple-root coordinates to fundamental-weight coordinates."""
        if isinstance(c, Root):
            c = c.simple_coords
        n = self.rank
        return Weight(tuple(sum(c[i] * self.cartan[i][j] for i in range(n)) for j in range(n)))

    def root_coords(self, lam) -> tuple[Fraction, ...]:
        """Exact simple-root coordinates of a weight."""
        lam = _coords(lam)
        n = self.rank
        f = self.index_of_connection
        return tuple(
            Fraction(sum(lam[i] * self._inv_num[i][j] for i in range(n)), f) for j in range(n)
        )

    def integral_root_coords(self, lam) -> tuple[int, ...] | None:
        """Simple-root coordinates if the weight lies in the root lattice, else None."""
        lam = _coords(lam)
        n = self.rank
        f = self.index_of_connection
        out = []
        for j in range(n):
            num = sum(lam[i] * self._inv_num[i][j] for i in range(n))
            if num % f:
                return None
            out.append(num // f)
        return tuple(out)

    def in_root_lattice(self, lam) -> bool:
        return self.integral_root_coords(lam) is not None

    def in_nonneg_root_lattice(self, lam) -> bool:
        c = self.integral_root_coords(lam)
        return c is not None and all(x >= 0 for x in c)

    def height(self, lam) -> Fraction:
        return sum(self.root_coords(lam), Fraction(0))

    def pair(self, lam, beta) -> int:
        """<lambda, beta^vee> for a weight and a (nonzero) root."""
        lam = _coords(lam)
        c = beta.simple_coords if isinstance(beta, Root) else tuple(beta)
        idx = self.root_index.get(c)
        if idx is not None:
            co = self.positive_coroots[idx]
            return sum(l * x for l, x in zip(lam, co))
        neg = tuple(-x for x in c)
        idx = self.root_index.get(neg)
        if idx is not None:
            co = self.positive_coroots[idx]
            return -sum(l * x for l, x in zip(lam, co))
        nrm = self._norm(c)
        if nrm == 0:
            raise ValueError("pairing with the zero vector")
        val = sum(lam[j] * c[j] * self.simple_norms[j] for j in range(self.rank)) / nrm
        return int(val) if val.denominator == 1 else val

    def is_root(self, c) -> bool:
        c = tuple(c)
        return c in self.root_index or tuple(-x for x in c) in self.root_index

    @cached_property
    def num_positive_roots(self) -> int:
        return len(self.positive_roots)

    @cached_property
    def simply_laced(self) -> bool:
        return all(r.length_class == "long" for r in self.positive_roots)

    @cached_property
    def positive_roots_omega(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.root_to_weight(r).coords for r in self.positive_roots)

    # -- epsilon basis (types B and D) ------------------------------------
    @cached_property
    def _eps_omegas(self) -> list[list[Fraction]]:
        n = self.rank
        if self.family not in "BD":
            raise UnsupportedType(f"no epsilon basis for type {self.label}")
        half = Fraction(1, 2)
        rows = []
        for j in range(1, n + 1):
            if self.family == "B":
                if j < n:
                    rows.append([Fraction(int(i < j)) for i in range(n)])
                else:
                    rows.append([half] * n)
            else:
                if j <= n - 2:
                    rows.append([Fraction(int(i < j)) for i in range(n)])
                elif j == n - 1:
                    rows.append([half] * (n - 1) + [-half])
                else:
                    rows.append([half] * n)
        return rows

    @cached_property
    def _eps_simple_coroots(self) -> list[list[Fraction]]:
        n = self.rank
        if self.family not in "BD":
            raise UnsupportedType(f"no epsilon basis for type {self.label}")
        out = []
        for i in range(n):
            v = [Fraction(0)] * n
            if i < n - 1:
                v[i], v[i + 1] = Fraction(1), Fraction(-1)
            elif self.family == "B":
                v[n - 1] = Fraction(1)
            else:
                v[n - 2], v[n - 1] = Fraction(1), Fraction(1)
            nrm = sum(x * x for x in v)
            out.append([2 * x / nrm for x in v])
        return out

    def epsilon_view(self, lam) -> tuple[Fraction, ...]:
        lam = _coords(lam)
        rows = self._eps_omegas
        n = self.rank
        return tuple(sum((lam[j] * rows[j][i] for j in range(n)), Fraction(0)) for i in range(n))

    def from_epsilon(self, vec) -> Weight:
        cos = self._eps_simple_coroots
        vals = [sum((Fraction(x) * y for x, y in zip(vec, co)), Fraction(0)) for co in cos]
        if any(v.denominator != 1 for v in vals):
            raise ValueError(f"{vec} is not an integral weight")
        return Weight(tuple(int(v) for v in vals))

    def __repr__(self) -> str:
        return f"RootSystem({self.label})"

    def __reduce__(self):
        return (build, (self.family, self.rank))


def _coords(lam) -> tuple[int, ...]:
    if isinstance(lam, Weight):
        return lam.coords
    return tuple(lam)


def _det(a: list[list[int]]) -> Fraction:
    n = len(a)
    m = [[Fraction(x) for x in row] for row in a]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, n):
            f = m[r][col] / m[col][col]
            m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return det


@lru_cache(maxsize=None)
def _build(family: str, rank: int) -> RootSystem:
    return RootSystem(family, rank)


def build(type_label: str, rank: int | None = None) -> RootSystem:
    """Construct (or fetch the cached) root system of the given type and rank."""
    family, rank = parse_type(type_label, rank)
    return _build(family, rank)
