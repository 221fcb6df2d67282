"""Dimensions of H^i(G, H^0(lambda) (x) H^0(lambda*)^(1)) and the searches built on them.

For p > h and dominant lambda = p mu + w.0 the dimension in degree i is

    sum over u in W of (-1)^l(u) P_k(u . lambda - mu),   k = (i - l(w)) / 2,

and zero when the parity is wrong. Everything here is exact integer work.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from .kostant import alternating_sum, get_counter
from .rootsys import RootSystem, Weight, format_weight
from .weyl import (
    WeylElement,
    dot,
    from_rho_image,
    linked,
    reflect_to_dominant,
)

__all__ = [
    "PrimeTooSmall",
    "ZeroMu",
    "NegativeDimension",
    "Decomposition",
    "CohomRecord",
    "DegreeBoundReport",
    "CertificateStatus",
    "is_prime",
    "decompose",
    "cohom_dim",
    "parts_lower_bound",
    "min_parts",
    "candidates",
    "decompositions_for_mu",
    "degree_bounds",
    "root_bound",
    "least_nonvanishing",
    "nonvanishing_certificate",
    "dominant_weights_below",
    "low_pairing_weights",
]


class PrimeTooSmall(ValueError):
    pass


class ZeroMu(ValueError):
    pass


class NegativeDimension(ArithmeticError):
    """The alternating sum came out negative, which cannot happen for p > h."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    return all(p % d for d in range(3, math.isqrt(p) + 1, 2))


def _check_prime(rs: RootSystem, p: int):
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p <= rs.coxeter_number:
        raise PrimeTooSmall(f"need p > h = {rs.coxeter_number} for {rs.label}, got p = {p}")


@dataclass(frozen=True)
class Decomposition:
    """lambda = p mu + w.0 with lambda and mu dominant."""

    lam: Weight
    mu: Weight
    w: WeylElement
    p: int

    @property
    def length(self) -> int:
        return self.w.length

    @property
    def lam_minus_mu(self) -> Weight:
        return self.lam - self.mu

    def __str__(self) -> str:
        return f"{self.lam} = {self.p}({self.mu}) + w.0, l(w) = {self.length}"


@dataclass(frozen=True)
class CohomRecord:
    decomposition: Decomposition
    degree: int
    dim: int

    @property
    def k(self) -> int:
        return (self.degree - self.decomposition.length) // 2

    @property
    def lam(self) -> Weight:
        return self.decomposition.lam

    def as_dict(self) -> dict:
        d = self.decomposition
        return {
            "lambda": list(d.lam.coords),
            "lambda_str": str(d.lam),
            "mu": list(d.mu.coords),
            "length": d.length,
            "degree": self.degree,
            "k": self.k,
            "dim": self.dim,
        }


def decompose(rs: RootSystem, p: int, lam) -> Decomposition | None:
    """Find the unique (mu, w) with lambda = p mu + w.0, mu dominant.

    The fundamental-weight coordinates of w(rho) are coroot heights, so they
    lie in [-(h-1), h-1] and are congruent to those of lambda + rho mod p.
    That leaves at most two choices per coordinate; each is tested for
    membership in the orbit of rho.
    """
    _check_prime(rs, p)
    lam = Weight(tuple(lam))
    h = rs.coxeter_number
    x = tuple(c + 1 for c in lam.coords)
    options = []
    for c in x:
        r = c % p
        opts = [v for v in (r, r - p) if v != 0 and -(h - 1) <= v <= h - 1]
        if not opts:
            return None
        options.append(opts)
    found = None
    for v in itertools.product(*options):
        dom, word = reflect_to_dominant(rs, v)
        if dom != rs.rho.coords:
            continue
        mu = tuple((a - b) // p for a, b in zip(x, v))
        if any(m < 0 for m in mu):
            continue
        w = from_rho_image(rs, v)
        dec = Decomposition(lam, Weight(mu), w, p)
        if found is not None:
            raise AssertionError(f"two decompositions of {lam}: {found} and {dec}")
        found = dec
    return found


def cohom_dim(rs: RootSystem, dec: Decomposition, i: int, *, workers: int = 1,
              memo_budget: int | None = None) -> int:
    """dim H^i(G, H^0(lambda) (x) H^0(lambda*)^(1)) for lambda = p mu + w.0."""
    if i < 0:
        raise ValueError("degree must be nonnegative")
    ell = dec.length
    if i < ell or (i - ell) % 2:
        return 0
    k = (i - ell) // 2
    value = alternating_sum(rs, dec.lam.coords, dec.mu.coords, k,
                            workers=workers, memo_budget=memo_budget)
    if value < 0:
        raise NegativeDimension(f"negative value {value} at {dec} in degree {i}")
    return value


def parts_lower_bound(rs: RootSystem, nu) -> int | None:
    """Fewest positive roots that could sum to nu, by coefficient counting.

    nu is a weight (fundamental-weight coordinates). Returns None when nu is
    not in the nonnegative root lattice. Each positive root carries at most
    m_j copies of alpha_j, where m_j is the coefficient in the highest root.
    """
    c = rs.integral_root_coords(nu)
    if c is None or any(x < 0 for x in c):
        return None
    marks = rs.highest_root.simple_coords
    bound = max((-(-x // m) for x, m in zip(c, marks)), default=0)
    return max(bound, -(-sum(c) // rs.highest_root.height))


def min_parts(rs: RootSystem, nu, limit: int | None = None) -> int | None:
    """Exact least k with P_k(nu) > 0 (None if nu is not a nonnegative root-lattice point)."""
    c = rs.integral_root_coords(nu)
    if c is None or any(x < 0 for x in c):
        return None
    k = parts_lower_bound(rs, nu)
    top = sum(c) if limit is None else min(limit, sum(c))
    counter = get_counter(rs)
    while k <= top:
        if counter.count_vector(c, k):
            return k
        k += 1
    return None


# -- candidate enumeration ----------------------------------------------------

def low_pairing_weights(rs: RootSystem, cap: int, root_lattice_only: bool = False) -> list[Weight]:
    """Dominant mu with <mu, highest root^vee> <= cap."""
    co = rs.positive_coroots[-1]
    out = []

    def rec(j, budget, acc):
        if j == rs.rank:
            mu = Weight(tuple(acc))
            if not root_lattice_only or rs.in_root_lattice(mu):
                out.append(mu)
            return
        for c in range(budget // co[j] + 1):
            rec(j + 1, budget - c * co[j], acc + [c])

    rec(0, cap, [])
    return sorted(out, key=lambda m: (sum(a * b for a, b in zip(m.coords, co)), m.coords))


def decompositions_for_mu(rs: RootSystem, p: int, mu, max_degree: int | None = None
                          ) -> list[Decomposition]:
    """All dominant lambda = p mu + w.0 with lambda - mu >= 0 in the root lattice.

    With ``max_degree`` only those whose least possible degree
    l(w) + 2 * parts_lower_bound(lambda - mu) is at most ``max_degree`` are kept.

    The search extends w on the right: the inversion set of w s_i is that of
    w plus the root w(alpha_i), so -w.0 only grows. That makes both the
    lattice condition and the degree estimate prunable along the tree.
    """
    _check_prime(rs, p)
    mu = Weight(tuple(mu))
    n = rs.rank
    cartan = rs.cartan
    base = rs.integral_root_coords(tuple((p - 1) * c for c in mu.coords))
    if base is None:
        return []
    marks = rs.highest_root.simple_coords
    two_rho = rs.integral_root_coords(tuple(2 for _ in range(n)))
    htop = rs.highest_root.height
    total_ht = sum(two_rho)
    base_ht = sum(base)

    def hopeless(ell, inv):
        if max_degree is None:
            return False
        # any extension adds t roots; coordinate j can still grow by at most
        # two_rho[j] - inv[j], each root adding at most marks[j]
        for j in range(n):
            m = marks[j]
            if m * ell + 2 * base[j] - inv[j] - two_rho[j] > m * max_degree:
                return True
        return htop * ell + 2 * base_ht - sum(inv) - total_ht > htop * max_degree

    out = []
    # state: columns w(alpha_j) in simple-root coords, inv = root coords of -w.0,
    # y = w^{-1}(rho) in fundamental-weight coords for the canonical-parent rule
    cols0 = tuple(tuple(int(i == j) for i in range(n)) for j in range(n))
    stack = [(cols0, (0,) * n, rs.rho.coords, 0)]
    while stack:
        cols, inv, y, ell = stack.pop()
        # lambda = p mu - w.0 ... in weight coordinates
        lam = tuple(p * m + c for m, c in zip(mu.coords, _neg_weight(rs, inv)))
        if all(c >= 0 for c in lam):
            keep = True
            if max_degree is not None:
                kb = parts_lower_bound(rs, tuple(a - b for a, b in zip(lam, mu.coords)))
                keep = kb is not None and ell + 2 * kb <= max_degree
            if keep:
                w = from_rho_image(rs, tuple(a + b for a, b in
                                             zip(rs.rho.coords, _neg_weight(rs, inv))))
                out.append(Decomposition(Weight(lam), mu, w, p))
        for i in range(n - 1, -1, -1):
            if y[i] <= 0:
                continue
            col = cols[i]
            # y[i] > 0 means w(alpha_i) > 0, so w s_i is longer
            y2 = tuple(a - y[i] * b for a, b in zip(y, cartan[i]))
            if any(y2[j] < 0 for j in range(i)):
                continue
            inv2 = tuple(a + b for a, b in zip(inv, col))
            if any(a > b for a, b in zip(inv2, base)):
                continue
            if hopeless(ell + 1, inv2):
                continue
            cols2 = tuple(
                tuple(a - cartan[j][i] * b for a, b in zip(cols[j], col)) if j != i
                else tuple(-b for b in col)
                for j in range(n)
            )
            stack.append((cols2, inv2, y2, ell + 1))
    out.sort(key=lambda d: (d.length, d.lam.coords))
    return out


def _neg_weight(rs: RootSystem, root_coords) -> tuple[int, ...]:
    """Weight coordinates of minus the given root-lattice element."""
    w = rs.root_to_weight(root_coords).coords
    return tuple(-c for c in w)


def candidates(rs: RootSystem, p: int, pairing_cap: int = 1, root_lattice_only: bool = False,
               max_degree: int | None = None) -> list[Decomposition]:
    """Every dominant lambda = p mu + w.0 with <mu, highest coroot> <= cap and lambda - mu >= 0."""
    _check_prime(rs, p)
    out = []
    for mu in low_pairing_weights(rs, pairing_cap, root_lattice_only):
        out.extend(decompositions_for_mu(rs, p, mu, max_degree))
    return out


# -- degree bounds ------------------------------------------------------------

@dataclass(frozen=True)
class DegreeBoundReport:
    """Lower bounds on i for H^i(G, H^0(lambda) (x) H^0(lambda*)^(r)) != 0.

    ``bound_a`` is the best per-root bound over admissible roots (long roots
    only in G2), ``bound_b``/``bound_c`` use the highest root, ``bound_r``
    is the r-fold version with every delta_j = mu, and ``bound_count`` is
    l(w) + 2 * (fewest roots summing to lambda - mu by coefficient counting).
    """

    bound_a: int
    bound_b: int
    bound_c: int
    bound_r: int
    bound_count: int | None
    per_root: dict = field(default_factory=dict, compare=False)


def root_bound(rs: RootSystem, dec: Decomposition, sigma) -> int:
    """p<mu, s^vee> - <mu, s^vee> + l(w) + <w.0, s^vee> for one positive root s."""
    mu = dec.mu.coords
    w0 = dot(dec.w, rs.zero()).coords
    pm = rs.pair(mu, sigma)
    return dec.p * pm - pm + dec.length + rs.pair(w0, sigma)


def degree_bounds(rs: RootSystem, dec: Decomposition, r: int = 1) -> DegreeBoundReport:
    if not any(dec.mu.coords):
        raise ZeroMu("degree bounds need mu != 0")
    if r < 1:
        raise ValueError("r must be positive")
    p = dec.p
    per_root = {}
    for sigma in rs.positive_roots:
        if rs.family == "G" and sigma.length_class != "long":
            continue
        per_root[sigma.simple_coords] = root_bound(rs, dec, sigma)
    top = rs.highest_root
    m = rs.pair(dec.mu.coords, top)
    # two-weight bound with delta_1 = delta_2 = mu and w_1 = w_2 = w
    bound_b = p * m - m - 1
    bound_c = (p - 1) * m - 1
    bound_r = r * (p - 1) * m - r
    kb = parts_lower_bound(rs, dec.lam_minus_mu.coords)
    count = None if kb is None else dec.length + 2 * kb
    return DegreeBoundReport(max(per_root.values()), bound_b, bound_c, bound_r, count, per_root)


# -- searches -----------------------------------------------------------------

def _search_pool(rs: RootSystem, p: int, degree_cutoff: int, cap: int,
                 root_lattice_only: bool) -> list[Decomposition]:
    decs = [d for d in candidates(rs, p, cap, root_lattice_only, max_degree=degree_cutoff)
            if any(d.mu.coords)]
    if rs.simply_laced:
        # smallest nonzero weight in the linkage class of 0
        extra = decompose(rs, p, tuple((p - rs.coxeter_number + 1) * c for c in
                                       rs.root_to_weight(rs.highest_root).coords))
        if extra is not None and all(d.lam != extra.lam for d in decs):
            decs.append(extra)
    return decs


def least_nonvanishing(rs: RootSystem, p: int, degree_cutoff: int, *, cap: int = 1,
                       root_lattice_only: bool = False, workers: int = 1) -> list[CohomRecord]:
    """Records at the least positive degree <= cutoff where some candidate is nonzero."""
    _check_prime(rs, p)
    best = degree_cutoff
    found: list[CohomRecord] = []
    for dec in _search_pool(rs, p, degree_cutoff, cap, root_lattice_only):
        kb = parts_lower_bound(rs, dec.lam_minus_mu.coords)
        if kb is None:
            continue
        i = max(dec.length + 2 * kb, 1)
        if (i - dec.length) % 2:
            i += 1
        while i <= best:
            d = cohom_dim(rs, dec, i, workers=workers)
            if d:
                if i < best:
                    found = []
                    best = i
                found.append(CohomRecord(dec, i, d))
                break
            i += 2
    return sorted(found, key=lambda rec: rec.lam.coords, reverse=True)


def dominant_weights_below(rs: RootSystem, lam) -> list[Weight]:
    """Dominant nu != lambda with lambda - nu a nonnegative root-lattice element.

    Any two comparable dominant weights are joined by a chain of dominant
    weights whose steps are positive roots, so a search that only ever
    subtracts one positive root at a time reaches all of them.
    """
    lam = tuple(lam)
    roots = rs.positive_roots_omega
    seen = {lam}
    frontier = [lam]
    while frontier:
        nxt = []
        for x in frontier:
            for beta in roots:
                y = tuple(a - b for a, b in zip(x, beta))
                if y not in seen and all(c >= 0 for c in y):
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    seen.discard(lam)
    return sorted(Weight(c) for c in seen)


@dataclass(frozen=True)
class CertificateStatus:
    """Outcome of the non-vanishing test for H^m(G(F_p), k).

    status is ``"blocked"``, ``"certified"`` or ``"certified-unique"``.
    ``blockers`` lists (nu, dim in degree m+1) for linked nu below lambda.
    ``others`` lists competing records in degree m found within ``scope``.
    """

    status: str
    lam: Weight
    degree: int
    dim: int
    blockers: tuple = ()
    others: tuple = ()
    scope: str = ""

    @property
    def certified(self) -> bool:
        return self.status != "blocked"

    def as_dict(self) -> dict:
        return {
            "status": self.status,
            "lambda": list(self.lam.coords),
            "lambda_str": str(self.lam),
            "degree": self.degree,
            "dim": self.dim,
            "blockers": [{"nu": list(nu.coords), "nu_str": str(nu), "dim": d}
                         for nu, d in self.blockers],
            "others": [rec.as_dict() for rec in self.others],
            "scope": self.scope,
        }


def nonvanishing_certificate(rs: RootSystem, p: int, m: int, lam, *, cap: int = 1,
                             workers: int = 1) -> CertificateStatus:
    """Check that no linked nu below lambda has cohomology in degree m+1.

    Uniqueness (nothing else nonzero in degree m) is checked over the
    candidates with <mu, highest coroot> <= cap, plus the smallest nonzero
    weight linked to 0 in simply-laced types. When m < 2p - 3 that pool is
    complete, since larger mu cannot contribute below 2p - 3.
    """
    _check_prime(rs, p)
    lam = Weight(tuple(lam))
    dec = decompose(rs, p, lam)
    if dec is None:
        raise ValueError(f"{lam} is not of the form p mu + w.0")
    dim = cohom_dim(rs, dec, m, workers=workers)
    if dim == 0:
        raise ValueError(f"H^{m} vanishes for {lam}; nothing to certify")
    blockers = []
    for nu in dominant_weights_below(rs, lam):
        if not linked(rs, p, lam.coords, nu.coords):
            continue
        nd = decompose(rs, p, nu)
        if nd is None:
            continue
        d = cohom_dim(rs, nd, m + 1, workers=workers)
        if d:
            blockers.append((nu, d))
    if blockers:
        return CertificateStatus("blocked", lam, m, dim, tuple(blockers))
    others = []
    for other in _search_pool(rs, p, m, cap, False):
        if other.lam == lam:
            continue
        d = cohom_dim(rs, other, m, workers=workers)
        if d:
            others.append(CohomRecord(other, m, d))
    complete = m < 2 * p - 3
    scope = f"candidates with <mu, highest coroot> <= {cap}" + (
        "; complete because m < 2p-3" if complete else "; larger mu not checked"
    )
    status = "certified-unique" if not others and (complete or cap > 1) else "certified"
    return CertificateStatus(status, lam, m, dim, (), tuple(others), scope)
