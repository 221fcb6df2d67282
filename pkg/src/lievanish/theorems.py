"""Proved vanishing ranges for H^i(G(F_q), k), q = p^r, as a curated table.

Nothing here is computed from partition functions. Each entry records a
bound D with H^i(G(F_q), k) = 0 for 0 < i < D, whether D is known to be
sharp, and the degree where non-vanishing is known.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rootsys import RootSystem

__all__ = ["OutOfTheoremScope", "BoundResult", "theorem_bound", "VARIANTS"]

VARIANTS = ("universal", "adjoint", "twisted-adjoint")


class OutOfTheoremScope(ValueError):
    pass


@dataclass(frozen=True)
class BoundResult:
    """``sharp`` is True, False or None (open)."""

    vanishing_below: int
    sharp: bool | None
    first_nonzero: int | None
    cohomology: str | None
    source: str

    @property
    def D(self) -> int:
        return self.vanishing_below

    def as_dict(self) -> dict:
        return {
            "D": self.vanishing_below,
            "sharp": "unknown" if self.sharp is None else self.sharp,
            "first_nonzero": self.first_nonzero,
            "cohomology": self.cohomology,
            "source": self.source,
        }


def _sharp(d: int, source: str, cohomology: str | None = None) -> BoundResult:
    return BoundResult(d, True, d, cohomology, source)


def _open(d: int, source: str, first_nonzero: int | None = None) -> BoundResult:
    return BoundResult(d, None, first_nonzero, None, source)


def theorem_bound(rs: RootSystem, p: int, r: int = 1, variant: str = "universal") -> BoundResult:
    """Look up the proved bound for (type, p, r, variant)."""
    if variant not in VARIANTS:
        raise OutOfTheoremScope(f"unknown variant {variant!r}; expected one of {VARIANTS}")
    if r < 1:
        raise OutOfTheoremScope("r must be a positive integer")
    h = rs.coxeter_number
    if p <= h:
        raise OutOfTheoremScope(f"all results assume p > h = {h}; got p = {p}")
    fam, n = rs.family, rs.rank
    label = rs.label

    if variant != "universal":
        if not rs.simply_laced:
            raise OutOfTheoremScope(f"the {variant} results cover simply-laced types only, not {label}")
        if variant == "twisted-adjoint" and not (fam in "AD" or label == "E6"):
            raise OutOfTheoremScope("twisted groups need a diagram automorphism: types A, D, E6")
        return _sharp(r * (2 * p - 3), f"simply-laced {variant} type, p > h: sharp at r(2p-3)")

    if fam == "A":
        # only the general range from earlier work is recorded here
        return _open(r * (p - 2), "all types, p > h: vanishing below r(p-2) (earlier work)")
    if fam == "C":
        return _sharp(r * (p - 2), "type C_n, p > h: sharp at r(p-2) (earlier work)")
    if fam == "D":
        if n < 4:
            raise OutOfTheoremScope("type D results need rank n >= 4")
        coh = "k" if n >= 5 else "k+k+k"
        return _sharp(r * (2 * p - 2 * n), "type D_n, p > 2n-2: sharp at r(2p-2n)", coh)
    if label == "E6":
        if p == 13:
            return _sharp(16 * r, "type E6, p = 13: sharp at 16r")
        if p == 17 and r % 2 == 0:
            return _open(27 * r, "type E6, p = 17, r even: vanishing below 27r, nonzero at 31r", 31 * r)
        if p == 19 and r > 1:
            return _open(32 * r, "type E6, p = 19, r > 1: vanishing below 32r, nonzero at 35r", 35 * r)
        return _sharp(r * (2 * p - 3), "type E6, p >= 13: sharp at r(2p-3)")
    if label == "E7":
        if p == 19:
            return _sharp(27 * r, "type E7, p = 19: sharp at 27r")
        if p == 23:
            return _sharp(39 * r, "type E7, p = 23: sharp at 39r")
        return _sharp(r * (2 * p - 3), "type E7, p >= 19: sharp at r(2p-3)")
    if label == "E8":
        return _sharp(r * (2 * p - 3), "type E8, p >= 31: sharp at r(2p-3)")
    if fam == "B":
        if n < 3:
            raise OutOfTheoremScope("type B results need rank n >= 3")
        if r > 1:
            return _open(r * (p - 2), "type B_n, r > 1: only the general range r(p-2) is proved")
        if n >= 7 or (n in (5, 6) and p > 13):
            return _sharp(2 * p - 3, "type B_n, n >= 7 or p > 13 for n = 5, 6: sharp at 2p-3")
        if n in (5, 6) and p == 13:
            return _sharp(2 * p - 5, "type B_n, n = 5, 6, p = 13: sharp at 2p-5", "k")
        if n == 5 and p == 11:
            return _sharp(2 * p - 7, "type B5, p = 11: sharp at 2p-7", "k")
        return _sharp(2 * p - 8, "type B_n, n = 3, 4: sharp at 2p-8", "k")
    if label == "G2":
        if r > 1:
            return _open(r * (p - 2), "type G2, r > 1: only the general range r(p-2) is proved")
        return _open(2 * p - 8, "type G2, p >= 7: vanishing below 2p-8, sharpness open")
    if label == "F4":
        if r > 1:
            return _open(r * (p - 2), "type F4, r > 1: only the general range r(p-2) is proved")
        return _open(2 * p - 9, "type F4, p >= 13: vanishing below 2p-9, sharpness open")
    raise OutOfTheoremScope(f"no recorded theorem covers {label}")
