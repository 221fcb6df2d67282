"""Independent recomputation of the B5, p = 19 value for lambda = 9 w5 in degree 35.

The library prunes the Weyl orbit and counts partitions with a packed
memoised recursion. This script does neither: it walks all of W(B5) and
counts each target with a plain memoised recursion over the root list.
It also prints the next few degrees.
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass
from functools import lru_cache

from lievanish.cohomology import cohom_dim, decompose
from lievanish.rootsys import build
from lievanish.weyl import dot, enumerate_group


@dataclass
class CrosscheckConfig:
    label: str = "B5"
    p: int = 19
    lam: tuple[int, ...] = (0, 0, 0, 0, 9)
    degree: int = 35
    extra_degrees: tuple[int, ...] = (37, 39, 41)


def full_group_sum(cfg: CrosscheckConfig) -> int:
    rs = build(cfg.label)
    dec = decompose(rs, cfg.p, cfg.lam)
    k = (cfg.degree - dec.length) // 2
    roots = [r.simple_coords for r in rs.positive_roots]

    @lru_cache(maxsize=None)
    def partitions(i: int, v: tuple[int, ...], q: int) -> int:
        if q == 0:
            return int(not any(v))
        if i == len(roots):
            return 0
        total, m, w = 0, 0, v
        while m <= q and min(w) >= 0:
            total += partitions(i + 1, w, q - m)
            w = tuple(a - b for a, b in zip(w, roots[i]))
            m += 1
        return total

    total = 0
    for u in enumerate_group(rs):
        diff = tuple(a - b for a, b in zip(dot(u, cfg.lam).coords, dec.mu.coords))
        nu = rs.integral_root_coords(diff)
        if nu is None or min(nu) < 0:
            continue
        total += u.sign * partitions(0, nu, k)
    return total


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--skip-full", action="store_true", help="only run the library route")
    args = ap.parse_args()
    cfg = CrosscheckConfig()
    rs = build(cfg.label)
    dec = decompose(rs, cfg.p, cfg.lam)
    print(f"{dec}; mu = {dec.mu}")
    print(f"library route, degree {cfg.degree}: {cohom_dim(rs, dec, cfg.degree)}")
    if not args.skip_full:
        print(f"full-group route, degree {cfg.degree}: {full_group_sum(cfg)}")
    for i in cfg.extra_degrees:
        print(f"library route, degree {i}: {cohom_dim(rs, dec, i)}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
