"""Run the lemma-scale identity suites at their full grids and report timings."""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from lievanish.lemmas import (
    release_memos,
    verify_b_relations,
    verify_b_thresholds,
    verify_d_recursions,
    verify_f4_conjectures,
    verify_g2,
)


@dataclass
class LemmaConfig:
    d_grid: tuple[int, int, int] = (6, 6, 10)
    d_family: tuple[int, int] = (8, 10)
    b_relations: tuple[int, int, int] = (4, 4, 8)
    b_thresholds: tuple[int, int, int] = (5, 6, 10)
    g2_a_max: int = 40
    f4_m_max: int = 9


def run(cfg: LemmaConfig) -> int:
    suites = [
        lambda: verify_d_recursions(*cfg.d_grid, f_n_max=cfg.d_family[0], f_m_max=cfg.d_family[1]),
        lambda: verify_b_relations(*cfg.b_relations),
        lambda: verify_b_thresholds(*cfg.b_thresholds),
        lambda: verify_g2(cfg.g2_a_max),
        lambda: verify_f4_conjectures(range(1, cfg.f4_m_max + 1)),
    ]
    failed = 0
    for suite in suites:
        rep = suite()
        print(rep.summary())
        failed += not rep.ok
        release_memos()
    return 1 if failed else 0


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--quick", action="store_true", help="small grids for a smoke run")
    args = ap.parse_args()
    cfg = LemmaConfig()
    if args.quick:
        cfg = LemmaConfig((5, 3, 6), (6, 6), (3, 3, 6), (4, 4, 8), 12, 4)
    return run(cfg)


if __name__ == "__main__":
    raise SystemExit(main())
