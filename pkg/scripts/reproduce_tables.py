"""Recompute every published table and write one JSON report per table."""

from __future__ import annotations

import argparse
import resource
from dataclasses import dataclass, field
from pathlib import Path

from lievanish.kostant import default_workers
from lievanish.lemmas import release_memos
from lievanish.tables import TABLE_IDS, reproduce_table


@dataclass
class TablesConfig:
    tables: list[str] = field(default_factory=lambda: list(TABLE_IDS))
    out_dir: Path = Path("results/tables")
    workers: int = field(default_factory=default_workers)


def run(cfg: TablesConfig) -> int:
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    failed = 0
    for table_id in cfg.tables:
        rep = reproduce_table(table_id, workers=cfg.workers)
        (cfg.out_dir / f"{table_id}.json").write_text(rep.to_json() + "\n")
        peak_mb = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss // 1024
        print(f"{rep.summary()}, peak {peak_mb} MB")
        for row in rep.mismatches:
            print(f"  expected {row.expected}, computed {row.computed}: {row.inputs} [{row.citation}]")
        failed += not rep.ok
        release_memos()
    return 1 if failed else 0


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("tables", nargs="*", metavar="ID", help=f"default: all of {', '.join(TABLE_IDS)}")
    ap.add_argument("--out-dir", type=Path, default=TablesConfig.out_dir)
    ap.add_argument("--workers", type=int, default=None)
    args = ap.parse_args()
    unknown = sorted(set(args.tables) - set(TABLE_IDS))
    if unknown:
        ap.error(f"unknown table(s): {', '.join(unknown)}")
    cfg = TablesConfig(tables=args.tables or list(TABLE_IDS), out_dir=args.out_dir)
    if args.workers:
        cfg.workers = args.workers
    return run(cfg)


if __name__ == "__main__":
    raise SystemExit(main())
