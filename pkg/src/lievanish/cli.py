"""Command-line front end.

Weights are comma-separated fundamental-weight coordinates. The ``kostant``
target ``--nu`` and the roots given to ``--exclude``/``--force`` are in
simple-root coordinates.

Exit codes: 0 when every check passes, 1 on a mismatch (or a blocked
certificate), 2 on usage errors and runtime-guard violations.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import kostant
from .cohomology import (
    PrimeTooSmall,
    cohom_dim,
    decompose,
    least_nonvanishing,
    nonvanishing_certificate,
)
from .kostant import MemoBudgetExceeded, PartitionQuery, count, default_workers
from .lemmas import verify_b_relations, verify_b_thresholds, verify_d_recursions
from .lemmas import verify_f4_conjectures, verify_g2
from .report import TableReport
from .rootsys import InvalidRank, UnsupportedType, build, format_weight
from .tables import TABLE_IDS, UnknownTable, reproduce_table
from .theorems import VARIANTS, OutOfTheoremScope, theorem_bound

__all__ = ["main", "build_parser"]


class UsageError(ValueError):
    """A bad flag value; the message names the flag."""


def _ints(flag: str, text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
    except ValueError:
        raise UsageError(f"{flag}: expected comma-separated integers, got {text!r}") from None


def _vector(flag: str, text: str, rank: int) -> tuple[int, ...]:
    vec = _ints(flag, text)
    if len(vec) != rank:
        raise UsageError(f"{flag}: expected {rank} coordinates, got {len(vec)}")
    return vec


def _system(args):
    try:
        return build(args.type, args.rank)
    except (InvalidRank, UnsupportedType) as exc:
        raise UsageError(f"TYPE RANK: {exc}") from None


def _global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--json", action="store_true", default=d(False), help="emit one JSON document")
    parser.add_argument("--tsv", action="store_true", default=d(False), help="emit tab-separated output")
    parser.add_argument("--threads", type=int, default=d(None), metavar="N",
                        help="worker processes for Weyl sums (default: THREADS or CPU count)")
    parser.add_argument("--memo-budget", type=int, default=d(None), metavar="N",
                        help="cap on memoised partition states per root system")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lievanish", description=__doc__.splitlines()[0])
    _global_flags(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    def typed(name, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("type", metavar="TYPE", help="A, B, C, D, E6, E7, E8, F4 or G2")
        sp.add_argument("rank", metavar="RANK", type=int)
        return sp

    typed("build-info", "root system data")

    sp = typed("kostant", "count multisets of positive roots")
    sp.add_argument("--nu", required=True, help="target in simple-root coordinates")
    sp.add_argument("--parts", required=True, type=int)
    sp.add_argument("--exclude", action="append", default=[], metavar="ROOT",
                    help="drop a root (simple-root coordinates); repeatable")
    sp.add_argument("--force", action="append", default=[], metavar="ROOT:M",
                    help="require at least M copies of ROOT; repeatable")

    sp = typed("dim", "dimension in one degree")
    sp.add_argument("--p", required=True, type=int)
    sp.add_argument("--lambda", dest="lam", required=True)
    sp.add_argument("--degree", required=True, type=int)

    sp = typed("vanish", "least degree with nonzero cohomology among candidates")
    sp.add_argument("--p", required=True, type=int)
    sp.add_argument("--cutoff", type=int, default=None, help="default 2p-3")
    sp.add_argument("--cap", type=int, default=1, help="largest <mu, highest coroot> searched")
    sp.add_argument("--adjoint", action="store_true", help="root-lattice candidates only")

    sp = typed("certify", "non-vanishing certificate for one weight")
    sp.add_argument("--p", required=True, type=int)
    sp.add_argument("--degree", required=True, type=int)
    sp.add_argument("--lambda", dest="lam", required=True)
    sp.add_argument("--cap", type=int, default=1)

    sp = sub.add_parser("table", parents=[common], help="reproduce a published table")
    sp.add_argument("table_id", metavar="ID", choices=TABLE_IDS)
    sp.add_argument("--expected", default=None, metavar="PATH", help="override the embedded TSV")

    sp = sub.add_parser("verify", parents=[common], help="run a lemma-scale identity suite")
    vs = sp.add_subparsers(dest="suite", required=True)
    v = vs.add_parser("d", parents=[common])
    v.add_argument("--n-max", type=int, default=6)
    v.add_argument("--m-max", type=int, default=6)
    v.add_argument("--k-max", type=int, default=10)
    v.add_argument("--f-n-max", type=int, default=None)
    v.add_argument("--f-m-max", type=int, default=None)
    v = vs.add_parser("b", parents=[common])
    v.add_argument("--n-max", type=int, default=4)
    v.add_argument("--m-max", type=int, default=4)
    v.add_argument("--k-max", type=int, default=8)
    v = vs.add_parser("g2", parents=[common])
    v.add_argument("--a-max", type=int, default=40)
    v = vs.add_parser("f4", parents=[common])
    v.add_argument("--m-max", type=int, default=7)

    sp = typed("bounds", "proved vanishing range for G(F_q)")
    sp.add_argument("--p", required=True, type=int)
    sp.add_argument("--r", type=int, default=1)
    sp.add_argument("--variant", default="universal", choices=VARIANTS)
    return parser


# -- subcommands: each returns (document, report or None, exit code) ---------

def _cmd_build_info(args, workers):
    rs = _system(args)
    doc = {
        "type": rs.type_label,
        "label": rs.label,
        "rank": rs.rank,
        "cartan": [list(r) for r in rs.cartan],
        "num_positive_roots": len(rs.positive_roots),
        "coxeter_number": rs.coxeter_number,
        "weyl_order": rs.weyl_order,
        "rho": list(rs.rho.coords),
        "highest_root": list(rs.highest_root.simple_coords),
        "highest_root_weight": list(rs.root_to_weight(rs.highest_root.simple_coords).coords),
        "highest_short_root": list(rs.highest_short_root.simple_coords),
        "positive_roots": [list(r.simple_coords) for r in rs.positive_roots],
    }
    return doc, None, 0


def _parse_force(rank: int, items) -> list:
    out = []
    for item in items:
        root, sep, mult = item.rpartition(":")
        if not sep:
            raise UsageError(f"--force: expected ROOT:M, got {item!r}")
        try:
            m = int(mult)
        except ValueError:
            raise UsageError(f"--force: multiplicity must be an integer, got {mult!r}") from None
        out.append((_vector("--force", root, rank), m))
    return out


def _cmd_kostant(args, workers):
    rs = _system(args)
    nu = _vector("--nu", args.nu, rs.rank)
    excluded = [_vector("--exclude", e, rs.rank) for e in args.exclude]
    forced = _parse_force(rs.rank, args.force)
    for r in excluded + [r for r, _ in forced]:
        if r not in rs.root_index:
            flag = "--exclude" if r in excluded else "--force"
            raise UsageError(f"{flag}: {r} is not a positive root of {rs.label}")
    try:
        q = PartitionQuery(nu, args.parts, frozenset(excluded), tuple(forced))
    except ValueError as exc:
        raise UsageError(f"--parts/--force: {exc}") from None
    value = count(rs, q).value
    doc = {
        "type": rs.label,
        "nu": list(nu),
        "parts": args.parts,
        "excluded": [list(r) for r in sorted(q.excluded_roots)],
        "forced": [[list(r), m] for r, m in q.forced_min],
        "value": value,
    }
    return doc, None, 0


def _decomposition(rs, p, lam):
    dec = decompose(rs, p, lam)
    if dec is None:
        raise UsageError(f"--lambda: {format_weight(lam)} is not p*mu + w.0 with mu dominant")
    return dec


def _cmd_dim(args, workers):
    rs = _system(args)
    lam = _vector("--lambda", args.lam, rs.rank)
    dec = _decomposition(rs, args.p, lam)
    value = cohom_dim(rs, dec, args.degree, workers=workers)
    doc = {
        "type": rs.label,
        "p": args.p,
        "lambda": list(lam),
        "lambda_str": format_weight(lam),
        "mu": list(dec.mu.coords),
        "length": dec.length,
        "degree": args.degree,
        "dim": value,
    }
    return doc, None, 0


def _cmd_vanish(args, workers):
    rs = _system(args)
    cutoff = 2 * args.p - 3 if args.cutoff is None else args.cutoff
    recs = least_nonvanishing(rs, args.p, cutoff, cap=args.cap,
                              root_lattice_only=args.adjoint, workers=workers)
    doc = {
        "type": rs.label,
        "p": args.p,
        "cutoff": cutoff,
        "cap": args.cap,
        "adjoint": args.adjoint,
        "D": recs[0].degree if recs else None,
        "vanishes_below": recs[0].degree if recs else cutoff + 1,
        "records": [r.as_dict() for r in recs],
    }
    return doc, None, 0


def _cmd_certify(args, workers):
    rs = _system(args)
    lam = _vector("--lambda", args.lam, rs.rank)
    _decomposition(rs, args.p, lam)
    try:
        cert = nonvanishing_certificate(rs, args.p, args.degree, lam, cap=args.cap, workers=workers)
    except ValueError as exc:
        raise UsageError(f"--degree: {exc}") from None
    doc = {"type": rs.label, "p": args.p, **cert.as_dict()}
    return doc, None, 0 if cert.certified else 1


def _cmd_table(args, workers):
    rep = reproduce_table(args.table_id, workers=workers, expected_path=args.expected)
    return rep.as_dict(), rep, 0 if rep.ok else 1


def _merge(table_id: str, reports) -> TableReport:
    out = TableReport(table_id)
    for r in reports:
        out.rows.extend(r.rows)
        out.extras.extend(r.extras)
        out.runtime_ms += r.runtime_ms
    return out


def _cmd_verify(args, workers):
    try:
        if args.suite == "d":
            rep = verify_d_recursions(args.n_max, args.m_max, args.k_max, f_n_max=args.f_n_max,
                                      f_m_max=args.f_m_max, workers=workers)
        elif args.suite == "b":
            rep = _merge("verify-b", [
                verify_b_relations(args.n_max, args.m_max, args.k_max, workers=workers),
                verify_b_thresholds(args.n_max, args.m_max, args.k_max, workers=workers),
            ])
        elif args.suite == "g2":
            rep = verify_g2(args.a_max)
        else:
            rep = verify_f4_conjectures(range(1, args.m_max + 1), workers=workers)
    except ValueError as exc:
        raise UsageError(f"verify {args.suite}: {exc}") from None
    return rep.as_dict(), rep, 0 if rep.ok else 1


def _cmd_bounds(args, workers):
    rs = _system(args)
    res = theorem_bound(rs, args.p, args.r, args.variant)
    doc = {"type": rs.label, "p": args.p, "r": args.r, "variant": args.variant, **res.as_dict()}
    return doc, None, 0


_COMMANDS = {
    "build-info": _cmd_build_info,
    "kostant": _cmd_kostant,
    "dim": _cmd_dim,
    "vanish": _cmd_vanish,
    "certify": _cmd_certify,
    "table": _cmd_table,
    "verify": _cmd_verify,
    "bounds": _cmd_bounds,
}


def _text(doc: dict, rep: TableReport | None) -> str:
    if rep is not None:
        lines = [rep.summary()]
        for row in rep.mismatches:
            lines.append(f"  MISMATCH {json.dumps(row.inputs, sort_keys=True)}: expected "
                         f"{row.expected}, computed {row.computed} [{row.citation}]")
        return "\n".join(lines)
    return "\n".join(f"{k}: {v}" for k, v in doc.items())


def _tsv(doc: dict, rep: TableReport | None) -> str:
    if rep is not None:
        return rep.to_tsv()
    return "\n".join(f"{k}\t{json.dumps(v) if isinstance(v, (list, dict)) else v}"
                     for k, v in doc.items())


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.threads is not None and args.threads < 1:
        print("error: --threads: must be at least 1", file=sys.stderr)
        return 2
    if args.memo_budget is not None:
        if args.memo_budget < 1:
            print("error: --memo-budget: must be positive", file=sys.stderr)
            return 2
        kostant.set_memo_budget(args.memo_budget)
    workers = args.threads or default_workers()
    try:
        doc, rep, code = _COMMANDS[args.command](args, workers)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (PrimeTooSmall, OutOfTheoremScope, UnknownTable) as exc:
        print(f"error: --p/TYPE: {exc}", file=sys.stderr)
        return 2
    except MemoBudgetExceeded as exc:
        print(f"error: --memo-budget: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(doc, indent=2, sort_keys=True))
    elif args.tsv:
        print(_tsv(doc, rep))
    else:
        print(_text(doc, rep))
    return code


if __name__ == "__main__":
    sys.exit(main())
