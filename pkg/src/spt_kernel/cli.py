"""Batch command-line front end.

    spt-kernel table  [--order N] [--t T] [--format ...] [--out PATH]
    spt-kernel verify [--order N] [--oracle-bound B] [--only CHECK] ...
    spt-kernel export --what TARGET [--order N] [--format ...] [--out PATH]

Exit codes: 0 success, 1 verification failure, 2 usage error.
All emitted numbers are exact decimal strings; there are no floats.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import verify as verify_mod
from .sptcrank import sb_series, sptbar2_series
from .verify import (
    a2_formula,
    crank_component,
    rank_component,
    run_all,
)

_EXPORT_TARGETS = {
    "A2": lambda n: a2_formula(n),
    "N2rank0": lambda n: rank_component(0, n),
    "N2rank1": lambda n: rank_component(1, n),
    "N2rank2": lambda n: rank_component(2, n),
    "M2crank0": lambda n: crank_component(0, n),
    "M2crank1": lambda n: crank_component(1, n),
    "M2crank2": lambda n: crank_component(2, n),
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spt-kernel",
        description="Exact q-series tables and identity verification for the "
                    "overpartition spt2 crank.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--order", type=int, default=100,
                       help="truncation order N (default 100)")
        p.add_argument("--format", choices=("json", "csv", "text"),
                       default="text")
        p.add_argument("--out", default=None,
                       help="output path (default stdout; relative paths "
                            "resolve under $SPT_KERNEL_OUT_DIR if set)")

    p_table = sub.add_parser("table", help="spt2bar values and residue-class rows")
    common(p_table)
    p_table.add_argument("--t", type=int, default=3,
                         help="residue-class modulus (default 3)")

    p_verify = sub.add_parser("verify", help="run the identity/congruence checks")
    common(p_verify)
    p_verify.add_argument("--oracle-bound", type=int, default=20,
                          help="enumeration cross-check bound (default 20, max 30)")
    p_verify.add_argument("--only", default=None,
                          help="run a single named check")

    p_export = sub.add_parser("export", help="dump dissection components or the table")
    common(p_export)
    p_export.add_argument("--what", required=True,
                          choices=("spt2", "table", *sorted(_EXPORT_TARGETS)))
    return parser


def _open_out(path: str | None):
    if path is None:
        return sys.stdout, False
    if not os.path.isabs(path):
        base = os.environ.get("SPT_KERNEL_OUT_DIR")
        if base:
            path = os.path.join(base, path)
    return open(path, "w"), True


def _emit(lines, out_path) -> int:
    try:
        fh, close = _open_out(out_path)
    except OSError as exc:
        print(f"spt-kernel: cannot open output: {exc}", file=sys.stderr)
        return 1
    try:
        for line in lines:
            fh.write(line + "\n")
    finally:
        if close:
            fh.close()
    return 0


def cmd_table(args) -> int:
    table = sb_series(args.order)
    s2 = sptbar2_series(args.order)
    rows = [(n, s2.coefficient(n), table.residue_sums(n, args.t))
            for n in range(1, args.order + 1)]
    if args.format == "json":
        lines = [json.dumps({
            "n": n, "spt2": str(v), "t": args.t,
            "classes": [str(c) for c in classes],
        }, sort_keys=True) for n, v, classes in rows]
    elif args.format == "csv":
        lines = ["n,spt2," + ",".join(f"class{k}" for k in range(args.t))]
        lines += [f"{n},{v}," + ",".join(str(c) for c in classes)
                  for n, v, classes in rows]
    else:
        lines = [f"n={n:<4d} spt2={v:<12d} classes(mod {args.t})={classes}"
                 for n, v, classes in rows]
    return _emit(lines, args.out)


def cmd_verify(args) -> int:
    try:
        reports = run_all(args.order, oracle_bound=args.oracle_bound,
                          only=args.only)
    except ValueError as exc:
        print(f"spt-kernel: {exc}", file=sys.stderr)
        return 2
    if args.format == "text":
        lines = [f"{r.check:<14s} order={r.order:<5d} {r.status}"
                 + (f"  first_failure={r.first_failure}" if r.first_failure else "")
                 for r in reports]
    else:
        lines = [r.to_json() for r in reports]
    rc = _emit(lines, args.out)
    if rc:
        return rc
    return 0 if all(r.passed for r in reports) else 1


def cmd_export(args) -> int:
    if args.what == "table":
        table = sb_series(args.order)
        triples = list(table.csv_rows())
        if args.format == "json":
            lines = [json.dumps({"n": n, "m": m, "coefficient": str(c)})
                     for n, m, c in triples]
        elif args.format == "csv":
            lines = ["n,m,coefficient"] + [f"{n},{m},{c}" for n, m, c in triples]
        else:
            lines = [f"N_SB(m={m}, n={n}) = {c}" for n, m, c in triples]
        return _emit(lines, args.out)
    if args.what == "spt2":
        s2 = sptbar2_series(args.order)
        pairs = [(n, s2.coefficient(n)) for n in range(1, args.order + 1)]
        if args.format == "json":
            lines = [json.dumps({"n": n, "spt2": str(v)}) for n, v in pairs]
        elif args.format == "csv":
            lines = ["n,spt2"] + [f"{n},{v}" for n, v in pairs]
        else:
            lines = [f"spt2({n}) = {v}" for n, v in pairs]
        return _emit(lines, args.out)
    series = _EXPORT_TARGETS[args.what](args.order)
    coeffs = [(n, series.coefficient(n)) for n in range(series.order + 1)]
    if args.format == "json":
        lines = [json.dumps({
            "target": args.what, "order": series.order,
            "coefficients": [str(c) for _, c in coeffs],
        })]
    elif args.format == "csv":
        lines = ["n,coefficient"] + [f"{n},{c}" for n, c in coeffs]
    else:
        lines = [f"[q^{n}] {args.what} = {c}" for n, c in coeffs]
    return _emit(lines, args.out)


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.order < 1:
        parser.error("--order must be >= 1")
    if args.command == "verify":
        if not 0 <= args.oracle_bound <= 30:
            parser.error("--oracle-bound must be between 0 and 30")
        if args.only is not None and args.only not in verify_mod.CHECKS:
            parser.error(f"unknown check {args.only!r}; choose from "
                         f"{sorted(verify_mod.CHECKS)}")
    if args.command == "table" and args.t < 1:
        parser.error("--t must be >= 1")
    handler = {"table": cmd_table, "verify": cmd_verify, "export": cmd_export}
    return handler[args.command](args)


if __name__ == "__main__":
    raise SystemExit(main())
