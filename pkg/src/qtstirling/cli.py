"""Command-line interface: identity checks, value tables, exact evaluation.

Usage:
    qtstirling check [--n-max K] [--part-max P] [--identity ID]... [--out FILE]
    qtstirling table --kind s1 --bound 2,1 [--format json|csv] --out FILE
    qtstirling eval --expr "s1(2,1;1,0)" --q 1/2 --t 1/3 [--x 2]

`check` exits 0 iff every identity passes.  The cache used by the w-function
recursion can be capped with the QTSTIRLING_CACHE_SIZE environment variable.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .algebra import PoleError
from .partitions import Partition
from .verify import (
    MANIFEST,
    SuiteConfig,
    emit_table,
    eval_point,
    run_suite,
    write_report,
)


def _parse_partition(text: str) -> Partition:
    try:
        return Partition(tuple(int(v) for v in text.split(",")))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad partition {text!r}: {exc}")


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad rational {text!r}: {exc}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qtstirling",
        description="Exact verification of qt-Stirling and qt-binomial identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="run the identity suite")
    p_check.add_argument("--n-max", type=int, default=3)
    p_check.add_argument("--part-max", type=int, default=3)
    p_check.add_argument("--identity", action="append", default=None, metavar="ID",
                         help=f"restrict to these ids (repeatable); known: {', '.join(MANIFEST)}")
    p_check.add_argument("--seed", type=int, default=0)
    p_check.add_argument("--out", default=None, help="write the JSON report here")

    p_table = sub.add_parser("table", help="emit a value table")
    p_table.add_argument("--kind", required=True, choices=["s1", "s2", "binomial", "bracket"])
    p_table.add_argument("--bound", required=True, type=_parse_partition, metavar="PARTS",
                         help="bounding partition, e.g. 2,1")
    p_table.add_argument("--format", default="json", choices=["json", "csv"])
    p_table.add_argument("--out", default=None)

    p_eval = sub.add_parser("eval", help="evaluate a quantity at an exact rational point")
    p_eval.add_argument("--expr", required=True,
                        help='e.g. "qt_number(2,1)", "s1(2,1;1,0)", "binomial(2;1)"')
    p_eval.add_argument("--q", required=True, type=_parse_fraction)
    p_eval.add_argument("--t", required=True, type=_parse_fraction)
    p_eval.add_argument("--x", type=_parse_fraction, default=Fraction(0))
    return parser


def _cmd_check(args) -> int:
    cfg = SuiteConfig(
        n_max=args.n_max,
        part_max=args.part_max,
        identities=args.identity,
        seed=args.seed,
        output_path=args.out,
    )
    reports = run_suite(cfg)
    by_id: dict[str, list] = {}
    for rep in reports:
        by_id.setdefault(rep.identity_id, []).append(rep)
    failures = 0
    for identity_id, reps in by_id.items():
        bad = [r for r in reps if not r.passed]
        failures += len(bad)
        status = "ok" if not bad else f"FAIL ({len(bad)}/{len(reps)})"
        elapsed = sum(r.elapsed for r in reps)
        print(f"{identity_id:28s} {status:12s} {len(reps):4d} checks  {elapsed:7.2f}s")
        for r in bad[:5]:
            print(f"    {r.index_data} witness: {r.witness}")
    print(f"{len(reports)} checks, {failures} failures")
    return 0 if failures == 0 else 1


def _cmd_table(args) -> int:
    text = emit_table(args.kind, args.bound, args.format, args.out)
    if not args.out:
        sys.stdout.write(text)
    return 0


def _cmd_eval(args) -> int:
    try:
        value = eval_point(args.expr, args.q, args.t, args.x)
    except PoleError as exc:
        print(f"pole: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(value)
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "check":
        return _cmd_check(args)
    if args.command == "table":
        return _cmd_table(args)
    return _cmd_eval(args)


if __name__ == "__main__":
    sys.exit(main())
