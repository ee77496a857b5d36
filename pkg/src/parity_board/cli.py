"""Command line front end.

Exit codes: 0 when every check passes, 1 when a verification finds any
mismatch, 2 on usage or parameter errors.  Data rows go to stdout (or the
``--out`` file); a one-line timing summary goes to stderr so the data stream
stays byte-stable.
"""

from __future__ import annotations

import argparse
import sys
from typing import Iterable, Optional

from . import tables, verify


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"{value} is negative")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"{value} is not positive")
    return value


def _add_output_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--format",
        choices=("tsv", "json-lines"),
        default="tsv",
        help="output format (default tsv)",
    )
    p.add_argument("--out", metavar="PATH", help="write rows to PATH instead of stdout")


def _add_jobs_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--jobs",
        type=_positive,
        default=1,
        metavar="W",
        help="shard the parameter grid over W worker processes",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parity-board",
        description="Enumerate partition-style objects and machine-check the identities tying them together.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list objects one per line")
    what = p.add_subparsers(dest="what", required=True)
    pp = what.add_parser("partitions", help="partitions of n")
    pp.add_argument("--n", type=_nonnegative, required=True)
    pp.add_argument("--max-part", type=_positive, default=None)
    pp.add_argument("--even-only", action="store_true", help="keep all-even partitions only")
    _add_output_flags(pp)
    ps = what.add_parser("strict", help="strict partitions of n")
    ps.add_argument("--n", type=_nonnegative, required=True)
    ps.add_argument("--parts", type=_nonnegative, default=None, help="exact number of parts")
    _add_output_flags(ps)
    pq = what.add_parser("abseq", help="sequences with parameters (a, b) and weight 2n")
    pq.add_argument("--a", type=_nonnegative, required=True)
    pq.add_argument("--b", type=_positive, required=True)
    pq.add_argument("--half-weight", type=_nonnegative, required=True, metavar="N")
    _add_output_flags(pq)

    p = sub.add_parser("verify-phi", help="sequence <-> partition bijection sweep")
    p.add_argument("--a-max", type=_nonnegative, default=3)
    p.add_argument("--b-max", type=_nonnegative, default=4)
    p.add_argument("--n-max", type=_nonnegative, default=12)
    _add_jobs_flag(p)
    _add_output_flags(p)

    p = sub.add_parser("verify-gf", help="generating function coefficients vs enumeration")
    p.add_argument("--a-max", type=_nonnegative, default=4)
    p.add_argument("--b-max", type=_nonnegative, default=8)
    p.add_argument("--trunc", type=_nonnegative, default=15)
    _add_jobs_flag(p)
    _add_output_flags(p)

    p = sub.add_parser("verify-iota", help="staircase split of strict partitions sweep")
    p.add_argument("--n-max", type=_nonnegative, default=25)
    _add_jobs_flag(p)
    _add_output_flags(p)

    p = sub.add_parser("verify-thm34", help="counts by (parts, BG-rank) vs closed form")
    p.add_argument("--k-min", type=int, default=-3)
    p.add_argument("--k-max", type=int, default=3)
    p.add_argument("--m-max", type=_positive, default=8)
    p.add_argument("--n-max", type=_nonnegative, default=30)
    _add_jobs_flag(p)
    _add_output_flags(p)

    p = sub.add_parser("verify-euler", help="strict vs triangular-plus-even-part counts")
    p.add_argument("--n-max", type=_nonnegative, default=40)
    _add_jobs_flag(p)
    _add_output_flags(p)

    p = sub.add_parser("verify-congruences", help="mod-5 families of rank counts")
    p.add_argument("--n-max", type=_nonnegative, default=101)
    _add_jobs_flag(p)
    _add_output_flags(p)

    p = sub.add_parser("table", help="emit a named table")
    p.add_argument("kind", choices=tables.TABLE_KINDS)
    p.add_argument("--n", type=_nonnegative, default=None, help="bound for table1 and counts")
    p.add_argument("--a-max", type=_nonnegative, default=4)
    p.add_argument("--b-max", type=_nonnegative, default=8)
    p.add_argument("--trunc", type=_nonnegative, default=15)
    p.add_argument("--k-min", type=int, default=-3)
    p.add_argument("--k-max", type=int, default=3)
    p.add_argument("--m-max", type=_positive, default=8)
    p.add_argument("--n-max", type=_nonnegative, default=30)
    _add_output_flags(p)

    return parser


def _write(lines: Iterable[str], out: Optional[str]) -> None:
    text = "".join(line + "\n" for line in lines)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _run_verify(args: argparse.Namespace) -> int:
    runners = {
        "verify-phi": lambda: verify.verify_bijection_phi(
            args.a_max, args.b_max, args.n_max, jobs=args.jobs
        ),
        "verify-gf": lambda: verify.verify_gf(args.a_max, args.b_max, args.trunc, jobs=args.jobs),
        "verify-iota": lambda: verify.verify_iota(args.n_max, jobs=args.jobs),
        "verify-thm34": lambda: verify.verify_theorem34(
            args.k_min, args.k_max, args.m_max, args.n_max, jobs=args.jobs
        ),
        "verify-euler": lambda: verify.verify_euler_vandervelde(args.n_max, jobs=args.jobs),
        "verify-congruences": lambda: verify.verify_congruences(args.n_max, jobs=args.jobs),
    }
    report = runners[args.command]()
    lines = report.tsv_lines() if args.format == "tsv" else report.json_lines()
    _write(lines, args.out)
    print(
        f"# {report.subject}: {report.checks_run} checks, "
        f"{len(report.mismatches)} mismatches, {report.skipped} skipped "
        f"in {report.elapsed:.2f}s",
        file=sys.stderr,
    )
    return report.exit_code


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "enumerate":
        if args.what == "partitions":
            parts_filter = "even-only" if args.even_only else "any"
            lines = tables.emit_partitions(args.n, args.max_part, parts_filter, args.format)
        elif args.what == "strict":
            lines = tables.emit_strict_partitions(args.n, args.parts, args.format)
        else:
            lines = tables.emit_sequences(args.a, args.b, args.half_weight, args.format)
        _write(lines, args.out)
        return 0

    if args.command == "table":
        if args.kind in ("table1", "counts"):
            if args.n is None:
                parser.error(f"table {args.kind} requires --n")
            lines = tables.emit_table(args.kind, args.format, n=args.n)
        elif args.kind == "s-coeffs":
            lines = tables.emit_table(
                args.kind, args.format, a_max=args.a_max, b_max=args.b_max, trunc=args.trunc
            )
        else:
            if args.k_min > args.k_max:
                parser.error("--k-min must not exceed --k-max")
            lines = tables.emit_table(
                args.kind,
                args.format,
                k_min=args.k_min,
                k_max=args.k_max,
                m_max=args.m_max,
                n_max=args.n_max,
            )
        _write(lines, args.out)
        return 0

    return _run_verify(args)


def run() -> None:
    raise SystemExit(main())
