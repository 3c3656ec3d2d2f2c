"""Command-line front end.

Commands: ``spectrum``, ``chain``, ``berezin``, ``verify``. Exit codes are
0 success, 1 usage error, 2 bad input file, 3 numeric failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from .fockmeasure import AtomicMeasure, MeasureFormatError, QuadratureError, load_measure
from .snf import parse_snf
from .toeplitz import build_atomic, build_truncated
from .verify import (
    DEFAULT_SEED,
    SUITES,
    ReportRow,
    berezin_sandwich,
    main_chain,
    partition_subadditivity,
    rows_to_csv,
    rows_to_structured,
)

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_NUMERIC = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive(text):
    x = _finite(text)
    if not x > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return x


def _finite(text):
    try:
        x = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text}") from None
    if not math.isfinite(x):
        raise argparse.ArgumentTypeError(f"must be finite, got {text}")
    return x


def _power(text):
    x = _finite(text)
    if not (0 < x <= 1):
        raise argparse.ArgumentTypeError(f"s must lie in (0, 1], got {text}")
    return x


def _nonneg_int(text):
    try:
        k = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text}") from None
    if k < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative, got {text}")
    return k


def _factor(text):
    k = _nonneg_int(text)
    if k < 2:
        raise argparse.ArgumentTypeError(f"m must be at least 2, got {text}")
    return k


def _phi(text):
    try:
        return parse_snf(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--measure", action="append", default=[], help="measure file (JSON, schema version 1)")
    common.add_argument("--r", type=_positive, help="lattice spacing / ball radius")
    common.add_argument("--s", type=_power, default=None, help="power s in (0, 1]")
    common.add_argument("--alpha", type=_positive, default=1.0)
    common.add_argument("--rho", type=_positive, default=1.0)
    common.add_argument("--gamma", type=_positive, default=1.0)
    common.add_argument("--m", type=_factor, default=None, help="sublattice factor for the partition check")
    common.add_argument("--phi", type=_phi, default=None, help="norming function: p=1, p=2.5, inf, kyfan:k, lorentz[:w1,w2,...]")
    common.add_argument("--max-shell", type=_nonneg_int, default=None)
    common.add_argument("--degree", type=_nonneg_int, default=None)
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help=f"random seed (default {DEFAULT_SEED})")
    common.add_argument("--out", default=None, help="output path (default: stdout)")
    common.add_argument("--format", choices=("csv", "structured"), default="csv")
    common.add_argument("--suite", action="append", default=[], choices=sorted(SUITES))
    common.add_argument("--scale", type=_positive, default=1.0, help="multiply the measure by this factor")

    parser = _Parser(prog="fockideal", description="Toeplitz operators on the Fock space and their ideal norms.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("spectrum", parents=[common], help="s-numbers of T_nu (exact for atomic, compression otherwise)")
    sub.add_parser("chain", parents=[common], help="operator norm versus lattice averages")
    sub.add_parser("berezin", parents=[common], help="Berezin sandwich on the rho-lattice")
    sub.add_parser("verify", parents=[common], help="run the verification suites")
    return parser


def _emit(text: str, out):
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _one_measure(args):
    if len(args.measure) != 1:
        raise UsageError("exactly one --measure is required")
    nu = load_measure(args.measure[0])
    return nu.scaled(args.scale) if args.scale != 1 else nu


def _rows_text(rows, fmt):
    return rows_to_csv(rows) if fmt == "csv" else rows_to_structured(rows)


def cmd_spectrum(args) -> int:
    nu = _one_measure(args)
    if isinstance(nu, AtomicMeasure) and args.degree is None:
        if len(nu) == 0:
            raise UsageError("the measure has no atoms")
        comp = build_atomic(nu)
    else:
        if args.degree is None:
            raise UsageError("--degree is required for density measures")
        comp = build_truncated(nu, args.degree)
    sv = comp.s_numbers().values
    cols = {"s_number": sv}
    if args.s is not None:
        cols["s_power"] = sv**args.s
    if args.format == "csv":
        lines = [",".join(cols)]
        for j in range(sv.size):
            lines.append(",".join(repr(float(c[j])) for c in cols.values()))
        text = "\n".join(lines) + "\n"
    else:
        doc = {"mode": comp.mode, "exact": comp.exact, "degree": comp.degree}
        doc.update({k: [float(x) for x in v] for k, v in cols.items()})
        text = json.dumps(doc, indent=1) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_chain(args) -> int:
    if args.r is None:
        raise UsageError("chain needs --r")
    nu = _one_measure(args)
    if not isinstance(nu, AtomicMeasure):
        raise MeasureFormatError("chain needs an atomic measure")
    s = 1.0 if args.s is None else args.s
    phi = args.phi or parse_snf("p=1")
    rep = main_chain(nu, args.r, s, args.alpha, phi, max_shell=args.max_shell)
    rows = [ReportRow.from_chain(rep, "chain-0")]
    if args.m is not None:
        v = partition_subadditivity(nu, args.r, args.m, s, phi)
        rows.append(
            ReportRow(
                "partition-0", "partition-subadditivity", nu.dimension, r=args.r, s=s, phi=rep.phi,
                lhs=v.full, rhs=v.class_sum, constant=float(args.m), ratio=v.full / v.class_sum if v.class_sum else math.nan,
                verdict="pass" if v.passed else "fail", err_cert=0.0,
            )
        )
    _emit(_rows_text(rows, args.format), args.out)
    return EXIT_OK if all(r.verdict.startswith("pass") for r in rows) else EXIT_NUMERIC


def cmd_berezin(args) -> int:
    nu = _one_measure(args)
    if not nu.compact:
        raise MeasureFormatError("the sandwich needs a compactly supported (atomic) measure")
    s = 1.0 if args.s is None else args.s
    phi = args.phi or parse_snf("p=1")
    v = berezin_sandwich(nu, args.rho, args.gamma, args.alpha, s, phi, max_shell=args.max_shell)
    row = ReportRow.from_sandwich(v, "berezin-0", nu.dimension)
    _emit(_rows_text([row], args.format), args.out)
    return EXIT_OK if v.passed else EXIT_NUMERIC


def cmd_verify(args) -> int:
    from .verify import run_suites

    # parse every measure before any suite runs
    measures = [load_measure(p) for p in args.measure]
    results = run_suites(args.seed, args.suite or None, measures or None)
    lines = [f"{'PASS' if r.passed else 'FAIL'} {r.name} max_violation={r.max_violation:.3e} {r.detail}" for r in results]
    _emit("\n".join(lines) + "\n", args.out)
    failed = [r.name for r in results if not r.passed]
    if failed:
        print(f"first failing suite: {failed[0]}", file=sys.stderr)
        return EXIT_NUMERIC
    return EXIT_OK


COMMANDS = {"spectrum": cmd_spectrum, "chain": cmd_chain, "berezin": cmd_berezin, "verify": cmd_verify}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        with np.errstate(over="ignore", under="ignore"):
            return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"fockideal: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (MeasureFormatError, OSError) as exc:
        print(f"fockideal: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (QuadratureError, ValueError, ArithmeticError, np.linalg.LinAlgError) as exc:
        print(f"fockideal: numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
