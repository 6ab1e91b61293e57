"""Command-line front end: ``probdist <verb> [options]``.

Results go to stdout one value per line; warnings and diagnostics go to
stderr.
"""

from __future__ import annotations

import argparse
import csv
import math
import re
import sys
import warnings
from decimal import Decimal
from typing import Optional, Sequence

from .chisq import independence_test
from .errors import (
    ConvergenceError,
    DomainError,
    ParameterError,
    SupportError,
    TableError,
    UnknownDistributionError,
)
from .families import FAMILIES, make_builtin
from .rng import seed_state

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_UNKNOWN_DISTRIBUTION = 3
EXIT_BAD_PARAMETER = 4
EXIT_BAD_TABLE = 5
EXIT_DOMAIN = 6
EXIT_NO_CONVERGENCE = 7

EPILOG = f"""\
distributions (parameters):
{chr(10).join(f"  {name:<18} {', '.join(f.params)}" for name, f in FAMILIES.items())}

exit status:
  {EXIT_OK}  success
  {EXIT_USAGE}  usage error (bad or missing arguments)
  {EXIT_UNKNOWN_DISTRIBUTION}  unknown distribution kind
  {EXIT_BAD_PARAMETER}  malformed or invalid distribution parameter
  {EXIT_BAD_TABLE}  unreadable or invalid contingency table
  {EXIT_DOMAIN}  argument outside an operation's domain
  {EXIT_NO_CONVERGENCE}  numerical procedure did not converge
"""

_INT_RE = re.compile(r"[+-]?\d+")


class CLIError(Exception):
    def __init__(self, message: str, status: int):
        super().__init__(message)
        self.status = status


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CLIError(message, EXIT_USAGE)


def format_number(value, digits: int = 15) -> str:
    """Shortest round-trip decimal for ``value``, capped at ``digits`` significant digits."""
    if isinstance(value, int) and not isinstance(value, bool):
        return str(value)
    value = float(value)
    if not math.isfinite(value):
        return repr(value)
    text = repr(value)
    if len(Decimal(text).normalize().as_tuple().digits) > digits:
        return f"{value:.{digits}g}"
    return text[:-2] if text.endswith(".0") else text


def parse_params(text: str) -> dict:
    params = {}
    if not text:
        return params
    for item in text.split(","):
        name, sep, raw = item.partition("=")
        name, raw = name.strip(), raw.strip()
        if not sep or not name or not raw:
            raise CLIError(f"malformed parameter {item!r}; expected name=value", EXIT_BAD_PARAMETER)
        if name in params:
            raise CLIError(f"parameter {name!r} given twice", EXIT_BAD_PARAMETER)
        if _INT_RE.fullmatch(raw):
            params[name] = int(raw)
        else:
            try:
                params[name] = float(raw)
            except ValueError:
                raise CLIError(f"parameter {name}={raw!r} is not a number", EXIT_BAD_PARAMETER) from None
    return params


def read_table(path: str) -> list[list[int]]:
    """Read a headerless CSV of nonnegative integer counts."""
    try:
        with open(path, newline="", encoding="utf-8") as fh:
            lines = list(csv.reader(fh))
    except OSError as exc:
        raise CLIError(f"cannot read table {path!r}: {exc.strerror}", EXIT_BAD_TABLE) from None
    except (UnicodeDecodeError, csv.Error) as exc:
        raise CLIError(f"cannot parse table {path!r}: {exc}", EXIT_BAD_TABLE) from None
    while lines and not lines[-1]:
        lines.pop()
    rows = []
    for lineno, fields in enumerate(lines, start=1):
        row = []
        for field in fields:
            field = field.strip()
            if not re.fullmatch(r"\d+", field):
                raise CLIError(f"{path}:{lineno}: {field!r} is not a nonnegative integer", EXIT_BAD_TABLE)
            row.append(int(field))
        rows.append(row)
    return rows


def _number(text: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a number") from None


def _u64(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if not 0 <= value < 2 ** 64:
        raise argparse.ArgumentTypeError(f"{text!r} is not an unsigned 64-bit integer")
    return value


def _count(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 0:
        raise argparse.ArgumentTypeError("count must be nonnegative")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="probdist",
        description="Evaluate, invert and sample univariate distributions; test independence in count tables.",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    verbs = parser.add_subparsers(dest="verb", required=True, metavar="{density,cdf,quantile,sample,chisq}",
                                  parser_class=_Parser)

    def add_common(sub):
        sub.add_argument("--dist", required=True, help="distribution kind, e.g. normal")
        sub.add_argument("--params", default="", help="comma-separated name=value pairs, e.g. mu=0,sigma=1")
        sub.add_argument("--digits", type=int, default=15, help="significant digits in output (default 15)")

    sub = verbs.add_parser("density", help="density or mass at a point", epilog=EPILOG,
                           formatter_class=argparse.RawDescriptionHelpFormatter)
    add_common(sub)
    sub.add_argument("--at", type=_number, required=True)

    sub = verbs.add_parser("cdf", help="P(X <= x), or P(X > x) with --upper-tail", epilog=EPILOG,
                           formatter_class=argparse.RawDescriptionHelpFormatter)
    add_common(sub)
    sub.add_argument("--at", type=_number, required=True)
    sub.add_argument("--upper-tail", action="store_true")

    sub = verbs.add_parser("quantile", help="smallest x with P(X <= x) >= p", epilog=EPILOG,
                           formatter_class=argparse.RawDescriptionHelpFormatter)
    add_common(sub)
    sub.add_argument("--p", type=_number, required=True)
    sub.add_argument("--upper-tail", action="store_true")

    sub = verbs.add_parser("sample", help="random variates by inversion", epilog=EPILOG,
                           formatter_class=argparse.RawDescriptionHelpFormatter)
    add_common(sub)
    sub.add_argument("--n", type=_count, default=1, help="number of variates (default 1)")
    sub.add_argument("--seed", type=_u64, help="generator seed; derived from the clock if omitted")

    sub = verbs.add_parser("chisq", help="Pearson chi-squared test of independence", epilog=EPILOG,
                           formatter_class=argparse.RawDescriptionHelpFormatter)
    sub.add_argument("--table", required=True, help="CSV of counts, one row per line, no header")
    sub.add_argument("--digits", type=int, default=15)
    return parser


def _execute(args, out, err) -> None:
    if args.digits < 1:
        raise CLIError("--digits must be positive", EXIT_USAGE)
    fmt = lambda v: format_number(v, args.digits)  # noqa: E731

    if args.verb == "chisq":
        table = read_table(args.table)
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            result = independence_test(table)
        for w in caught:
            print(f"warning: {w.message}", file=err)
        print(fmt(result.statistic), file=out)
        print(fmt(result.degrees_of_freedom), file=out)
        print(fmt(result.p_value), file=out)
        return

    dist = make_builtin(args.dist, parse_params(args.params))
    if args.verb == "density":
        print(fmt(dist.density(args.at)), file=out)
    elif args.verb == "cdf":
        print(fmt(dist.probability(args.at, lower_tail=not args.upper_tail)), file=out)
    elif args.verb == "quantile":
        print(fmt(dist.quantile(args.p, lower_tail=not args.upper_tail)), file=out)
    elif args.verb == "sample":
        seed = args.seed
        if seed is None:
            state = seed_state()
            print(f"seed: {state.seed}", file=err)
        else:
            state = seed_state(seed)
        lines = [fmt(dist.random(state)) for _ in range(args.n)]
        if lines:
            out.write("\n".join(lines) + "\n")


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    """Parse ``argv`` and execute it; returns the exit status."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        try:
            args = parser.parse_args(argv)
        except SystemExit as exc:
            # --help
            return int(exc.code or 0)
        _execute(args, out, err)
    except CLIError as exc:
        print(f"probdist: error: {exc}", file=err)
        return exc.status
    except UnknownDistributionError as exc:
        print(f"probdist: error: {exc}", file=err)
        return EXIT_UNKNOWN_DISTRIBUTION
    except ParameterError as exc:
        print(f"probdist: error: {exc}", file=err)
        return EXIT_BAD_PARAMETER
    except TableError as exc:
        print(f"probdist: error: invalid table: {exc}", file=err)
        return EXIT_BAD_TABLE
    except (DomainError, SupportError) as exc:
        print(f"probdist: error: {exc}", file=err)
        return EXIT_DOMAIN
    except ConvergenceError as exc:
        print(f"probdist: error: {exc}", file=err)
        return EXIT_NO_CONVERGENCE
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
