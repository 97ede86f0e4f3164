"""Command-line front end.

Exit codes: 0 success, 2 usage error, 3 parse error, 4 validation error,
5 order mismatch, 6 size cap exceeded, 7 an experiment row failed its bound.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from switchlist import formats
from switchlist.core import (
    DimensionError,
    OrderMismatchError,
    SizeLimitError,
    SwitchListError,
    VarOrder,
    combine,
    compile,
    count_models,
    decompile,
    is_consistent,
    is_valid,
    negate,
    reindex,
    reorder,
    size_of,
)
from switchlist.experiments import EXPERIMENTS, run_experiment
from switchlist.families import FAMILY_NAMES, family_table
from switchlist.oracle import random_function

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_VALIDATION = 4
EXIT_ORDER_MISMATCH = 5
EXIT_SIZE_CAP = 6
EXIT_BOUND_FAILED = 7


def _exit_code(exc: Exception) -> int:
    if isinstance(exc, formats.ParseError):
        return EXIT_PARSE
    if isinstance(exc, OrderMismatchError):
        return EXIT_ORDER_MISMATCH
    if isinstance(exc, SizeLimitError):
        return EXIT_SIZE_CAP
    return EXIT_VALIDATION


def _emit(text: str, output: str) -> None:
    if output == "-":
        sys.stdout.write(text)
    else:
        Path(output).write_text(text, encoding="utf-8")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def cmd_compile(args) -> int:
    if args.family:
        if args.n is None or len(args.n) != 1:
            raise SwitchListError("--family needs a single --n value")
        table = family_table(args.family, args.n[0])
    elif args.random is not None:
        table = random_function(args.random, args.seed)
    elif args.table:
        table = formats.loads_table(_read(args.table))
    else:
        raise SwitchListError("give a table file, --family or --random")
    order = VarOrder.parse(args.order, table.n)
    sl = compile(reindex(table, VarOrder.identity(table.n), order), order)
    _emit(formats.dumps_switchlist(sl), args.output)
    print(f"size={size_of(sl)}", file=sys.stderr if args.output == "-" else sys.stdout)
    return EXIT_OK


def cmd_decompile(args) -> int:
    sl = formats.loads_switchlist(_read(args.file))
    table = reindex(decompile(sl), sl.order, VarOrder.identity(sl.n))
    _emit(formats.dumps_table(table), args.output)
    return EXIT_OK


def cmd_apply(args) -> int:
    sl1 = formats.loads_switchlist(_read(args.file1))
    sl2 = formats.loads_switchlist(_read(args.file2))
    if sl1.n != sl2.n:
        raise DimensionError(f"operands have {sl1.n} and {sl2.n} variables")
    _emit(formats.dumps_switchlist(combine(sl1, sl2, args.op)), args.output)
    return EXIT_OK


def cmd_negate(args) -> int:
    sl = formats.loads_switchlist(_read(args.file))
    _emit(formats.dumps_switchlist(negate(sl)), args.output)
    return EXIT_OK


def cmd_reorder(args) -> int:
    sl = formats.loads_switchlist(_read(args.file))
    target = VarOrder.parse(args.order, sl.n)
    _emit(formats.dumps_switchlist(reorder(sl, target)), args.output)
    return EXIT_OK


def cmd_query(args) -> int:
    sl = formats.loads_switchlist(_read(args.file))
    if args.query == "consistent":
        answer = str(is_consistent(sl)).lower()
    elif args.query == "valid":
        answer = str(is_valid(sl)).lower()
    else:
        answer = str(count_models(sl))
    _emit(answer + "\n", args.output)
    return EXIT_OK


def cmd_experiment(args) -> int:
    report = run_experiment(args.name, args.n or [4, 6, 8], workers=args.workers)
    _emit(report.to_csv(), args.output)
    for line in report.log:
        print(line, file=sys.stderr)
    if report.errors:
        return _exit_code(report.errors[0])
    if not report.all_hold:
        return EXIT_BOUND_FAILED
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="switchlist", description="Switch-list representations of Boolean functions."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        p.add_argument("--output", "-o", default="-", help="output path, '-' for stdout")
        return p

    p = add("compile", cmd_compile, "compile a canonical truth-table file under an order")
    p.add_argument("table", nargs="?", help="truth-table file ('-' for stdin)")
    p.add_argument("--order", default="identity", help="comma-separated permutation or 'identity'")
    p.add_argument("--family", choices=FAMILY_NAMES, help="compile a built-in family instead")
    p.add_argument("--n", type=_int_list, help="variable count for --family")
    p.add_argument("--random", type=int, metavar="N", help="compile a random function on N variables")
    p.add_argument("--seed", type=int, default=0, help="seed for --random")

    p = add("decompile", cmd_decompile, "expand a switch-list file to a canonical truth table")
    p.add_argument("file")

    p = add("apply", cmd_apply, "combine two switch-lists that share an order")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("--op", choices=("and", "or", "xor"), required=True)

    p = add("negate", cmd_negate, "complement a switch-list")
    p.add_argument("file")

    p = add("reorder", cmd_reorder, "re-express a switch-list under another order")
    p.add_argument("file")
    p.add_argument("--order", required=True)

    p = add("query", cmd_query, "answer consistency, validity or model-count queries")
    p.add_argument("file")
    p.add_argument("query", choices=("consistent", "valid", "count"))

    p = add("experiment", cmd_experiment, "run a reproduction experiment, CSV to output")
    p.add_argument("name", choices=EXPERIMENTS)
    p.add_argument("--n", type=_int_list, help="comma-separated variable counts (default 4,6,8)")
    p.add_argument("--workers", type=int, default=1, help="processes for the order search")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SwitchListError as exc:
        print(f"switchlist: {exc}", file=sys.stderr)
        return _exit_code(exc)
    except OSError as exc:
        print(f"switchlist: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
