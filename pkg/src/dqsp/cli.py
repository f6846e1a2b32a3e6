"""Command-line interface.

    dqsp normalize --algebra NAME EXPR
    dqsp degree --algebra NAME EXPR
    dqsp verify [--suite NAME] [--bound N] [--format text|json]
    dqsp presentations list | show NAME | load FILE

Exit codes: 0 on success / all checks passing, 1 when a verification check
fails, 2 on usage, parse or presentation errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .engine import Element, PresentationError
from .parser import EvaluationError, ParseError, evaluate_text
from .presentations import BUILTIN_NAMES, load_presentation
from .scalars import QScalar
from .tensor import TensorElement
from .verify import SUITE_NAMES, run_suite

__all__ = ["run_command", "main"]


class _UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def build_arg_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="dqsp",
                             description="Exact engine for the double-graded "
                                         "quantum superplane")
    sub = parser.add_subparsers(dest="command", required=True)

    norm = sub.add_parser("normalize", help="normal form of an expression")
    norm.add_argument("--algebra", required=True, help="presentation name or file")
    norm.add_argument("expr")

    deg = sub.add_parser("degree", help="homogeneous degree of an expression")
    deg.add_argument("--algebra", required=True)
    deg.add_argument("expr")

    ver = sub.add_parser("verify", help="run a verification suite")
    ver.add_argument("--suite", default="all", choices=SUITE_NAMES)
    ver.add_argument("--bound", type=int, default=None)
    ver.add_argument("--format", default="text", choices=("text", "json"))

    pres = sub.add_parser("presentations", help="inspect presentations")
    pres_sub = pres.add_subparsers(dest="subcommand", required=True)
    pres_sub.add_parser("list")
    show = pres_sub.add_parser("show")
    show.add_argument("name")
    load = pres_sub.add_parser("load")
    load.add_argument("path")

    return parser


def _render_result(value) -> str:
    if isinstance(value, (Element, TensorElement, QScalar)):
        return str(value)
    return repr(value)


def _cmd_normalize(args, out):
    pres = load_presentation(args.algebra)
    print(_render_result(evaluate_text(args.expr, pres)), file=out)
    return 0


def _cmd_degree(args, out):
    pres = load_presentation(args.algebra)
    value = evaluate_text(args.expr, pres)
    if isinstance(value, QScalar):
        degree = (0,) * pres.degree_length if not value.is_zero() else None
        print(f"({','.join('0' for _ in range(pres.degree_length))})"
              if degree else "inhomogeneous", file=out)
        return 0
    if isinstance(value, TensorElement):
        raise EvaluationError("degree takes an algebra element, not a tensor")
    degree = value.degree()
    print("inhomogeneous" if degree is None
          else "(" + ",".join(str(b) for b in degree) + ")", file=out)
    return 0


def _cmd_verify(args, out):
    report = run_suite(args.suite, args.bound)
    if args.format == "json":
        print(json.dumps(report.to_json(), indent=2, sort_keys=True), file=out)
    else:
        print(report.render_text(), file=out)
    return 0 if report.ok() else 1


def _cmd_presentations(args, out):
    if args.subcommand == "list":
        for name in BUILTIN_NAMES:
            print(name, file=out)
        return 0
    if args.subcommand == "show":
        pres = load_presentation(args.name)
    else:
        pres = load_presentation(args.path)
    print(f"name: {pres.name}", file=out)
    print("generators:", file=out)
    for gen in pres.generators:
        flags = []
        if gen.nilpotent:
            flags.append("nilpotent")
        if gen.step == -1:
            flags.append("inverse letter")
        suffix = f"  [{', '.join(flags)}]" if flags else ""
        print(f"  {gen.symbol:8s} degree {gen.z2_degree} "
              f"form-degree {gen.form_degree} {gen.kind}{suffix}", file=out)
    print("rules:", file=out)
    for (hi, lo), rule in sorted(pres.rules.items()):
        hi_sym = pres.slot_symbol[hi]
        lo_sym = pres.slot_symbol[lo]
        rhs = f"{rule.coeff}*{lo_sym}*{hi_sym}"
        if not rule.delta.is_zero():
            rhs += f" + {rule.delta}"
        print(f"  {hi_sym}*{lo_sym} -> {rhs}", file=out)
    return 0


def run_command(argv, out=None, err=None) -> int:
    """Run one CLI invocation; returns the exit code."""
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_arg_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "normalize":
            return _cmd_normalize(args, out)
        if args.command == "degree":
            return _cmd_degree(args, out)
        if args.command == "verify":
            return _cmd_verify(args, out)
        if args.command == "presentations":
            return _cmd_presentations(args, out)
        raise _UsageError(f"unknown command {args.command!r}")
    except _UsageError as exc:
        print(f"usage error: {exc}", file=err)
        return 2
    except (ParseError, EvaluationError, PresentationError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return 2


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))
