"""Command-line front ends: polyseq, polyverify, polyaudit.

One argparse program with three subcommands, also installed as three
dedicated console scripts.  Exit codes: 0 success (or whitelisted audit
verdict), 1 unexpected identity failure, 2 usage error.  All rational values
cross the boundary in the canonical text form ("-3/4", "5").
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Callable, Sequence

from . import audit, classical, multifamily, polyfamily
from .audit import DEFAULT_ORDER, DEFAULT_SEED
from .classical import EulerConvention
from .exact import format_rational, parse_rational
from .multifamily import LogParams, MultiPolyEulerSpec
from .polylog import parse_kvector

ORDER_ENV = "POLYEULER_ORDER"

FAMILIES = (
    "bernoulli",
    "euler",
    "poly-bernoulli",
    "poly-euler",
    "poly-euler-sasaki",
    "multi-poly-bernoulli",
    "multi-poly-euler",
    "poly-euler-abc",
    "lonesum",
)


class UsageError(Exception):
    pass


def _default_order() -> int:
    raw = os.environ.get(ORDER_ENV)
    if raw is None:
        return DEFAULT_ORDER
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"{ORDER_ENV} must be an integer, got {raw!r}") from None
    if value < 0:
        raise UsageError(f"{ORDER_ENV} must be >= 0, got {value}")
    return value


def _seq_parser(prog: str = "polyseq") -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog=prog, description="Print one sequence family as a table.")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("--n", type=int, default=None, help="highest index (default: POLYEULER_ORDER or 10)")
    p.add_argument("--k", type=int, default=None, help="single polylogarithm index")
    p.add_argument("--ks", type=parse_kvector, default=None, help="comma-separated index vector, e.g. 2,1,-1")
    p.add_argument("--x", type=parse_rational, default=None, help="polynomial argument (rational)")
    p.add_argument("--alpha", type=parse_rational, default=None, help="ln a (rational)")
    p.add_argument("--beta", type=parse_rational, default=None, help="ln b (rational)")
    p.add_argument("--gamma", type=parse_rational, default=None, help="ln c (rational)")
    p.add_argument(
        "--convention",
        choices=[c.value for c in EulerConvention],
        default=EulerConvention.GENOCCHI_TYPE.value,
        help="Euler number convention (default genocchi)",
    )
    p.add_argument("--rows", type=int, default=None, help="lonesum row count")
    p.add_argument("--cols", type=int, default=None, help="lonesum column count")
    p.add_argument("--format", choices=("plain", "csv", "json"), default="plain")
    return p


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise UsageError(message)


def _sequence_for(args: argparse.Namespace) -> list[Fraction]:
    order = args.n if args.n is not None else _default_order()
    _require(order >= 0, "--n must be >= 0")
    x = args.x if args.x is not None else Fraction(0)
    family = args.family
    if family == "bernoulli":
        return classical.bernoulli_numbers(order)
    if family == "euler":
        return classical.euler_numbers(order, EulerConvention(args.convention))
    if family == "poly-bernoulli":
        _require(args.k is not None, "poly-bernoulli needs --k")
        return polyfamily.poly_bernoulli(args.k, x, order)
    if family == "poly-euler":
        _require(args.k is not None, "poly-euler needs --k")
        return polyfamily.poly_euler(args.k, x, order)
    if family == "poly-euler-sasaki":
        _require(args.k is not None, "poly-euler-sasaki needs --k")
        return polyfamily.poly_euler_sasaki(args.k, order)
    if family == "multi-poly-bernoulli":
        _require(args.ks is not None, "multi-poly-bernoulli needs --ks")
        return multifamily.multi_poly_bernoulli(args.ks, order)
    if family == "multi-poly-euler":
        _require(args.ks is not None, "multi-poly-euler needs --ks")
        _require(
            (args.alpha is None) == (args.beta is None),
            "--alpha and --beta must be given together",
        )
        params = None
        if args.alpha is not None:
            params = LogParams(args.alpha, args.beta, args.gamma)
        elif args.gamma is not None:
            raise UsageError("--gamma needs --alpha and --beta")
        try:
            return MultiPolyEulerSpec(args.ks, x, params, order).evaluate()
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if family == "poly-euler-abc":
        _require(args.k is not None, "poly-euler-abc needs --k")
        _require(
            args.alpha is not None and args.beta is not None and args.gamma is not None,
            "poly-euler-abc needs --alpha, --beta and --gamma",
        )
        return multifamily.poly_euler_abc(
            args.k, x, LogParams(args.alpha, args.beta, args.gamma), order
        )
    raise UsageError(f"unknown family {family!r}")


def _print_table(values: Sequence[Fraction], fmt: str, out) -> None:
    if fmt == "plain":
        for n, v in enumerate(values):
            print(f"{n}\t{format_rational(v)}", file=out)
    elif fmt == "csv":
        print("n,value", file=out)
        for n, v in enumerate(values):
            print(f"{n},{format_rational(v)}", file=out)
    else:
        rows = [{"n": n, "value": format_rational(v)} for n, v in enumerate(values)]
        print(json.dumps(rows, indent=2), file=out)


def cmd_seq(args: argparse.Namespace, out=None) -> int:
    out = out if out is not None else sys.stdout
    if args.family == "lonesum":
        _require(args.rows is not None and args.cols is not None, "lonesum needs --rows and --cols")
        try:
            count = polyfamily.lonesum_count(args.rows, args.cols)
        except (polyfamily.TooLarge, ValueError) as exc:
            raise UsageError(str(exc)) from None
        if args.format == "plain":
            print(count, file=out)
        elif args.format == "csv":
            print("rows,cols,value", file=out)
            print(f"{args.rows},{args.cols},{count}", file=out)
        else:
            print(
                json.dumps({"rows": args.rows, "cols": args.cols, "value": str(count)}, indent=2),
                file=out,
            )
        return 0
    _print_table(_sequence_for(args), args.format, out)
    return 0


def _verify_parser(prog: str = "polyverify") -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog=prog, description="Check one registered identity.")
    p.add_argument("identity", help="identity id, e.g. thm2 (see polyverify --list)")
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--variant", default=None)
    return p


def _result_line(result: audit.CaseResult, order: int, seed: int) -> str:
    line = f"{result.label}: {result.verdict} (grid={result.grid_size}) [order={order} seed={seed}]"
    if result.verdict != audit.PASS and audit.is_expected(result):
        line += " (whitelisted)"
    if result.counterexample is not None:
        params = " ".join(f"{k}={v}" for k, v in result.counterexample["params"].items())
        line += (
            f" counterexample: {params} expected {result.counterexample['expected']}"
            f" got {result.counterexample['actual']}"
        )
    return line


def cmd_verify(args: argparse.Namespace, out=None) -> int:
    out = out if out is not None else sys.stdout
    order = args.order if args.order is not None else _default_order()
    cases = [c for c in audit.build_registry(args.seed, order) if c.id == args.identity]
    if not cases:
        known = ", ".join(audit.registered_ids())
        raise UsageError(f"unknown identity {args.identity!r}; registered: {known}")
    if args.variant is not None:
        cases = [c for c in cases if c.variant == args.variant]
        if not cases:
            raise UsageError(f"identity {args.identity!r} has no variant {args.variant!r}")
    ok = True
    for case in cases:
        result = audit.run_identity(case)
        print(_result_line(result, order, args.seed), file=out)
        ok = ok and audit.is_expected(result)
    return 0 if ok else 1


def _audit_parser(prog: str = "polyaudit") -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog=prog, description="Run the full identity audit.")
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--out", default=None, help="write the JSON report here (default: stdout)")
    return p


def cmd_audit(args: argparse.Namespace, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    order = args.order if args.order is not None else _default_order()
    sink = None
    if args.out is not None:
        try:
            sink = open(args.out, "w", encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"cannot write {args.out!r}: {exc}") from None
    report = audit.run_all(args.seed, order)
    for result in report.cases:
        print(_result_line(result, order, args.seed), file=err)
    payload = audit.report_to_json(report)
    if sink is None:
        out.write(payload)
    else:
        with sink:
            sink.write(payload)
    return 0 if audit.report_ok(report) else 1


def _dispatch(parser_factory: Callable, runner: Callable, argv: Sequence[str] | None) -> int:
    parser = parser_factory()
    args = parser.parse_args(argv)
    try:
        return runner(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main_seq(argv: Sequence[str] | None = None) -> int:
    return _dispatch(_seq_parser, cmd_seq, argv)


def main_verify(argv: Sequence[str] | None = None) -> int:
    return _dispatch(_verify_parser, cmd_verify, argv)


def main_audit(argv: Sequence[str] | None = None) -> int:
    return _dispatch(_audit_parser, cmd_audit, argv)


def main(argv: Sequence[str] | None = None) -> int:
    """Root entry point with seq/verify/audit subcommands."""
    argv = list(sys.argv[1:] if argv is None else argv)
    commands = {"seq": main_seq, "verify": main_verify, "audit": main_audit}
    if not argv or argv[0] in ("-h", "--help"):
        print("usage: polyeuler {seq|verify|audit} ...", file=sys.stderr)
        return 0 if argv else 2
    runner = commands.get(argv[0])
    if runner is None:
        print(f"error: unknown command {argv[0]!r}; expected seq, verify or audit", file=sys.stderr)
        return 2
    return runner(argv[1:])
