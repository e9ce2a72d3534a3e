"""Command line: ``csq expand``, ``csq ptable`` and ``csq verify``.

Exit status is 0 on success, 1 when a verification fails and 2 on usage
errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import csf, growth, verifier
from .intervalgraphs import DomainError, parse_area
from .parallel import resolve_threads

DEFAULT_VERIFY_N = 4
# largest sizes allowed without / with --slow
LIMITS = {"expand": (6, 7), "verify": (5, 6)}


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--slow", action="store_true", help="allow the larger sizes")
    p.add_argument("--seed", type=int, default=verifier.DEFAULT_SEED)
    p.add_argument(
        "--threads",
        default=None,
        help="worker processes, an integer or 'auto' (default: $CSQ_THREADS or 1)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="csq",
        description="Chromatic quasisymmetric functions of unit interval graphs "
        "and their tableau growth-process probabilities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="e-expansion coefficients of X(e; q)")
    p.add_argument("--e", required=True, help="area sequence, e.g. 0,0,1")
    _common(p)

    p = sub.add_parser("ptable", help="tableau and shape probabilities for e")
    p.add_argument("--e", required=True, help="area sequence, e.g. 0,0,1")
    p.add_argument("--lambda", dest="lam", default=None, help="restrict to one shape, e.g. 2,1")
    _common(p)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=verifier.SUITES + ("all",), default="all")
    p.add_argument("--n", type=int, default=DEFAULT_VERIFY_N)
    _common(p)
    return parser


def _area(parser: argparse.ArgumentParser, text: str):
    try:
        return parse_area(text)
    except DomainError as exc:
        parser.error(str(exc))


def _size_gate(parser, command: str, n: int, slow: bool) -> None:
    fast, slow_max = LIMITS[command]
    if n > slow_max:
        parser.error("%s supports n <= %d" % (command, slow_max))
    if n > fast and not slow:
        parser.error("%s with n=%d needs --slow" % (command, n))


def _emit(obj, fmt: str, text_lines) -> None:
    if fmt == "json":
        print(json.dumps(obj))
    else:
        for line in text_lines:
            print(line)


def cmd_expand(args, parser) -> int:
    e = _area(parser, args.e)
    _size_gate(parser, "expand", len(e), args.slow)
    threads = resolve_threads(args.threads)
    table = csf.e_expansion(csf.monomial_expansion(e, threads=threads))
    data = table.to_json()
    lines = ["c[%s] = %s" % (k, v) for k, v in data["coefficients"].items()]
    _emit(data, args.format, lines)
    return 0


def cmd_ptable(args, parser) -> int:
    e = _area(parser, args.e)
    data = growth.ptable(e)
    if args.lam is not None:
        try:
            lam = tuple(int(x) for x in args.lam.split(","))
        except ValueError:
            parser.error("cannot parse --lambda %r" % args.lam)
        if sum(lam) != len(e) or list(lam) != sorted(lam, reverse=True) or min(lam) < 1:
            parser.error("--lambda must be a partition of %d" % len(e))
        key = ",".join(map(str, lam))
        data["by_tableau"] = {
            t: v for t, v in data["by_tableau"].items()
            if tuple(len(r.split()) for r in t.split("/")) == lam
        }
        data["by_partition"] = {k: v for k, v in data["by_partition"].items() if k == key}
    lines = ["p[%s] = %s" % (k, v) for k, v in data["by_partition"].items()]
    lines += ["p_T[%s] = %s" % (k, v) for k, v in data["by_tableau"].items()]
    lines.append("sum = %s" % data["sum"])
    _emit(data, args.format, lines)
    return 0


def cmd_verify(args, parser) -> int:
    if args.n < 1:
        parser.error("--n must be at least 1")
    _size_gate(parser, "verify", args.n, args.slow)
    threads = resolve_threads(args.threads)
    reports = verifier.run_suite(args.suite, args.n, seed=args.seed, threads=threads)
    if args.format == "json":
        if len(reports) == 1:
            print(verifier.dumps(reports[0]))
        else:
            print(verifier.dumps(reports))
    else:
        for r in reports:
            print(r)
            for f in r.failures:
                print("  " + json.dumps(f))
    return 0 if all(r.passed for r in reports) else 1


COMMANDS = {"expand": cmd_expand, "ptable": cmd_ptable, "verify": cmd_verify}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        resolve_threads(args.threads)
    except ValueError as exc:
        parser.error(str(exc))
    try:
        return COMMANDS[args.command](args, parser)
    except (DomainError, growth.ProcessError) as exc:
        parser.error(str(exc))
    return 2


if __name__ == "__main__":
    sys.exit(main())
