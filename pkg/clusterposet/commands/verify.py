"""
verify: run the flip-flop, commutative-square or lemma checks and print a
JSON report; exit 1 when any check fails.
"""

from __future__ import annotations

import argparse
import logging

from clusterposet.checks import CheckResult, Report
from clusterposet.commands import (
    EXIT_FAILED,
    EXIT_OK,
    add_quiver_argument,
    add_vertex_argument,
    emit_json,
    load_quiver,
    report_header,
)
from clusterposet.errors import InvariantViolation, PreconditionError
from clusterposet.functors import verify_square
from clusterposet.lemmas import run_lemmas, verify_flip_flop
from clusterposet.quiver import Quiver

logger = logging.getLogger(__name__)

CHECKS = ("flipflop", "square", "lemmas")


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "verify",
        help="check the flip-flop theorem, the rho square or the lemma suite",
    )
    add_quiver_argument(parser)
    add_vertex_argument(parser)
    parser.add_argument("--check", choices=CHECKS, required=True)
    parser.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")
    parser.set_defaults(handler=run)


def _build_report(q: Quiver, args: argparse.Namespace) -> Report:
    if args.check == "lemmas":
        return run_lemmas(q)
    if args.vertex is None:
        raise PreconditionError(f"--check {args.check} needs --vertex (a sink)")
    if args.check == "flipflop":
        return verify_flip_flop(q, args.vertex)
    return verify_square(q, args.vertex)


def run(args: argparse.Namespace) -> int:
    q = load_quiver(args.quiver)
    header = {**report_header([args.quiver]), "check": args.check}

    try:
        report = _build_report(q, args)
    except (PreconditionError, InvariantViolation) as exc:
        # The report names the check that could not run; the exit code
        # still follows the error.
        failed = Report(subject=header)
        failed.add(CheckResult(args.check).fail({"error": type(exc).__name__}, str(exc)))
        emit_json(failed.to_dict(), args.out)
        raise

    report.subject = {**header, **report.subject}
    emit_json(report.to_dict(), args.out)

    if not report.passed:
        for failure in report.failures():
            logger.error("Check failed: %s %s", failure.check, failure.counterexample)
        return EXIT_FAILED
    return EXIT_OK
