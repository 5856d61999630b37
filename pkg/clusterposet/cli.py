"""
CLI Module

Entry point of the cluster-poset command: builds the parser from the
command modules, sets up logging and maps errors to exit codes.
"""

from __future__ import annotations

import argparse
import logging
from typing import List, Optional

from clusterposet import __version__
from clusterposet.commands import EXIT_FAILED, EXIT_USAGE, TOOL
from clusterposet.commands import enumeration, export, invariants, oracle, verify
from clusterposet.errors import ClusterPosetError, InvariantViolation
from clusterposet.logsetup import setup_logging

logger = logging.getLogger(__name__)

COMMANDS = (enumeration, export, verify, invariants, oracle)


# ------------------------------------------------------------
# Parser factory
# ------------------------------------------------------------

def create_parser() -> argparse.ArgumentParser:
    """
    Create the argument parser with one sub-command per command module.
    """
    parser = argparse.ArgumentParser(
        prog=TOOL,
        description="Cluster tilting posets, reflection functors and flip-flops.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--log-level",
        metavar="LEVEL",
        help="override [logging] level (DEBUG, INFO, WARNING, ...)",
    )

    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)
    for module in COMMANDS:
        module.register(subparsers)
    return parser


# ------------------------------------------------------------
# Main
# ------------------------------------------------------------

def main(argv: Optional[List[str]] = None) -> int:
    parser = create_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else 0

    try:
        setup_logging(args.log_level)
        logger.debug("Running %s", args.command)
        return args.handler(args)
    except InvariantViolation as exc:
        logger.error("Invariant violated: %s", exc)
        return EXIT_FAILED
    except (ClusterPosetError, OSError, ValueError) as exc:
        logger.error("%s: %s", args.command, exc)
        return EXIT_USAGE
    except KeyboardInterrupt:
        logger.info("Caught Ctrl+C, shutting down.")
        return EXIT_USAGE
