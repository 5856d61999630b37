"""
oracle: compare the cluster tilting poset of a linear A_n quiver with the
independently built Tamari lattice.
"""

from __future__ import annotations

import argparse
import logging

from clusterposet.cluster import tilting_poset
from clusterposet.commands import (
    EXIT_FAILED,
    EXIT_OK,
    add_quiver_argument,
    emit_json,
    load_quiver,
    report_header,
)
from clusterposet.errors import PreconditionError
from clusterposet.poset import are_isomorphic
from clusterposet.quiver import is_linear_orientation
from clusterposet.tamari import tamari

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "oracle",
        help="compare against an independent construction",
    )
    add_quiver_argument(parser)
    parser.add_argument("--check", choices=("tamari",), default="tamari")
    parser.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    q = load_quiver(args.quiver)
    if not is_linear_orientation(q):
        raise PreconditionError(f"the Tamari oracle only covers linearly oriented A_n, got {q}")

    poset = tilting_poset(q)
    lattice = tamari(q.n)
    result = are_isomorphic(poset, lattice)

    emit_json({
        **report_header([args.quiver]),
        "check": args.check,
        "quiver": q.to_dict(),
        "tilting_size": len(poset),
        "tamari_size": len(lattice),
        "isomorphic": result.found,
        "status": "pass" if result else "fail",
    }, args.out)

    logger.info("Tamari oracle on %s: %s", q, "pass" if result else "fail")
    return EXIT_OK if result else EXIT_FAILED
