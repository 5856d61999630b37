"""
enumerate: list the cluster tilting objects of a Dynkin quiver.
"""

from __future__ import annotations

import argparse
import logging

from clusterposet.cluster import enumerate_cluster_tilting
from clusterposet.commands import (
    EXIT_OK,
    add_output_arguments,
    add_quiver_argument,
    emit,
    emit_json,
    load_quiver,
    report_header,
)
from clusterposet.helpers.render import tiltings_to_csv
from clusterposet.quiver import require_dynkin

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "enumerate",
        help="list all cluster tilting objects",
        description="Print the number of cluster tilting objects and each one "
        "as a sorted list of almost positive roots.",
    )
    add_quiver_argument(parser)
    add_output_arguments(parser, ("json", "csv"))
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    q = load_quiver(args.quiver)
    kind = require_dynkin(q)
    objects = enumerate_cluster_tilting(q)

    if args.format == "csv":
        emit(tiltings_to_csv(objects), args.out)
        return EXIT_OK

    emit_json({
        **report_header([args.quiver]),
        "quiver": q.to_dict(),
        "dynkin_type": str(kind),
        "count": len(objects),
        "objects": [t.to_json() for t in objects],
    }, args.out)
    return EXIT_OK
